"""Centralizers of semisimple elements on the dual side, in exponent arithmetic.

All torus points live in the dual torus of a split ``GSpin_{2n+1}``, whose
characters are the cocharacters ``e0*, ..., en*``.  A point ``s`` is a list
of exponents of a fixed generator ``g`` of ``F_{q^4}^×`` and a dual root
``b = Σ b_j e_j*`` vanishes on ``s`` when ``Σ b_j s_j ≡ 0 mod (q^4 - 1)``.

Each of the twelve catalog rows pairs a vertex of a facet (giving the
group ``G_i`` whose coroots are the dual roots) with a recipe for ``s``
and for the twisted Frobenius ``F``.  Genericity of the concrete witness
is checked against a symbolic model in which exponents are polynomials in
``q`` times free generators of known order.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .affweyl import affine_base, s_theta
from .drpackets import ConstraintViolation, dual_torus_element
from .lattice import matvec, transpose
from .rootdatum import GroupLabel, RootDatum, build_preset, cartan_type, center, pair

AMBIENT_DEGREE = 4


class NotRegularInLevi(ValueError):
    """A dual root of the Levi vanishes on the point."""


class MultipleOrbits(ValueError):
    """Frobenius has more than one orbit on the simple roots of I."""


class UnsupportedType(ValueError):
    """The centralizer type lies outside the certified A1^n / A2^n territory."""


class Accidental(ValueError):
    """The concrete witness has extra vanishing roots compared to the generic model."""


# ---------------------------------------------------------------------------
# exponent arithmetic
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class FqExponent:
    q: int
    K: int
    exponent: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "exponent", self.exponent % (self.q ** self.K - 1))


@dataclass(frozen=True)
class DualTorusPoint:
    q: int
    K: int
    coordinates: tuple[int, ...]

    def __post_init__(self) -> None:
        mod = self.q ** self.K - 1
        object.__setattr__(self, "coordinates", tuple(c % mod for c in self.coordinates))

    @property
    def modulus(self) -> int:
        return self.q ** self.K - 1

    def evaluate(self, character: Sequence[int]) -> int:
        return pair(character, self.coordinates) % self.modulus

    def exponents(self) -> list[FqExponent]:
        return [FqExponent(self.q, self.K, c) for c in self.coordinates]


# Polynomials in q are coefficient tuples, lowest degree first.
Poly = tuple[int, ...]


def _padd(a: Poly, b: Poly, k: int = 1) -> Poly:
    n = max(len(a), len(b))
    return tuple((a[i] if i < len(a) else 0) + k * (b[i] if i < len(b) else 0) for i in range(n))


def _pmul(a: Poly, b: Poly) -> Poly:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return tuple(out)


def _divides(d: Poly, p: Poly) -> bool:
    """Whether the monic polynomial ``d`` divides ``p`` in ℤ[q]."""
    rem = [Fraction(c) for c in p]
    while rem and rem[-1] == 0:
        rem.pop()
    while len(rem) >= len(d):
        lead = rem[-1] / d[-1]
        shift = len(rem) - len(d)
        for i, c in enumerate(d):
            rem[shift + i] -= lead * c
        while rem and rem[-1] == 0:
            rem.pop()
    return not rem


def _qpow(k: int) -> Poly:
    return tuple([0] * k + [1])


# ---------------------------------------------------------------------------
# case catalog
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Layout:
    """Coordinates of the Levi ``GL_k × (rank-two piece)`` inside ``GSpin_{2n+1}``.

    ``gl`` lists the ``GL_k`` coordinates in Coxeter order; ``pair`` the two
    coordinates of the rank-two piece; ``irreducible`` selects the twist of
    Frobenius on that piece.
    """

    n: int
    gl: tuple[int, ...]
    pair: tuple[int, int]
    irreducible: bool


@dataclass(frozen=True)
class DualCase:
    name: str
    family: str
    m: int
    layout: Layout
    vertex: tuple[Fraction, ...]
    partner: str
    subcase: int = 0
    expected_type: str = ""


def _half(n: int, coords: Sequence[int]) -> tuple[Fraction, ...]:
    return tuple(Fraction(1, 2) if i in coords else Fraction(0) for i in range(n + 1))


def _catalog() -> dict[tuple[str, int, int], tuple[DualCase, DualCase]]:
    out = {}
    for m in (1, 2):
        n = 2 * m + 2
        lay = Layout(n, tuple(range(1, 2 * m + 1)), (2 * m + 1, 2 * m + 2), m == 2)
        a = DualCase("0+", "plus", m, lay, _half(n, ()), f"{2 * m}+",
                     expected_type="A2^2" if m == 2 else "A2")
        b = DualCase(f"{2 * m}+", "plus", m, lay, _half(n, range(1, 2 * m + 1)), "0+",
                     expected_type="A1^2" if m == 2 else "A1")
        out[("plus", m, 0)] = (a, b)
    lay = Layout(4, (1, 2), (3, 4), False)
    out[("minus", 1, 0)] = (DualCase("2-", "minus", 1, lay, _half(4, (3, 4)), "4-", expected_type="A1"),
                            DualCase("4-", "minus", 1, lay, _half(4, (1, 2, 3, 4)), "2-", expected_type="A2"))
    lay = Layout(6, (1, 2, 3, 4), (5, 6), True)
    out[("dagger", 2, 0)] = (DualCase("1†", "dagger", 2, lay, _half(6, (5, 6)), "5†", expected_type="A1^2"),
                             DualCase("5†", "dagger", 2, lay, _half(6, range(1, 7)), "1†", expected_type="A2^2"))
    lay = Layout(4, (1, 2), (3, 4), False)
    for sub, (ta, tb) in ((1, ("A2", "A1")), (2, ("A1", "A2"))):
        out[("ddagger", 1, sub)] = (
            DualCase("0‡", "ddagger", 1, lay, _half(4, (4,)), "2‡", sub, ta),
            DualCase("2‡", "ddagger", 1, lay, _half(4, (4, 1, 2)), "0‡", sub, tb))
    return out


CASES = _catalog()
FAMILY_ALIASES = {"plus": "plus", "+": "plus", "minus": "minus", "-": "minus",
                  "dagger": "dagger", "†": "dagger", "ddagger": "ddagger", "‡": "ddagger"}


def case_pair(family: str, m: int | None = None, subcase: int | None = None) -> tuple[DualCase, DualCase]:
    family = FAMILY_ALIASES[family]
    if m is None:
        m = 2 if family == "dagger" else 1
    if subcase is None:
        subcase = 1 if family == "ddagger" else 0
    try:
        return CASES[(family, m, subcase)]
    except KeyError:
        raise KeyError(f"no catalog case ({family}, m={m}, case {subcase})") from None


def all_cases() -> list[DualCase]:
    return [c for pair_ in CASES.values() for c in pair_]


def levi_point(a: DualCase, b: DualCase) -> tuple[Fraction, ...]:
    return tuple((x + y) / 2 for x, y in zip(a.vertex, b.vertex))


@lru_cache(maxsize=None)
def ambient(n: int) -> RootDatum:
    return build_preset(GroupLabel("GSpinOdd", (n,)))


def _pairs_at(point: Sequence[Fraction], n: int) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
    """(root, coroot) pairs of the ambient integral at ``point``."""
    return [(r, c) for r, c in ambient(n).root_pairs() if pair(r, point).denominator == 1]


# ---------------------------------------------------------------------------
# torus points and Frobenius
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Witness:
    """Exponents of ``τ`` (one entry) or ``τ1, τ2`` (two entries) at a given q."""

    q: int
    exps: tuple[int, ...]


def _gl_entries(k: int, irreducible: bool, swap_basis: bool = False) -> list[tuple[str, int]]:
    """Symbolic entries of the ``GL_k`` block as (generator, q-power)."""
    if irreducible:
        return [("τ", i) for i in range(k)]
    return [("τ1", i) for i in range(k)]


def _pair_entries(case: DualCase) -> list[tuple[str, int]]:
    if case.layout.irreducible:
        return [("τ", 0), ("τ", 1)]
    if case.family == "ddagger" and case.subcase == 2:
        return [("τ2", 0), ("τ1", 0)]
    return [("τ1", 0), ("τ2", 0)]


def _similitude(case: DualCase) -> tuple[str, Poly]:
    """``c`` as a power of a generator: ``τ^{1+q²}`` or ``τ1^{1+q}``."""
    if case.layout.irreducible:
        return ("τ", (1, 0, 1))
    return ("τ1", (1, 1))


def symbolic_point(case: DualCase) -> list[dict[str, Poly]]:
    """Each coordinate as a map generator -> polynomial coefficient.

    Generators: ``τ`` (order ``(q-1)(q²+1)``), or ``τ1`` (order ``q²-1``)
    with ``μ = τ2/τ1`` (order ``q+1``).
    """
    lay = case.layout
    coords: list[dict[str, Poly]] = [dict() for _ in range(lay.n + 1)]
    gen, poly = _similitude(case)
    coords[0] = {gen: poly}

    def put(j: int, entry: tuple[str, int]) -> None:
        name, power = entry
        if name == "τ2":
            coords[j] = {"τ1": _qpow(power), "μ": _qpow(power)}
        else:
            coords[j] = {name: _qpow(power)}

    for j, e in zip(lay.gl, _gl_entries(len(lay.gl), lay.irreducible)):
        put(j, e)
    for j, e in zip(lay.pair, _pair_entries(case)):
        put(j, e)
    return coords


ORDER_POLY = {"τ": (-1, 1, -1, 1), "τ1": (-1, 0, 1), "μ": (1, 1)}


def generically_vanishes(case: DualCase, character: Sequence[int]) -> bool:
    total: dict[str, Poly] = {}
    for b, coord in zip(character, symbolic_point(case)):
        if b:
            for gen, poly in coord.items():
                total[gen] = _padd(total.get(gen, ()), poly, b)
    return all(_divides(ORDER_POLY[g], p) for g, p in total.items())


def _eval_poly(p: Poly, q: int) -> int:
    return sum(c * q ** i for i, c in enumerate(p))


def concrete_point(case: DualCase, witness: Witness) -> DualTorusPoint:
    """Validated exponents of ``s`` in ``F_{q^4}^×``."""
    q = witness.q
    mod = q ** AMBIENT_DEGREE - 1
    if case.layout.irreducible:
        dual_torus_element("irreducible", q, witness.exps)
        (a,) = witness.exps
        if a % (q + 1):
            raise ConstraintViolation("similitude τ^{1+q²} = τ^{q+q³} needs τ of order dividing (q-1)(q²+1)")
        values = {"τ": a}
    else:
        dual_torus_element("split", q, witness.exps)
        a1, a2 = witness.exps
        values = {"τ1": a1, "μ": a2 - a1}
    coords = []
    for coord in symbolic_point(case):
        coords.append(sum(_eval_poly(p, q) * values[g] for g, p in coord.items()) % mod)
    return DualTorusPoint(q, AMBIENT_DEGREE, tuple(coords))


def witness_candidates(q: int, irreducible: bool):
    """Valid witnesses in a fixed order: ``τ = g^a`` or ``(τ1, τ2)``."""
    mod = q ** AMBIENT_DEGREE - 1
    if irreducible:
        for a in range(q + 1, mod, q + 1):
            try:
                dual_torus_element("irreducible", q, (a,))
            except ConstraintViolation:
                continue
            yield Witness(q, (a,))
        return
    step = q * q + 1
    for a1 in range(step, mod, step):
        for y in range(1, q + 1):
            a2 = (a1 + step * (q - 1) * y) % mod
            try:
                dual_torus_element("split", q, (a1, a2))
            except ConstraintViolation:
                continue
            yield Witness(q, (a1, a2))


def frobenius_matrix(layout: Layout) -> list[list[int]]:
    """Integer ``A`` with ``F(s) = q·A·s`` on exponent coordinates."""
    n = layout.n
    A = [[0] * (n + 1) for _ in range(n + 1)]
    A[0][0] = 1
    k = len(layout.gl)
    for idx, j in enumerate(layout.gl):
        A[j][layout.gl[(idx - 1) % k]] = 1
    for j in range(1, n + 1):
        if j not in layout.gl and j not in layout.pair:
            A[j][j] = 1
    j1, j2 = layout.pair
    if layout.irreducible:
        A[j1][0], A[j1][j2] = 1, -1
        A[j2][j1] = 1
    else:
        for j in (j1, j2):
            A[j][0], A[j][j] = 1, -1
    return A


def frob_dual_action(p: DualTorusPoint, case: DualCase | Layout | str) -> DualTorusPoint:
    """The twisted Frobenius on a torus point.

    ``case`` may be a catalog case, a layout, or ``"GL_k"`` for the Coxeter
    twist on ``k`` coordinates.
    """
    if isinstance(case, str):
        k = int(case.split("_")[1])
        A = [[1 if i == (j + 1) % k else 0 for j in range(k)] for i in range(k)]
    else:
        layout = case.layout if isinstance(case, DualCase) else case
        A = frobenius_matrix(layout)
    image = matvec(A, p.coordinates)
    return DualTorusPoint(p.q, p.K, tuple(p.q * x for x in image))


def frob_on_characters(layout: Layout, character: Sequence[int]) -> tuple[int, ...]:
    """``F*`` with ``b(F s) = q·(F* b)(s)``."""
    return tuple(matvec(transpose(frobenius_matrix(layout)), character))


# ---------------------------------------------------------------------------
# centralizers
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CentralizerData:
    case: DualCase
    point: DualTorusPoint
    roots_I: tuple[tuple[int, ...], ...]
    positive: tuple[tuple[int, ...], ...]
    simple: tuple[tuple[int, ...], ...]
    cartan_type: str
    frob_orbits: tuple[tuple[tuple[int, ...], ...], ...]
    levi_roots: tuple[tuple[int, ...], ...]


def _indecomposable(pos: Sequence[tuple[int, ...]]) -> list[tuple[int, ...]]:
    ps = set(pos)
    return [a for a in pos
            if not any(tuple(x - y for x, y in zip(a, b)) in ps for b in pos if b != a)]


def _reflection(root: Sequence[int], coroot: Sequence[int]) -> tuple[tuple[int, ...], ...]:
    """Matrix of ``v ↦ v - ⟨root, v⟩ coroot`` on the cocharacter lattice."""
    n = len(root)
    return tuple(tuple(int(i == j) - coroot[i] * root[j] for j in range(n)) for i in range(n))


def _group(gens: Sequence[tuple[tuple[int, ...], ...]], n: int, limit: int = 10_000):
    ident = tuple(tuple(int(i == j) for j in range(n)) for i in range(n))
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for g in frontier:
            for s in gens:
                h = tuple(tuple(sum(s[i][k] * g[k][j] for k in range(n)) for j in range(n)) for i in range(n))
                if h not in seen:
                    seen.add(h)
                    nxt.append(h)
        if len(seen) > limit:
            raise RuntimeError("Weyl group enumeration exceeded its limit")
        frontier = nxt
    return seen


def _orbits(simple: Sequence[tuple[int, ...]], positive: Sequence[tuple[int, ...]],
            root_of: dict, layout: Layout) -> list[tuple[tuple[int, ...], ...]]:
    if not simple:
        return []
    n = len(simple[0])
    weyl = _group([_reflection(root_of[b], b) for b in simple], n)
    image = [frob_on_characters(layout, b) for b in simple]
    target = set(simple)
    fix = next((w for w in weyl if {tuple(matvec(w, v)) for v in image} == target), None)
    if fix is None:
        raise AssertionError("Frobenius does not preserve the centralizer root system")
    delta = {b: tuple(matvec(fix, v)) for b, v in zip(simple, image)}
    out, seen = [], set()
    for b in simple:
        if b in seen:
            continue
        orb, x = [], b
        while x not in orb:
            orb.append(x)
            x = delta[x]
        seen.update(orb)
        out.append(tuple(orb))
    return out


def centralizer(point: DualTorusPoint, case: DualCase, check_generic: bool = True) -> CentralizerData:
    """Roots of ``G_i`` (as dual roots) vanishing on ``point``, with type and orbits."""
    a, b = case_pair(case.family, case.m, case.subcase or None)
    n = case.layout.n
    levi = _pairs_at(levi_point(a, b), n)
    bad = [c for _, c in levi if point.evaluate(c) == 0]
    if bad:
        raise NotRegularInLevi(f"Levi dual roots vanish on s: {bad}")
    pairs = _pairs_at(case.vertex, n)
    I = [c for _, c in pairs if point.evaluate(c) == 0]
    if check_generic:
        generic = [c for _, c in pairs if generically_vanishes(case, c)]
        if set(generic) != set(I):
            raise Accidental(f"witness {point.coordinates} differs from the generic model")
    root_of = {c: r for r, c in pairs}
    pos_coroots = {c for r, c in ambient(n).positive_root_pairs()}
    positive = [c for c in I if c in pos_coroots]
    simple = _indecomposable(positive)
    ctype = cartan_type(simple, [root_of[c] for c in simple])
    if {frob_on_characters(case.layout, c) for c in I} != set(I):
        raise AssertionError("I is not stable under the dual Frobenius")
    orbits = _orbits(simple, positive, root_of, case.layout)
    return CentralizerData(case, point, tuple(I), tuple(positive), tuple(simple), ctype,
                           tuple(orbits), tuple(c for _, c in levi))


def centralizer_for(case: DualCase, q: int, witness: Witness | None = None) -> CentralizerData:
    """Centralizer data with the first non-accidental witness, or a given one."""
    if witness is not None:
        return centralizer(concrete_point(case, witness), case, check_generic=False)
    for w in witness_candidates(q, case.layout.irreducible):
        try:
            return centralizer(concrete_point(case, w), case)
        except (Accidental, NotRegularInLevi):
            continue
    raise LookupError(f"no generic witness for {case.name} at q = {q}")


def frob_orbit_count(cd: CentralizerData) -> int:
    return len(cd.frob_orbits)


def _type_exponent(ctype: str) -> int:
    """``|I⁺|`` if the type is ``A1^n`` or ``A2^n``."""
    if ctype == "T":
        return 0
    parts = ctype.split(" × ")
    total = 0
    for part in parts:
        base, _, power = part.partition("^")
        k = int(power) if power else 1
        if base == "A1":
            total += k
        elif base == "A2":
            total += 3 * k
        else:
            raise UnsupportedType(f"type {ctype} is outside A1^n / A2^n")
    if len({p.partition("^")[0] for p in parts}) > 1:
        raise UnsupportedType(f"mixed type {ctype}")
    return total


def hecke_parameter(cd: CentralizerData, q: int) -> int:
    """``q^{|I⁺|}`` for a single-orbit centralizer of type ``A1^n`` or ``A2^n``."""
    if frob_orbit_count(cd) != 1:
        raise MultipleOrbits(f"{frob_orbit_count(cd)} Frobenius orbits on the simple roots")
    e = _type_exponent(cd.cartan_type)
    if e != len(cd.positive):
        raise AssertionError("positive root count disagrees with the type")
    return q ** e


def parameter_pair(family: str, q: int, m: int | None = None, subcase: int | None = None) -> tuple[int, int]:
    a, b = case_pair(family, m, subcase)
    return hecke_parameter(centralizer_for(a, q), q), hecke_parameter(centralizer_for(b, q), q)


# ---------------------------------------------------------------------------
# Weyl conjugacy and the torus action of v[α, Θ]
# ---------------------------------------------------------------------------


class NotConjugate:
    def __repr__(self) -> str:
        return "NotConjugate"

    def __bool__(self) -> bool:
        return False


NOT_CONJUGATE = NotConjugate()


def symmetric_group_words(k: int) -> dict[tuple[int, ...], tuple[int, ...]]:
    """Each permutation of ``range(k)`` with a shortest word in ``s1..s_{k-1}``."""
    ident = tuple(range(k))
    words = {ident: ()}
    frontier = [ident]
    while frontier:
        nxt = []
        for perm in frontier:
            for i in range(k - 1):
                p = list(perm)
                p[i], p[i + 1] = p[i + 1], p[i]
                p = tuple(p)
                if p not in words:
                    words[p] = words[perm] + (i + 1,)
                    nxt.append(p)
        frontier = nxt
    return words


def word_to_permutation(word: Sequence[int], k: int) -> tuple[int, ...]:
    p = list(range(k))
    for i in reversed(word):
        p[i - 1], p[i] = p[i], p[i - 1]
    return tuple(p)


def weyl_conjugacy_test(s1: DualTorusPoint, s2: DualTorusPoint):
    """Shortest ``w ∈ S_k`` with ``w·s1 = s2`` on coordinates, or ``NOT_CONJUGATE``.

    The witness is ``(permutation, word)`` with ``(w·s)_i = s_{w^{-1}(i)}``.
    """
    if len(s1.coordinates) != len(s2.coordinates) or s1.modulus != s2.modulus:
        raise ValueError("points on different tori")
    k = len(s1.coordinates)
    best = None
    for perm, word in symmetric_group_words(k).items():
        moved = [0] * k
        for i, j in enumerate(perm):
            moved[j] = s1.coordinates[i]
        if tuple(moved) == s2.coordinates and (best is None or len(word) < len(best[1])):
            best = (perm, word)
    return best if best is not None else NOT_CONJUGATE


GL_BLOCK = {"plus": None, "minus": 2, "dagger": 4, "ddagger": 2}


def v_torus_action(family: str, coords: Sequence[int], m: int = 1) -> tuple[int, ...]:
    """``v[α, Θ]`` on ``∏ e_j*(λ_j)``, written additively in exponents."""
    family = FAMILY_ALIASES[family]
    k = GL_BLOCK[family] or 2 * m
    lam = list(coords)
    out = [lam[0] + sum(lam[1:k + 1])]
    out += [-lam[k + 1 - i] for i in range(1, k + 1)]
    out += lam[k + 1:]
    return tuple(out)


BASE_NAMES = {"plus": "+", "minus": "-", "dagger": "dagger", "ddagger": "ddagger"}


def v_linear_parts(family: str, m: int = 1) -> list[tuple[tuple[int, ...], ...]]:
    """Linear parts of the ``v[α, Θ]`` generators of the corresponding affine base."""
    family = FAMILY_ALIASES[family]
    base = affine_base(BASE_NAMES[family], m)
    return [g.element.linear for g in s_theta(base) if g.name.startswith("v[")]


# ---------------------------------------------------------------------------
# connected-center lift
# ---------------------------------------------------------------------------


PRIMED = {
    ("0+", 1): GroupLabel("GSpinOdd", (4,)),
    ("0+", 2): GroupLabel("GSpinOdd", (6,)),
    ("2+", 1): GroupLabel("TildeQuotient", (2, 2)),
    ("4+", 2): GroupLabel("TildeQuotient", (4, 2)),
    ("2-", 1): GroupLabel("TildeQuotient", (2, 2)),
    ("4-", 1): GroupLabel("GSpinTilde", (4,)),
    ("1†", 2): GroupLabel("TildeQuotient", (2, 4)),
    ("5†", 2): GroupLabel("GSpinTilde", (6,)),
    ("0‡", 1): GroupLabel("SpinQuotient", (1, 3)),
    ("2‡", 1): GroupLabel("TildeQuotient", (3, 1)),
}


@dataclass(frozen=True)
class PrimedLift:
    label: GroupLabel
    connected_center: bool
    cartan_type: str
    matches: bool


def primed_lift(case: DualCase) -> PrimedLift:
    """Compare ``G_i`` with its connected-center cover ``G'_i``."""
    label = PRIMED[(case.name, case.m)]
    rd = build_preset(label)
    primed_type = cartan_type(rd.simple_roots, rd.simple_coroots)
    positive = set(ambient(case.layout.n).positive_root_pairs())
    pairs = [rc for rc in _pairs_at(case.vertex, case.layout.n) if rc in positive]
    simple = _indecomposable([r for r, _ in pairs])
    coroot_of = dict(pairs)
    here = cartan_type(simple, [coroot_of[r] for r in simple])
    cen = center(rd)
    return PrimedLift(label, cen.is_connected, primed_type, _same_components(primed_type, here))


def _same_components(a: str, b: str) -> bool:
    return sorted(a.split(" × ")) == sorted(b.split(" × "))


def format_dual_root(c: Sequence[int], n: int) -> str:
    """``e1* + e3* - e0*`` style, with the central coordinate last."""
    labels = ambient(n).Xv.basis_labels
    order = list(range(1, len(c))) + [0]
    terms = []
    for i in order:
        k = c[i]
        if not k:
            continue
        mag = "" if abs(k) == 1 else str(abs(k))
        sign = "-" if k < 0 else "+"
        terms.append((sign, f"{mag}{labels[i]}"))
    if not terms:
        return "0"
    first_sign, first = terms[0]
    text = ("-" if first_sign == "-" else "") + first
    for sign, t in terms[1:]:
        text += f" {sign} {t}"
    return text
