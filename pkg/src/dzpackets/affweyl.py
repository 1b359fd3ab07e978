"""Affine Weyl groups acting on an apartment.

Points of the apartment are exact rational vectors in cocharacter
coordinates.  An :class:`AffineWeylElement` is ``x ↦ w·ϑ·x + t``; affine
roots are affine functions ``x ↦ ⟨a, x⟩ + k``.  The named affine bases
(``SO5``, ``+``, ``-``, ``dagger``, ``ddagger``) are built by
:func:`affine_base`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import permutations
from typing import Iterable, Sequence

from .lattice import (NoSolution, identity, in_integer_span, inverse, matmul, matvec,
                      rank, rational_solve, transpose)
from .rootdatum import RootDatum, pair, parse_combination


class DimensionMismatch(ValueError):
    """A point and an element live in apartments of different dimension."""


class NotElliptic(ValueError):
    """``I - wϑ`` is singular, so there is no unique fixed point."""


NotEllipitic = NotElliptic


class NotSpherical(ValueError):
    """The chosen affine roots generate an infinite reflection group."""


class UnsupportedTheta(ValueError):
    """No catalog generator set exists for this subset of the affine base."""


def _frac(v: Iterable) -> tuple[Fraction, ...]:
    return tuple(Fraction(x) for x in v)


def _int_matrix(m: Sequence[Sequence]) -> tuple[tuple[int, ...], ...]:
    out = []
    for row in m:
        r = []
        for x in row:
            x = Fraction(x)
            if x.denominator != 1:
                raise ValueError("finite part must be an integer matrix")
            r.append(int(x))
        out.append(tuple(r))
    return tuple(out)


# ---------------------------------------------------------------------------
# points, elements and affine roots
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ApartmentPoint:
    coordinates: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "coordinates", _frac(self.coordinates))

    @property
    def dim(self) -> int:
        return len(self.coordinates)

    def __iter__(self):
        return iter(self.coordinates)

    def __len__(self) -> int:
        return len(self.coordinates)

    def __getitem__(self, i):
        return self.coordinates[i]

    def __add__(self, other: Sequence) -> "ApartmentPoint":
        return ApartmentPoint(tuple(a + Fraction(b) for a, b in zip(self.coordinates, other)))

    def __sub__(self, other: Sequence) -> "ApartmentPoint":
        return ApartmentPoint(tuple(a - Fraction(b) for a, b in zip(self.coordinates, other)))


def point(*coords) -> ApartmentPoint:
    if len(coords) == 1 and not isinstance(coords[0], (int, Fraction)):
        coords = tuple(coords[0])
    return ApartmentPoint(tuple(coords))


def format_point(p: Sequence, labels: Sequence[str]) -> str:
    """Display a point as ``1/2(e1* + e2*)`` when it has a common denominator."""
    coords = _frac(p)
    if not any(coords):
        return "0"
    den = 1
    for c in coords:
        den = den * c.denominator // _gcd(den, c.denominator)
    ints = [int(c * den) for c in coords]
    from .lattice import format_combination
    body = format_combination(ints, labels)
    if den == 1:
        return body
    return f"1/{den}({body})"


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return abs(a)


@dataclass(frozen=True)
class AffineWeylElement:
    """The affine map ``x ↦ w·ϑ·x + translation``.

    ``theta`` is the twist slot; it is the identity throughout the catalog
    but composition keeps ``w`` and ``ϑ`` apart.
    """

    finite_part: tuple[tuple[int, ...], ...]
    translation: tuple[Fraction, ...]
    theta: tuple[tuple[int, ...], ...] | None = None

    def __post_init__(self) -> None:
        w = _int_matrix(self.finite_part)
        n = len(w)
        if any(len(r) != n for r in w):
            raise ValueError("finite part must be square")
        t = _frac(self.translation)
        if len(t) != n:
            raise DimensionMismatch("translation length differs from the matrix size")
        th = _int_matrix(self.theta) if self.theta is not None else _int_matrix(identity(n))
        object.__setattr__(self, "finite_part", w)
        object.__setattr__(self, "translation", t)
        object.__setattr__(self, "theta", th)

    @classmethod
    def identity(cls, n: int) -> "AffineWeylElement":
        return cls(identity(n), (0,) * n)

    @classmethod
    def translation_by(cls, v: Sequence) -> "AffineWeylElement":
        n = len(v)
        return cls(identity(n), tuple(v))

    @property
    def dim(self) -> int:
        return len(self.translation)

    @property
    def linear(self) -> tuple[tuple[int, ...], ...]:
        """The full linear part ``w·ϑ``."""
        return _int_matrix(matmul(self.finite_part, self.theta))

    def __call__(self, p: Sequence) -> ApartmentPoint:
        return act(self, p)

    def __mul__(self, other: "AffineWeylElement") -> "AffineWeylElement":
        if self.dim != other.dim:
            raise DimensionMismatch("elements of different dimension")
        lin = matmul(self.linear, other.linear)
        th = matmul(self.theta, other.theta)
        w = matmul(lin, inverse(th))
        t = tuple(a + b for a, b in zip(matvec(self.linear, other.translation), self.translation))
        return AffineWeylElement(w, t, th)

    def inverse(self) -> "AffineWeylElement":
        # (wϑ)^{-1} = w'ϑ' with ϑ' = ϑ^{-1} and w' = (wϑ)^{-1}ϑ
        lin_inv = inverse(self.linear)
        t = tuple(-x for x in matvec(lin_inv, self.translation))
        return AffineWeylElement(matmul(lin_inv, self.theta), t, inverse(self.theta))

    def __pow__(self, k: int) -> "AffineWeylElement":
        base = self if k >= 0 else self.inverse()
        out = AffineWeylElement.identity(self.dim)
        for _ in range(abs(k)):
            out = out * base
        return out

    def is_identity(self) -> bool:
        return self.linear == _int_matrix(identity(self.dim)) and not any(self.translation)

    def is_translation(self) -> bool:
        return self.linear == _int_matrix(identity(self.dim))

    def describe(self, labels: Sequence[str] | None = None) -> str:
        labels = labels or [f"e{i}*" for i in range(self.dim)]
        return f"T({format_point(self.translation, labels)})·{[list(r) for r in self.linear]}"


def act(g: AffineWeylElement, p: Sequence) -> ApartmentPoint:
    """``g·p = wϑ(p) + t`` with exact arithmetic."""
    coords = _frac(p)
    if len(coords) != g.dim:
        raise DimensionMismatch(f"point has dimension {len(coords)}, element {g.dim}")
    return ApartmentPoint(tuple(a + b for a, b in zip(matvec(g.linear, coords), g.translation)))


@dataclass(frozen=True)
class AffineRoot:
    """The affine function ``x ↦ ⟨gradient, x⟩ + constant``."""

    gradient: tuple[int, ...]
    constant: Fraction
    coroot: tuple[int, ...]
    label: str = ""

    def __post_init__(self) -> None:
        object.__setattr__(self, "gradient", tuple(int(x) for x in self.gradient))
        object.__setattr__(self, "coroot", tuple(int(x) for x in self.coroot))
        object.__setattr__(self, "constant", Fraction(self.constant))

    def __call__(self, p: Sequence) -> Fraction:
        return pair(self.gradient, _frac(p)) + self.constant

    def key(self) -> tuple:
        return (self.gradient, self.constant)

    def negate(self) -> "AffineRoot":
        return AffineRoot(tuple(-x for x in self.gradient), -self.constant,
                          tuple(-x for x in self.coroot), f"-{self.label}")

    def reflection(self) -> AffineWeylElement:
        """``s(x) = x - (⟨a, x⟩ + k)·a∨``."""
        n = len(self.gradient)
        m = [[int(i == j) - self.coroot[i] * self.gradient[j] for j in range(n)] for i in range(n)]
        return AffineWeylElement(m, tuple(-self.constant * c for c in self.coroot))


def act_on_root(g: AffineWeylElement, alpha: AffineRoot) -> AffineRoot:
    """``(g·α)(x) = α(g⁻¹x)``."""
    lin_inv = inverse(g.linear)
    grad = matvec(transpose(lin_inv), alpha.gradient)
    co = matvec(g.linear, alpha.coroot)
    const = alpha.constant - pair(grad, g.translation)
    return AffineRoot(_int_vec(grad), const, _int_vec(co), alpha.label)


def _int_vec(v: Sequence) -> tuple[int, ...]:
    out = []
    for x in v:
        x = Fraction(x)
        if x.denominator != 1:
            raise ValueError("expected an integer vector")
        out.append(int(x))
    return tuple(out)


def subsystem_at(p: Sequence, roots: Sequence[Sequence[int]]) -> list[tuple[int, ...]]:
    """Roots taking an integer value at ``p``, in the given order."""
    coords = _frac(p)
    return [tuple(a) for a in roots if pair(a, coords).denominator == 1]


def fixed_point(sigma: AffineWeylElement) -> ApartmentPoint:
    """The unique fixed point of ``σ``, solving ``(I - wϑ)x = t``."""
    n = sigma.dim
    lin = sigma.linear
    m = [[int(i == j) - lin[i][j] for j in range(n)] for i in range(n)]
    if rank(m) < n:
        raise NotElliptic("I - wϑ is singular on this apartment")
    x = ApartmentPoint(rational_solve(m, sigma.translation))
    if act(sigma, x) != x:
        raise ArithmeticError("fixed point failed re-application")
    return x


# ---------------------------------------------------------------------------
# affine bases
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class AffineBase:
    """Simple affine roots ``Π`` together with the ambient data.

    ``translations`` generate the translation subgroup of the extended
    affine Weyl group; ``central`` lists the basis indices of central
    cocharacter directions (killed by every root).
    """

    name: str
    datum: RootDatum
    roots: tuple[AffineRoot, ...]
    translations: tuple[tuple[int, ...], ...]
    central: tuple[int, ...] = ()
    theta_removed: tuple[str, ...] = ()

    @property
    def dim(self) -> int:
        return self.datum.rank

    @property
    def labels(self) -> tuple[str, ...]:
        return tuple(r.label for r in self.roots)

    def root(self, label: str) -> AffineRoot:
        for r in self.roots:
            if r.label == label:
                return r
        raise KeyError(label)

    def finite_simple(self) -> list[AffineRoot]:
        return [r for r in self.roots if r.constant == 0]

    @property
    def theta(self) -> tuple[str, ...]:
        return tuple(lab for lab in self.labels if lab not in self.theta_removed)

    def contains(self, p: Sequence) -> bool:
        """Whether ``p`` lies in the open fundamental alcove."""
        return all(r(p) > 0 for r in self.roots)

    def interior_point(self) -> ApartmentPoint:
        """A point with every simple affine root equal, and central coordinates 0."""
        grads = [r.gradient for r in self.roots]
        # null-root coefficients c_j with Σ c_j a_j = 0, normalised by the constants
        coeffs = _null_relation(grads)
        total = sum(c * r.constant for c, r in zip(coeffs, self.roots))
        if total < 0:
            coeffs, total = [-c for c in coeffs], -total
        eps = Fraction(1) / sum(coeffs) * total
        rows = [list(r.gradient) for r in self.roots]
        rhs = [eps - r.constant for r in self.roots]
        for i in self.central:
            rows.append([int(j == i) for j in range(self.dim)])
            rhs.append(0)
        p = ApartmentPoint(rational_solve(rows, rhs))
        assert self.contains(p)
        return p


def _null_relation(grads: Sequence[Sequence[int]]) -> list[Fraction]:
    m = transpose(grads)
    n = len(grads)
    # find the one-dimensional kernel of the column map
    for drop in range(n):
        rest = [j for j in range(n) if j != drop]
        sub = [[m[i][j] for j in rest] for i in range(len(m))]
        target = [-m[i][drop] for i in range(len(m))]
        try:
            x = rational_solve(sub, target)
        except NoSolution:
            continue
        coeffs = [Fraction(0)] * n
        coeffs[drop] = Fraction(1)
        for j, v in zip(rest, x):
            coeffs[j] = v
        if all(c > 0 for c in coeffs) or all(c < 0 for c in coeffs):
            return [abs(c) for c in coeffs]
    raise ValueError("affine base gradients have no positive null relation")


_BASES = {
    # adjoint SO_5: Ω_C has order two
    "SO5": dict(datum=("SOOdd", (2,)), roots=[("α0", "- e1 - e2", 1), ("α1", "e1 - e2", 0), ("α2", "e2", 0)],
                translations="lattice", removed=()),
    # GSpin_{4m+5}, n = 2m + 2
    "+": dict(datum=None, roots=None, translations="lattice", removed=None),
    "-": dict(datum=("GSpinOdd", (4,)),
              roots=[("α0-", "- e3 - e4", 1), ("α1-", "e3 - e4", 0), ("α2-", "e4 - e1", 0),
                     ("α3-", "e1 - e2", 0), ("α4-", "e2", 0)],
              translations="lattice", removed=("α2-", "α4-")),
    "dagger": dict(datum=("GSpinOdd", (5,)),
                   roots=[("α0†", "- e5", 1), ("α1†", "e5 - e1", 0), ("α2†", "e1 - e2", 0),
                          ("α3†", "e2 - e3", 0), ("α4†", "e3 - e4", 0), ("α5†", "e4", 0)],
                   translations="coroots+central", removed=("α1†", "α5†")),
    "ddagger": dict(datum=("GSpinOdd", (3,)),
                    roots=[("α0‡", "- e1", 1), ("α1‡", "e1 - e2", 0), ("α2‡", "e2 - e3", 0),
                           ("α3‡", "e3", 0)],
                    translations="coroots+central", removed=("α0‡", "α2‡")),
}


def affine_base(name: str, m: int = 1) -> AffineBase:
    """One of the catalog affine bases.

    ``+`` is the standard base of ``GSpin_{4m+5}``; ``-`` is the alternative
    base of ``GSpin_9``; ``dagger`` and ``ddagger`` are the relative bases of
    the non-split forms in coordinates of their split torus; ``SO5`` is the
    adjoint apartment used by the packet tables.
    """
    if name not in _BASES:
        raise KeyError(f"unknown affine base {name!r}")
    spec = dict(_BASES[name])
    if name == "+":
        n = 2 * m + 2
        spec["datum"] = ("GSpinOdd", (n,))
        roots = [("α0+", "- e1 - e2", 1)]
        roots += [(f"α{i}+", f"e{i} - e{i + 1}", 0) for i in range(1, n)]
        roots.append((f"α{n}+", f"e{n}", 0))
        spec["roots"] = roots
        spec["removed"] = ("α0+", f"α{2 * m}+")
    from .rootdatum import _build
    rd = _build(*spec["datum"])
    labels = rd.X.basis_labels
    aroots = []
    for lab, grad, const in spec["roots"]:
        g = parse_combination(grad, labels)
        aroots.append(AffineRoot(g, const, rd.coroot(g), lab))
    central = tuple(i for i, l in enumerate(labels) if l == "e0")
    n = rd.rank
    if spec["translations"] == "lattice":
        trans = tuple(tuple(int(i == j) for j in range(n)) for i in range(n))
    else:
        trans = tuple(c for _, c in rd.root_pairs()) + tuple(
            tuple(int(j == i) for j in range(n)) for i in central)
    label = name if name != "+" else f"+ (m={m})"
    return AffineBase(label, rd, tuple(aroots), trans, central, tuple(spec["removed"]))


# ---------------------------------------------------------------------------
# Weyl group membership, longest elements and v[α, J]
# ---------------------------------------------------------------------------


def _finite_reflections(base: AffineBase) -> list[AffineWeylElement]:
    return [r.reflection() for r in base.finite_simple()]


def in_finite_weyl_group(base: AffineBase, mat: Sequence[Sequence[int]]) -> bool:
    """Whether a linear map of the cocharacter space lies in ``W_o``."""
    simple = base.finite_simple()
    rows = [list(r.gradient) for r in simple]
    rhs = [Fraction(k + 1, 1) for k in range(len(simple))]
    for i in base.central:
        rows.append([int(j == i) for j in range(base.dim)])
        rhs.append(1)
    v = rational_solve(rows, rhs)
    x = matvec(mat, v)
    w = [list(r) for r in identity(base.dim)]
    for _ in range(10_000):
        bad = next((r for r in simple if pair(r.gradient, x) < 0), None)
        if bad is None:
            break
        s = bad.reflection().linear
        x = matvec(s, x)
        w = matmul(s, w)
    # now w·mat fixes the regular point v; it must be the identity
    return [list(r) for r in matmul(w, mat)] == [list(r) for r in identity(base.dim)]


def longest_element(J: Sequence[AffineRoot]) -> AffineWeylElement:
    """Longest element of the finite group generated by reflections in ``J``."""
    if not J:
        raise NotSpherical("empty set of roots generates the trivial group; use the identity")
    n = len(J[0].gradient)
    grads = [r.gradient for r in J]
    if rank(grads) != len(grads):
        raise NotSpherical("gradients are linearly dependent")
    # start from a point where every root in J is positive and walk to the
    # opposite chamber
    v = rational_solve(grads, [1] * len(grads))
    x = v
    g = AffineWeylElement.identity(n)
    for _ in range(100_000):
        pos = next((r for r in J if pair(r.gradient, x) > 0), None)
        if pos is None:
            break
        s = pos.reflection()
        x = matvec(s.linear, x)
        g = s * g
    else:
        raise NotSpherical("reflection walk did not terminate")
    if not (g * g).is_identity():
        raise ArithmeticError("longest element is not an involution")
    return g


def longest_element_bfs(J: Sequence[AffineRoot], limit: int = 50_000) -> AffineWeylElement:
    """Independent oracle: breadth-first enumeration of ``W_J``."""
    n = len(J[0].gradient)
    gens = [r.reflection() for r in J]
    seen = {AffineWeylElement.identity(n): 0}
    frontier = [AffineWeylElement.identity(n)]
    while frontier:
        nxt = []
        for g in frontier:
            for s in gens:
                h = s * g
                if h not in seen:
                    seen[h] = seen[g] + 1
                    nxt.append(h)
                    if len(seen) > limit:
                        raise NotSpherical("group too large or infinite")
        frontier = nxt
    top = max(seen.values())
    longest = [g for g, k in seen.items() if k == top]
    assert len(longest) == 1
    return longest[0]


def weyl_group_size(J: Sequence[AffineRoot], limit: int = 50_000) -> int:
    n = len(J[0].gradient)
    gens = [r.reflection() for r in J]
    seen = {AffineWeylElement.identity(n)}
    frontier = list(seen)
    while frontier:
        nxt = []
        for g in frontier:
            for s in gens:
                h = s * g
                if h not in seen:
                    seen.add(h)
                    nxt.append(h)
                    if len(seen) > limit:
                        raise NotSpherical("group too large or infinite")
        frontier = nxt
    return len(seen)


def v_element(alpha: AffineRoot, J: Sequence[AffineRoot]) -> AffineWeylElement:
    """``v[α, J] = u·t`` with ``u``, ``t`` the longest elements of ``W_{J∪α}``, ``W_J``."""
    u = longest_element(list(J) + [alpha])
    n = len(alpha.gradient)
    t = longest_element(list(J)) if J else AffineWeylElement.identity(n)
    return u * t


def maps_set_to(g: AffineWeylElement, source: Sequence[AffineRoot], target: Sequence[AffineRoot]) -> bool:
    keys = {r.key() for r in target}
    return {act_on_root(g, r).key() for r in source} == keys


def permutation_of(g: AffineWeylElement, base: AffineBase) -> dict[str, str] | None:
    """Labels permutation induced on ``Π``, or ``None`` if ``g`` does not preserve it."""
    index = {r.key(): r.label for r in base.roots}
    out = {}
    for r in base.roots:
        img = act_on_root(g, r).key()
        if img not in index:
            return None
        out[r.label] = index[img]
    return out


# ---------------------------------------------------------------------------
# the group Ω of alcove-preserving elements
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class OmegaElement:
    element: AffineWeylElement
    permutation: tuple[tuple[str, str], ...]
    order: int
    power_is: AffineWeylElement  # element^order, a central translation

    @property
    def is_trivial_permutation(self) -> bool:
        return all(a == b for a, b in self.permutation)


@dataclass(frozen=True)
class OmegaGroup:
    base_name: str
    elements: tuple[OmegaElement, ...]
    generators: tuple[AffineWeylElement, ...]
    relations: tuple[str, ...] = field(default=())

    def element_for(self, perm: dict[str, str]) -> OmegaElement:
        key = tuple(sorted(perm.items()))
        for e in self.elements:
            if tuple(sorted(e.permutation)) == key:
                return e
        raise KeyError("permutation not realised in Ω")


def _diagram_automorphisms(base: AffineBase) -> list[tuple[int, ...]]:
    roots = base.roots
    k = len(roots)
    cm = [[pair(roots[j].gradient, roots[i].coroot) for j in range(k)] for i in range(k)]
    out = []
    for perm in permutations(range(k)):
        if all(cm[perm[i]][perm[j]] == cm[i][j] for i in range(k) for j in range(k)):
            out.append(perm)
    return out


def _realise(base: AffineBase, perm: Sequence[int]) -> AffineWeylElement | None:
    roots = base.roots
    n = base.dim
    # linear part: coroots go to the permuted coroots, central directions fixed
    src = [r.coroot for r in roots] + [tuple(int(j == i) for j in range(n)) for i in base.central]
    dst = [roots[perm[i]].coroot for i in range(len(roots))] + \
          [tuple(int(j == i) for j in range(n)) for i in base.central]
    try:
        cols = [rational_solve(src, [d[j] for d in dst]) for j in range(n)]
    except NoSolution:
        return None
    mat = [list(c) for c in cols]  # row j of F is the solution for coordinate j
    if any(Fraction(x).denominator != 1 for row in mat for x in row):
        return None
    mat = [[int(x) for x in row] for row in mat]
    if any(matvec(mat, s) != tuple(d) for s, d in zip(src, dst)):
        return None
    if not in_finite_weyl_group(base, mat):
        return None
    # translation: ⟨a_{π(i)}, t⟩ = k_i - k_{π(i)}
    rows = [list(roots[perm[i]].gradient) for i in range(len(roots))]
    rhs = [roots[i].constant - roots[perm[i]].constant for i in range(len(roots))]
    for i in base.central:
        rows.append([int(j == i) for j in range(n)])
        rhs.append(0)
    try:
        t = rational_solve(rows, rhs)
    except NoSolution:
        return None
    t = _lift_to_lattice(base, t)
    if t is None:
        return None
    g = AffineWeylElement(mat, t)
    if permutation_of(g, base) is None:
        return None
    return g


def _lift_to_lattice(base: AffineBase, t: Sequence[Fraction]) -> tuple[Fraction, ...] | None:
    """Move ``t`` along central directions into the translation lattice.

    Every catalog lattice contains the central unit vectors, so only the
    non-central coordinates matter and the central ones are set to 0.
    """
    cand = [Fraction(0) if j in base.central else Fraction(x) for j, x in enumerate(t)]
    if any(x.denominator != 1 for x in cand):
        return None
    if not in_integer_span(base.translations, [int(x) for x in cand]):
        return None
    return tuple(cand)


def omega_group(base: AffineBase) -> OmegaGroup:
    """Elements of the extended affine Weyl group stabilising the fundamental alcove.

    One representative is returned per realised diagram permutation,
    normalised so that ``g^order = T(k·z)`` with ``0 ≤ k < order`` for the
    central direction ``z``.
    """
    elements = []
    for perm in _diagram_automorphisms(base):
        g = _realise(base, perm)
        if g is None:
            continue
        perm_map = tuple((base.roots[i].label, base.roots[perm[i]].label) for i in range(len(perm)))
        order = 1
        while any(a != b for a, b in _perm_power(perm_map, order)):
            order += 1
        g = _normalise_central(base, g, order)
        elements.append(OmegaElement(g, perm_map, order, g ** order))
    elements.sort(key=lambda e: (not e.is_trivial_permutation, e.order))
    gens: list[AffineWeylElement] = []
    relations: list[str] = []
    central_generated = False
    labels = base.datum.Xv.basis_labels
    for e in elements:
        if e.is_trivial_permutation:
            continue
        gens.append(e.element)
        if base.central and e.power_is == AffineWeylElement.translation_by(_unit(base.dim, base.central[0])):
            central_generated = True
            relations.append(f"g^{e.order} = T({labels[base.central[0]]})")
        elif not e.power_is.is_translation() or any(e.power_is.translation):
            relations.append(f"g^{e.order} = {e.power_is.describe(labels)}")
        else:
            relations.append(f"g^{e.order} = 1")
    if base.central and not central_generated:
        gens.append(AffineWeylElement.translation_by(_unit(base.dim, base.central[0])))
        relations.append(f"T({labels[base.central[0]]}) is central")
    return OmegaGroup(base.name, tuple(elements), tuple(gens), tuple(relations))


def _unit(n: int, i: int) -> tuple[int, ...]:
    return tuple(int(j == i) for j in range(n))


def _perm_power(perm_map: Sequence[tuple[str, str]], k: int) -> list[tuple[str, str]]:
    d = dict(perm_map)
    out = []
    for a in d:
        b = a
        for _ in range(k):
            b = d[b]
        out.append((a, b))
    return out


def _normalise_central(base: AffineBase, g: AffineWeylElement, order: int) -> AffineWeylElement:
    if not base.central:
        return g
    c = base.central[0]
    power = g ** order
    k = power.translation[c]
    shift = -(k // order) if k.denominator == 1 else 0
    if shift:
        g = AffineWeylElement.translation_by(tuple(Fraction(shift) * x for x in _unit(base.dim, c))) * g
    return g


@dataclass(frozen=True)
class OmegaDecomposition:
    omega: AffineWeylElement
    w_affine: AffineWeylElement
    permutation: tuple[tuple[str, str], ...]
    word: tuple[str, ...]

    @property
    def sign(self) -> int:
        """``+1`` when ``ω`` induces the trivial permutation of ``Π``."""
        return 1 if all(a == b for a, b in self.permutation) else -1


def omega_decompose(g: AffineWeylElement, base: AffineBase) -> OmegaDecomposition:
    """Write ``g = ω·w°`` with ``ω`` stabilising the alcove and ``w°`` in the affine Weyl group."""
    p = base.interior_point()
    q = act(g, p)
    wprime = AffineWeylElement.identity(base.dim)
    word = []
    for _ in range(100_000):
        bad = next((r for r in base.roots if r(q) < 0), None)
        if bad is None:
            break
        s = bad.reflection()
        q = act(s, q)
        wprime = s * wprime
        word.append(bad.label)
    else:
        raise ArithmeticError("alcove walk did not terminate")
    omega = wprime * g
    perm = permutation_of(omega, base)
    if perm is None:
        raise ArithmeticError("ω does not stabilise the alcove")
    w0 = omega.inverse() * wprime.inverse() * omega
    assert omega * w0 == g
    return OmegaDecomposition(omega, w0, tuple(perm.items()), tuple(reversed(word)))


# ---------------------------------------------------------------------------
# generator sets S_Θ
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ThetaGenerator:
    name: str
    element: AffineWeylElement
    preserves_theta: bool
    involution: bool


def theta_roots(base: AffineBase) -> list[AffineRoot]:
    return [base.root(lab) for lab in base.theta]


def s_theta(base: AffineBase, theta: Sequence[str] | None = None) -> list[ThetaGenerator]:
    """Generators of the stabiliser of ``Θ`` for the four catalog cases.

    For each removed root ``α`` the element ``v[α, Θ]`` is included and
    checked; the alcove contribution is ``ν`` for the ``-`` base and the
    central translation otherwise.
    """
    if theta is not None and tuple(theta) != base.theta:
        raise UnsupportedTheta(f"no catalog generator set for Θ = {list(theta)} in {base.name}")
    if not base.theta_removed:
        raise UnsupportedTheta(f"base {base.name} has no catalog Θ")
    th = theta_roots(base)
    out = []
    for lab in base.theta_removed:
        v = v_element(base.root(lab), th)
        out.append(ThetaGenerator(f"v[{lab}, Θ]", v, maps_set_to(v, th, th), (v * v).is_identity()))
    omega = omega_group(base)
    if base.name == "-":
        nu = [e for e in omega.elements if not e.is_trivial_permutation]
        assert len(nu) == 1
        g = nu[0].element
        out.append(ThetaGenerator("ν", g, maps_set_to(g, th, th), (g * g).is_identity()))
    else:
        z = base.central[0]
        label = base.datum.Xv.basis_labels[z]
        g = AffineWeylElement.translation_by(_unit(base.dim, z))
        out.append(ThetaGenerator(f"T({label})", g, maps_set_to(g, th, th), False))
    return out


def nu_element(base: AffineBase) -> AffineWeylElement:
    """The non-trivial element of ``Ω`` for the ``+`` and ``-`` bases."""
    nontrivial = [e for e in omega_group(base).elements if not e.is_trivial_permutation]
    if len(nontrivial) != 1:
        raise ValueError(f"base {base.name} has {len(nontrivial)} non-trivial Ω elements")
    return nontrivial[0].element


def word_element(base: AffineBase, word: Sequence[str]) -> AffineWeylElement:
    """Product ``s_{w[0]} s_{w[1]} …`` of simple affine reflections."""
    g = AffineWeylElement.identity(base.dim)
    for lab in word:
        g = g * base.root(lab).reflection()
    return g
