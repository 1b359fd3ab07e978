"""Root data, their duals, diagonal quotients and centers.

A root datum is stored concretely: two labelled lattices ``X`` (characters)
and ``Xv`` (cocharacters) in dual bases, plus simple roots in ``X`` and
simple coroots in ``Xv``.  The pairing is the dot product of coordinates.

The preset catalog lives in ``data/presets.yaml``; :func:`build_preset`
expands its templates.
"""

from __future__ import annotations

import ast
import itertools
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from importlib import resources
from typing import Iterable, Sequence

import yaml

from .lattice import (FinAbGroup, FreeLattice, format_combination,
                      quotient_torsion, rank, rational_solve, transpose)

Vec = tuple[int, ...]


class UnknownLabel(KeyError):
    """The requested group is not in the preset catalog."""


class NotCentral(ValueError):
    """A glue cocharacter pairs non-trivially with some root."""


class Unrecognized(LookupError):
    """No catalog entry matches a based root datum."""


def pair(x: Sequence, y: Sequence):
    return sum(a * b for a, b in zip(x, y))


# ---------------------------------------------------------------------------
# root datum
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class RootDatum:
    X: FreeLattice
    Xv: FreeLattice
    simple_roots: tuple[Vec, ...]
    simple_coroots: tuple[Vec, ...]
    name: str = ""

    def __post_init__(self) -> None:
        roots = tuple(tuple(int(c) for c in r) for r in self.simple_roots)
        coroots = tuple(tuple(int(c) for c in r) for r in self.simple_coroots)
        object.__setattr__(self, "simple_roots", roots)
        object.__setattr__(self, "simple_coroots", coroots)
        if len(roots) != len(coroots):
            raise ValueError("need as many simple coroots as simple roots")
        if self.X.rank != self.Xv.rank:
            raise ValueError("character and cocharacter lattices must have equal rank")
        for a in roots:
            if len(a) != self.X.rank:
                raise ValueError("root has wrong length")
        cm = self.cartan_matrix()
        for i, row in enumerate(cm):
            for j, v in enumerate(row):
                if i == j and v != 2:
                    raise ValueError("Cartan matrix must have 2 on the diagonal")
                if i != j and v > 0:
                    raise ValueError("Cartan matrix off-diagonal entries must be <= 0")
                if i != j and (v == 0) != (cm[j][i] == 0):
                    raise ValueError("Cartan matrix zero pattern must be symmetric")

    @property
    def rank(self) -> int:
        return self.X.rank

    @property
    def semisimple_rank(self) -> int:
        return len(self.simple_roots)

    def cartan_matrix(self) -> list[list[int]]:
        """Entries ``⟨a_j, a_i∨⟩``."""
        return [[pair(aj, ai_v) for aj in self.simple_roots] for ai_v in self.simple_coroots]

    def reflect(self, root: Vec, coroot: Vec, x: Sequence) -> tuple:
        """Reflection ``s_a`` acting on a character ``x``."""
        k = pair(x, coroot)
        return tuple(xi - k * ai for xi, ai in zip(x, root))

    def reflect_co(self, root: Vec, coroot: Vec, y: Sequence) -> tuple:
        """Reflection ``s_a`` acting on a cocharacter ``y``."""
        k = pair(root, y)
        return tuple(yi - k * ci for yi, ci in zip(y, coroot))

    def root_pairs(self) -> tuple[tuple[Vec, Vec], ...]:
        return _root_pairs(self)

    def roots(self) -> list[Vec]:
        return [r for r, _ in self.root_pairs()]

    def coroot(self, root: Sequence[int]) -> Vec:
        for r, c in self.root_pairs():
            if r == tuple(root):
                return c
        raise KeyError(f"{root} is not a root")

    def simple_coefficients(self, root: Sequence[int]) -> tuple[Fraction, ...]:
        return rational_solve(transpose(self.simple_roots), root)

    def positive_root_pairs(self) -> list[tuple[Vec, Vec]]:
        out = []
        for r, c in self.root_pairs():
            coeffs = self.simple_coefficients(r)
            if all(x >= 0 for x in coeffs):
                out.append((tuple(int(x) for x in coeffs), r, c))
        out.sort(key=lambda t: (sum(t[0]), tuple(-x for x in t[0])))
        return [(r, c) for _, r, c in out]

    def format_root(self, r: Sequence) -> str:
        return format_combination(r, self.X.basis_labels)

    def format_coroot(self, c: Sequence) -> str:
        return format_combination(c, self.Xv.basis_labels)

    def same_as(self, other: "RootDatum") -> bool:
        """Equality of the integer data, ignoring names and labels."""
        return (self.rank == other.rank
                and self.simple_roots == other.simple_roots
                and self.simple_coroots == other.simple_coroots)


@lru_cache(maxsize=None)
def _root_pairs(rd: RootDatum) -> tuple[tuple[Vec, Vec], ...]:
    if rank(rd.simple_roots) != len(rd.simple_roots) and rd.simple_roots:
        raise ValueError("simple roots must be linearly independent")
    seen: dict[Vec, Vec] = {}
    frontier = list(zip(rd.simple_roots, rd.simple_coroots))
    for r, c in frontier:
        seen[r] = c
    limit = 10_000
    while frontier:
        nxt = []
        for r, c in frontier:
            for a, av in zip(rd.simple_roots, rd.simple_coroots):
                r2 = rd.reflect(a, av, r)
                c2 = rd.reflect_co(a, av, c)
                if r2 not in seen:
                    seen[r2] = c2
                    nxt.append((r2, c2))
                    if len(seen) > limit:
                        raise ValueError("reflection closure is not finite")
        frontier = nxt
    return tuple(seen.items())


def positive_roots(rd: RootDatum) -> list[Vec]:
    """Positive system generated from the simple roots, ordered by height."""
    return [r for r, _ in rd.positive_root_pairs()]


def dual(rd: RootDatum) -> RootDatum:
    """Swap characters with cocharacters and roots with coroots."""
    name = DUAL_NAMES.get(rd.name, f"({rd.name})^∨" if rd.name else "")
    return RootDatum(rd.Xv, rd.X, rd.simple_coroots, rd.simple_roots, name)


# ---------------------------------------------------------------------------
# Cartan types
# ---------------------------------------------------------------------------


def cartan_components(roots: Sequence[Vec], coroots: Sequence[Vec]) -> list[tuple[str, int, tuple[int, ...]]]:
    """Classify a Cartan matrix into classical Dynkin components.

    Returns ``(letter, rank, indices)`` per connected component, sorted so
    that equal types are adjacent.
    """
    n = len(roots)
    cm = [[pair(roots[j], coroots[i]) for j in range(n)] for i in range(n)]
    adj = {i: [j for j in range(n) if j != i and cm[i][j] != 0] for i in range(n)}
    comps, seen = [], set()
    for s in range(n):
        if s in seen:
            continue
        stack, comp = [s], []
        seen.add(s)
        while stack:
            v = stack.pop()
            comp.append(v)
            for w in adj[v]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        comps.append(sorted(comp))
    out = []
    for comp in comps:
        k = len(comp)
        edges = [(i, j) for i in comp for j in comp if i < j and cm[i][j] != 0]
        if len(edges) != k - 1:
            raise ValueError("Dynkin diagram is not a tree (affine or invalid)")
        prods = {(i, j): cm[i][j] * cm[j][i] for i, j in edges}
        degree = {i: len(adj[i]) for i in comp}
        if any(p == 3 for p in prods.values()):
            raise ValueError("exceptional type G2 is out of scope")
        doubles = [e for e, p in prods.items() if p == 2]
        if k == 1:
            letter = "A"
        elif not doubles:
            branch = [i for i in comp if degree[i] >= 3]
            if not branch:
                letter = "A"
            elif len(branch) == 1 and degree[branch[0]] == 3:
                arms = _arm_lengths(branch[0], adj)
                if sorted(arms)[:2] == [1, 1]:
                    letter = "D"
                else:
                    raise ValueError("exceptional type E is out of scope")
            else:
                raise ValueError("unsupported Dynkin diagram")
        elif len(doubles) == 1:
            i, j = doubles[0]
            # the short root s has <a_long, s∨> = -2
            short = j if cm[j][i] == -2 else i
            long_ = i if short == j else j
            if k == 2:
                letter = "B"
            elif degree[short] == 1:
                letter = "B"
            elif degree[long_] == 1:
                letter = "C"
            else:
                raise ValueError("exceptional type F4 is out of scope")
        else:
            raise ValueError("unsupported Dynkin diagram")
        out.append((letter, k, tuple(comp)))
    out.sort(key=lambda t: (t[0], t[1]))
    return out


def _arm_lengths(center: int, adj: dict[int, list[int]]) -> list[int]:
    arms = []
    for start in adj[center]:
        length, prev, cur = 1, center, start
        while True:
            nxt = [w for w in adj[cur] if w != prev]
            if not nxt:
                break
            prev, cur = cur, nxt[0]
            length += 1
        arms.append(length)
    return arms


def cartan_type(roots: Sequence[Vec], coroots: Sequence[Vec]) -> str:
    """A compact type string such as ``A1``, ``A1^2``, ``A2^2`` or ``B4 × D2``.

    The empty system is reported as ``T`` (a torus).
    """
    comps = cartan_components(roots, coroots)
    if not comps:
        return "T"
    parts = []
    for (letter, k), group in itertools.groupby(comps, key=lambda t: (t[0], t[1])):
        mult = len(list(group))
        name = f"{letter}{k}"
        parts.append(name if mult == 1 else f"{name}^{mult}")
    return " × ".join(parts)


# ---------------------------------------------------------------------------
# group labels and the preset catalog
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class GroupLabel:
    """Name of a catalog group.

    ``family`` is a key of the preset file; ``params`` holds its rank data
    (``(n,)`` or ``(m, n)``).  ``twisted`` marks the non-split unitary-type
    form of the even factor, written with a leading ``²``; the root datum of
    a twisted label is the split datum (the twist is a Frobenius action).
    """

    family: str
    params: tuple[int, ...]
    twisted: bool = False

    def __str__(self) -> str:
        spec = _family_spec(self.family)
        values = dict(zip(spec["params"], self.params))
        text = _render_display(spec["display"], values)
        if self.twisted:
            if self.family in ("SpinQuotient", "TildeQuotient"):
                text = text.replace("(GSpin", "(²GSpin", 1)
            else:
                text = "²" + text
        return text

    @classmethod
    def parse(cls, text: str) -> "GroupLabel":
        text = text.strip()
        twisted = text.count("²") == 1
        for family, spec in _catalog()["all"].items():
            for values in itertools.product(range(1, MAX_PARSE_RANK + 1), repeat=len(spec["params"])):
                label = cls(family, values, twisted)
                if str(label) == text:
                    return label
        raise UnknownLabel(text)


MAX_PARSE_RANK = 12


def _render_display(display: str, values: dict[str, int]) -> str:
    return _subst(display, values)


_ALLOWED = (ast.Expression, ast.BinOp, ast.UnaryOp, ast.Add, ast.Sub, ast.Mult,
            ast.USub, ast.UAdd, ast.Constant, ast.Name, ast.Load, ast.Compare,
            ast.GtE, ast.LtE, ast.Gt, ast.Lt, ast.Eq)


def _eval(expr: str, values: dict[str, int]):
    tree = ast.parse(str(expr), mode="eval")
    for node in ast.walk(tree):
        if not isinstance(node, _ALLOWED):
            raise ValueError(f"unsupported template expression {expr!r}")
    return eval(compile(tree, "<template>", "eval"), {"__builtins__": {}}, dict(values))


def _subst(template: str, values: dict[str, int]) -> str:
    return re.sub(r"\{([^}]*)\}", lambda m: str(_eval(m.group(1), values)), template)


_TERM = re.compile(r"^(\d*)([A-Za-z]-?\d+\*?)$")


def parse_combination(text: str, labels: Sequence[str]) -> Vec:
    """Parse ``"2e3* - e0*"`` against an ordered label list."""
    vec = [0] * len(labels)
    sign = 1
    for tok in text.split():
        if tok in "+-":
            sign = 1 if tok == "+" else -1
            continue
        neg = tok.startswith("-") and not _TERM.match(tok)
        body = tok[1:] if neg else tok
        m = _TERM.match(body)
        if not m:
            raise ValueError(f"bad term {tok!r} in {text!r}")
        coeff = int(m.group(1) or 1) * sign * (-1 if neg else 1)
        vec[labels.index(m.group(2))] += coeff
        sign = 1
    return tuple(vec)


@lru_cache(maxsize=1)
def _catalog() -> dict:
    raw = resources.files("dzpackets").joinpath("data/presets.yaml").read_text(encoding="utf-8")
    data = yaml.safe_load(raw)
    data["all"] = {**data["families"], **data["quotients"]}
    return data


def catalog_version() -> int:
    return int(_catalog()["version"])


def _family_spec(family: str) -> dict:
    try:
        return _catalog()["all"][family]
    except KeyError:
        raise UnknownLabel(family) from None


def catalog_families() -> list[str]:
    return list(_catalog()["all"])


def build_preset(label: GroupLabel | str) -> RootDatum:
    """Root datum of a catalog group (split form for twisted labels)."""
    if isinstance(label, str):
        label = GroupLabel.parse(label)
    return _build(label.family, tuple(label.params))


@lru_cache(maxsize=None)
def _build(family: str, params: tuple[int, ...]) -> RootDatum:
    spec = _family_spec(family)
    if len(params) != len(spec["params"]):
        raise UnknownLabel(f"{family}{params}")
    values = dict(zip(spec["params"], params))
    for k, lo in spec.get("min", {}).items():
        if values[k] < lo:
            raise UnknownLabel(f"{family}{params}")
    name = str(GroupLabel(family, params))
    if "factors" in spec:
        (f1, p1), (f2, p2) = spec["factors"]
        rd1 = _build(f1, (values[p1],))
        rd2 = _build(f2, (values[p2],))
        if "glue" in spec:
            out = quotient_by_diagonal(rd1, rd2, tuple(spec["glue"]))
        else:
            out = fiber_product(rd1, rd2, tuple(spec["fiber"]))
        return RootDatum(out.X, out.Xv, out.simple_roots, out.simple_coroots, name)
    lab = spec["labels"]
    lo, hi = _eval(lab["from"], values), _eval(lab["to"], values)
    xlabels = [f"{lab['letter']}{i}" for i in range(lo, hi + 1)]
    vlabels = [s + "*" for s in xlabels]
    roots, coroots = [], []
    for entry in spec["simple"]:
        if "when" in entry and not _eval(entry["when"], values):
            continue
        if "range" in entry:
            a, b = (_eval(x, values) for x in entry["range"])
            idx = range(a, b + 1)
        else:
            idx = [None]
        for i in idx:
            env = dict(values, **({} if i is None else {"i": i}))
            roots.append(parse_combination(_subst(entry["root"], env), xlabels))
            coroots.append(parse_combination(_subst(entry["coroot"], env), vlabels))
    return RootDatum(FreeLattice.standard(xlabels), FreeLattice.standard(vlabels),
                     tuple(roots), tuple(coroots), name)


# ---------------------------------------------------------------------------
# quotients and products
# ---------------------------------------------------------------------------


def _offset_labels(first: Sequence[str], second: Sequence[str]) -> list[str]:
    """Rename ``second`` to continue the numbering of ``first``."""
    letter = re.match(r"[A-Za-z]", first[0]).group(0)
    star = "*" if first[0].endswith("*") else ""
    top = max(int(re.search(r"-?\d+", s).group(0)) for s in first)
    return [f"{letter}{top + 1 + k}{star}" for k in range(len(second))]


def direct_product(rd1: RootDatum, rd2: RootDatum) -> RootDatum:
    n1, n2 = rd1.rank, rd2.rank
    xl = list(rd1.X.basis_labels) + ["f" + s for s in rd2.X.basis_labels]
    vl = list(rd1.Xv.basis_labels) + ["f" + s for s in rd2.Xv.basis_labels]
    roots = [r + (0,) * n2 for r in rd1.simple_roots] + [(0,) * n1 + r for r in rd2.simple_roots]
    cos = [c + (0,) * n2 for c in rd1.simple_coroots] + [(0,) * n1 + c for c in rd2.simple_coroots]
    return RootDatum(FreeLattice.standard(xl), FreeLattice.standard(vl), tuple(roots), tuple(cos),
                     f"{rd1.name} × {rd2.name}")


def quotient_by_diagonal(rd1: RootDatum, rd2: RootDatum,
                         glue: tuple[str, str] | None) -> RootDatum:
    """Quotient of ``G1 × G2`` identifying two central cocharacters.

    ``glue = (c1, c2)`` names a basis cocharacter of each factor.  The
    cocharacter lattice of the quotient is ``(Xv1 ⊕ Xv2)/ℤ(c1 - c2)`` and the
    character lattice is ``{x : ⟨x, c1⟩ = ⟨x, c2⟩}``.  The merged coordinate
    keeps the label and position of ``c1``; the remaining coordinates of the
    second factor are renumbered after those of the first.  ``glue=None``
    returns the direct product.
    """
    if glue is None:
        return direct_product(rd1, rd2)
    c1, c2 = glue
    i1 = rd1.Xv.basis_labels.index(c1)
    i2 = rd2.Xv.basis_labels.index(c2)
    for rd, i, lab in ((rd1, i1, c1), (rd2, i2, c2)):
        for r in rd.roots():
            if r[i] != 0:
                raise NotCentral(f"{lab} pairs non-trivially with root {rd.format_root(r)}")
    keep2 = [k for k in range(rd2.rank) if k != i2]
    n1 = rd1.rank

    def project_co(y1: Sequence[int], y2: Sequence[int]) -> Vec:
        # class of (y1, y2) in the quotient: c2 is identified with c1
        out = list(y1)
        out[i1] += y2[i2]
        return tuple(out) + tuple(y2[k] for k in keep2)

    def restrict_char(x1: Sequence[int], x2: Sequence[int]) -> Vec:
        # coordinates of a character with ⟨x, c1⟩ = ⟨x, c2⟩ in the dual basis
        if x1[i1] != x2[i2]:
            raise ValueError("character is not trivial on the glued diagonal")
        return tuple(x1) + tuple(x2[k] for k in keep2)

    z1, z2 = (0,) * n1, (0,) * rd2.rank
    roots = [restrict_char(r, z2) for r in rd1.simple_roots] + \
            [restrict_char(z1, r) for r in rd2.simple_roots]
    cos = [project_co(c, z2) for c in rd1.simple_coroots] + \
          [project_co(z1, c) for c in rd2.simple_coroots]
    xl = list(rd1.X.basis_labels) + _offset_labels(rd1.X.basis_labels, [rd2.X.basis_labels[k] for k in keep2])
    vl = list(rd1.Xv.basis_labels) + _offset_labels(rd1.Xv.basis_labels, [rd2.Xv.basis_labels[k] for k in keep2])
    return RootDatum(FreeLattice.standard(xl), FreeLattice.standard(vl), tuple(roots), tuple(cos),
                     f"({rd1.name} × {rd2.name})/ΔGL_1")


def fiber_product(rd1: RootDatum, rd2: RootDatum, glue: tuple[str, str]) -> RootDatum:
    """Subgroup of ``G1 × G2`` where two characters agree.

    ``glue = (h0, g0)`` names a basis character of each factor.  The
    character lattice is ``(X1 ⊕ X2)/ℤ(h0 - g0)`` and the cocharacter lattice
    is ``{y : ⟨h0, y⟩ = ⟨g0, y⟩}``, with basis ``h0* + g0*`` and the remaining
    dual basis vectors.  This is the character-side construction used for
    ``(GSO × GSp)°``.
    """
    h0, g0 = glue
    i1 = rd1.X.basis_labels.index(h0)
    i2 = rd2.X.basis_labels.index(g0)
    keep2 = [k for k in range(rd2.rank) if k != i2]

    def project_char(x1: Sequence[int], x2: Sequence[int]) -> Vec:
        out = list(x1)
        out[i1] += x2[i2]
        return tuple(out) + tuple(x2[k] for k in keep2)

    def restrict_co(y1: Sequence[int], y2: Sequence[int]) -> Vec:
        if y1[i1] != y2[i2]:
            raise ValueError("cocharacter does not preserve the equal-similitude condition")
        return tuple(y1) + tuple(y2[k] for k in keep2)

    z1, z2 = (0,) * rd1.rank, (0,) * rd2.rank
    roots = [project_char(r, z2) for r in rd1.simple_roots] + \
            [project_char(z1, r) for r in rd2.simple_roots]
    cos = [restrict_co(c, z2) for c in rd1.simple_coroots] + \
          [restrict_co(z1, c) for c in rd2.simple_coroots]
    xl = list(rd1.X.basis_labels) + _offset_labels(rd1.X.basis_labels, [rd2.X.basis_labels[k] for k in keep2])
    vl = list(rd1.Xv.basis_labels) + _offset_labels(rd1.Xv.basis_labels, [rd2.Xv.basis_labels[k] for k in keep2])
    return RootDatum(FreeLattice.standard(xl), FreeLattice.standard(vl), tuple(roots), tuple(cos),
                     f"({rd1.name} × {rd2.name})°")


# ---------------------------------------------------------------------------
# centers
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CenterDescription:
    """Kernel of all roots in the maximal torus.

    It is a torus of rank ``torus_rank`` times the finite group
    ``component_group``; it is connected when that group is trivial.
    """

    torus_rank: int
    component_group: FinAbGroup
    is_connected: bool


def center(rd: RootDatum) -> CenterDescription:
    roots = list(rd.simple_roots)
    mat = transpose(roots) if roots else [[] for _ in range(rd.rank)]
    tors = quotient_torsion(rd.X, mat)
    trank = rd.rank - rank(roots)
    return CenterDescription(trank, tors, tors.order == 1)


# ---------------------------------------------------------------------------
# identification of subsystems
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Identification:
    label: GroupLabel
    permutation: tuple[int, ...]
    method: str  # "exact" or "invariants"


def _full_pairs(roots: Sequence[Vec], coroots: Sequence[Vec], ambient: RootDatum) -> frozenset:
    sub = RootDatum(ambient.X, ambient.Xv, tuple(roots), tuple(coroots))
    return frozenset(sub.root_pairs())


def _candidate_labels(rank_: int) -> Iterable[GroupLabel]:
    for family, spec in _catalog()["all"].items():
        ps = spec["params"]
        for values in itertools.product(range(1, rank_ + 1), repeat=len(ps)):
            lab = GroupLabel(family, tuple(values))
            try:
                rd = build_preset(lab)
            except UnknownLabel:
                continue
            if rd.rank == rank_:
                yield lab


def _lattice_invariants(rd: RootDatum) -> tuple:
    roots, cos = list(rd.simple_roots), list(rd.simple_coroots)
    mx = transpose(roots) if roots else [[] for _ in range(rd.rank)]
    mv = transpose(cos) if cos else [[] for _ in range(rd.rank)]
    tx = quotient_torsion(rd.X, mx).invariant_factors
    tv = quotient_torsion(rd.Xv, mv).invariant_factors
    return (cartan_type(roots, cos), tx, tv)


def identify_based_datum(simple_roots: Sequence[Vec], simple_coroots: Sequence[Vec],
                         ambient: RootDatum, families: Sequence[str] | None = None) -> Identification:
    """Match a based subsystem of ``ambient`` to a catalog label.

    First an exact match is sought: a permutation of the coordinates, fixing
    the first coordinate when it is a central ``0`` coordinate, that carries
    the full set of (root, coroot) pairs onto those of a catalog datum.
    Failing that, the Cartan type and the torsion of ``X/ℤΦ`` and
    ``Xv/ℤΦ∨`` are compared and a unique match is accepted.
    """
    target = _full_pairs(simple_roots, simple_coroots, ambient)
    n = ambient.rank
    first = ambient.X.basis_labels[0]
    fix0 = first.endswith("0") and not first.startswith("E")
    inv_sub = _lattice_invariants(RootDatum(ambient.X, ambient.Xv, tuple(simple_roots),
                                            tuple(simple_coroots)))
    by_invariants = []
    for lab in _candidate_labels(n):
        if families and lab.family not in families:
            continue
        rd = build_preset(lab)
        if len(rd.simple_roots) != len(simple_roots):
            continue
        if _lattice_invariants(rd) != inv_sub:
            continue
        by_invariants.append(lab)
        cand = frozenset(rd.root_pairs())
        if len(cand) != len(target):
            continue
        rest = list(range(1, n)) if fix0 else list(range(n))
        for perm_rest in itertools.permutations(rest):
            perm = ((0,) + perm_rest) if fix0 else perm_rest
            # perm[k] = ambient coordinate carried to catalog coordinate k
            mapped = frozenset((tuple(r[perm[k]] for k in range(n)),
                                tuple(c[perm[k]] for k in range(n))) for r, c in target)
            if mapped == cand:
                return Identification(lab, tuple(perm), "exact")
    if len(by_invariants) == 1:
        return Identification(by_invariants[0], tuple(range(n)), "invariants")
    raise Unrecognized(f"no unique catalog match (invariants {inv_sub})")


DUAL_NAMES: dict[str, str] = {}


def dual_label(label: GroupLabel) -> str:
    """Display name of the dual group of a catalog label."""
    fam, p = label.family, label.params
    if fam == "GSpinOdd":
        return f"GSp_{2 * p[0]}"
    if fam == "GSpinEven":
        return f"GSO_{2 * p[0]}"
    if fam == "GSp":
        return f"GSpin_{2 * p[0] + 1}"
    if fam == "GSO":
        return f"GSpin_{2 * p[0]}"
    if fam == "GL":
        return f"GL_{p[0]}"
    if fam == "SpinQuotient":
        return f"(GSO_{2 * p[0]} × GSp_{2 * p[1]})°"
    if fam == "GSOGSp":
        return f"(GSpin_{2 * p[0]} × GSpin_{2 * p[1] + 1})/ΔGL_1"
    if fam == "SOOdd":
        return f"Sp_{2 * p[0]}"
    return f"({label})^∨"


def primed_label(label: GroupLabel) -> GroupLabel:
    """The connected-center replacement: even GSpin factors become GSpinTilde."""
    if label.family == "GSpinEven":
        return GroupLabel("GSpinTilde", label.params, label.twisted)
    if label.family == "SpinQuotient":
        return GroupLabel("TildeQuotient", label.params, label.twisted)
    return label
