"""Depth-zero packet tables for GSpin_5.

Everything is computed in the apartment of the adjoint group ``SO_5``
(coordinates ``e1*, e2*``) and lifted to ``GSpin_5`` with central
coordinate 0.  For each class ``λ`` of the component group the pipeline
forms ``σ_λ = t_λ w``, its fixed point ``x_λ``, the roots integral at
``x_λ``, an alcove ``C_λ`` around ``x_λ``, the element ``w_λ`` and
``y_λ = w_λ⁻¹ σ_λ``, and from these the inner form and the reductive
quotient.  The inner-form sign is computed twice: from the Kottwitz
lattice map and from the alcove-stabiliser component of ``y_λ``.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Sequence

from .affweyl import (AffineRoot, AffineWeylElement, ApartmentPoint, act, affine_base,
                      fixed_point, format_point, omega_decompose, subsystem_at)
from .lattice import FinAbGroup, FreeLattice, format_combination, quotient_torsion
from .rootdatum import (GroupLabel, Identification, build_preset, identify_based_datum,
                        pair, positive_roots)


class InternalInconsistency(RuntimeError):
    """Two independent computations of the same quantity disagree."""


class ConstraintViolation(ValueError):
    """Torus-element exponents fail a genericity condition."""


class Shape(str, Enum):
    IRREDUCIBLE = "irreducible"
    SPLIT = "split"


@dataclass(frozen=True)
class TRDShape:
    """The finite Weyl element attached to a parameter shape.

    ``w`` is the action on the adjoint cocharacter lattice: a rotation
    (Coxeter element) for an irreducible parameter and ``-1`` for a sum of
    two two-dimensional pieces.
    """

    kind: Shape
    w: tuple[tuple[int, int], tuple[int, int]]

    @classmethod
    def of(cls, kind: Shape | str) -> "TRDShape":
        kind = Shape(kind)
        if kind is Shape.IRREDUCIBLE:
            # w e1* = e2*, w e2* = -e1* (columns are images)
            return cls(kind, ((0, -1), (1, 0)))
        return cls(kind, ((-1, 0), (0, -1)))

    @property
    def display(self) -> str:
        return "irred" if self.kind is Shape.IRREDUCIBLE else "φ1 ⊕ φ2"


ADJ_LATTICE = FreeLattice.standard(["e1*", "e2*"])
ADJ_COROOTS = ((1, -1), (0, 2))
H1_ADJOINT = (1, -1)  # Galois cohomology of the adjoint group, as a cross-check
EPSILON = Fraction(1, 100)
GENERIC_DIRECTION = (2, 1)


def component_group(shape: TRDShape) -> FinAbGroup:
    """Torsion of ``X_ad∨/(1 - w)X_ad∨``."""
    w = shape.w
    m = [[int(i == j) - w[i][j] for j in range(2)] for i in range(2)]
    return quotient_torsion(ADJ_LATTICE, m)


def ordered_classes(group: FinAbGroup) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
    """(code, representative) pairs: zero first, then longer representatives."""
    items = list(group.representatives.items())
    items.sort(key=lambda kv: (any(kv[1]), -sum(abs(x) for x in kv[1]), tuple(-x for x in kv[1])))
    return items


def kottwitz_group() -> FinAbGroup:
    cols = [list(c) for c in zip(*ADJ_COROOTS)]
    return quotient_torsion(ADJ_LATTICE, cols)


def kottwitz_class(lam: Sequence[int]) -> int:
    """Image of ``λ`` in ``X_ad∨/ℤΦ_ad∨`` as a sign."""
    code = kottwitz_group().reduce(lam)
    sign = -1 if any(code) else 1
    if sign not in H1_ADJOINT:
        raise InternalInconsistency("Kottwitz class outside H¹")
    return sign


def sigma_lambda(shape: TRDShape, lam: Sequence[int]) -> AffineWeylElement:
    return AffineWeylElement(shape.w, tuple(lam))


def _adjoint_roots() -> list[AffineRoot]:
    """All roots of SO_5 with coroots, as affine roots with constant 0."""
    rd = build_preset("SO_5")
    return [AffineRoot(r, 0, c) for r, c in rd.root_pairs()]


def alcove_point(x: ApartmentPoint) -> ApartmentPoint:
    """Interior point of the chosen alcove ``C_λ`` having ``x`` in its closure."""
    return x + tuple(EPSILON * d for d in GENERIC_DIRECTION)


def _walls_through(x: ApartmentPoint) -> list[AffineRoot]:
    out = []
    for r in _adjoint_roots():
        k = pair(r.gradient, x.coordinates)
        if k.denominator == 1:
            out.append(AffineRoot(r.gradient, -k, r.coroot))
    return out


def w_lambda(sigma: AffineWeylElement, x: ApartmentPoint) -> AffineWeylElement:
    """Element of the reflection group at ``x`` with ``σ·C_λ = w_λ·C_λ``."""
    q = alcove_point(x)
    r = act(sigma, q)
    walls = _walls_through(x)
    back = AffineWeylElement.identity(2)
    for _ in range(1000):
        sep = next((h for h in walls if (h(r) > 0) != (h(q) > 0)), None)
        if sep is None:
            break
        s = sep.reflection()
        r = act(s, r)
        back = s * back
    else:
        raise InternalInconsistency("alcove walk around x_λ did not terminate")
    return back.inverse()


def u_lambda_via_omega(shape: TRDShape, lam: Sequence[int]) -> int:
    """Sign of the alcove-stabiliser component of ``y_λ``, checked against the Kottwitz route."""
    sign = _omega_sign(shape, lam)
    if sign != kottwitz_class(lam):
        raise InternalInconsistency(f"inner-form sign disagrees for λ = {tuple(lam)}")
    return sign


def _omega_sign(shape: TRDShape, lam: Sequence[int]) -> int:
    sigma = sigma_lambda(shape, lam)
    x = fixed_point(sigma)
    y = w_lambda(sigma, x).inverse() * sigma
    return omega_decompose(y, affine_base("SO5")).sign


def simple_subsystem(roots: Sequence[tuple[int, ...]]) -> list[tuple[int, ...]]:
    """Indecomposable members of a positive system."""
    rs = set(roots)
    out = []
    for a in roots:
        if not any(tuple(x - y for x, y in zip(a, b)) in rs for b in roots if b != a):
            out.append(a)
    return out


@dataclass(frozen=True)
class PacketRow:
    shape: TRDShape
    code: tuple[int, ...]
    rho_lambda: tuple[int, ...]
    rho_label: str
    character: tuple[int, ...]
    x_lambda: ApartmentPoint
    subsystem: tuple[tuple[int, ...], ...]
    u_class: int
    kottwitz: int
    twisted: bool
    identification: Identification
    quotient_label: GroupLabel
    inner_form_label: str
    alcove_choice: str
    y_linear: tuple[tuple[int, ...], ...]


def _lift(x: ApartmentPoint) -> tuple[Fraction, ...]:
    return (Fraction(0),) + tuple(x.coordinates)


def packet_table(shape: TRDShape | Shape | str) -> list[PacketRow]:
    if not isinstance(shape, TRDShape):
        shape = TRDShape.of(shape)
    gspin = build_preset("GSpin_5")
    pos = positive_roots(gspin)
    group = component_group(shape)
    rows = []
    for code, lam in ordered_classes(group):
        sigma = sigma_lambda(shape, lam)
        x = fixed_point(sigma)
        sub = subsystem_at(_lift(x), pos)
        wl = w_lambda(sigma, x)
        y = wl.inverse() * sigma
        u = omega_decompose(y, affine_base("SO5")).sign
        kc = kottwitz_class(lam)
        if u != kc:
            raise InternalInconsistency(f"inner-form sign disagrees for λ = {lam}")
        simple = simple_subsystem(sub)
        coroots = [gspin.coroot(a) for a in simple]
        ident = identify_based_datum(simple, coroots, gspin)
        twisted = y.linear != ((1, 0), (0, 1))
        label = GroupLabel(ident.label.family, ident.label.params, twisted)
        if shape.kind is Shape.IRREDUCIBLE:
            character = (-1 if any(code) else 1,)
        else:
            character = tuple(-1 if c % 2 else 1 for c in lam)
        rows.append(PacketRow(
            shape=shape, code=tuple(code), rho_lambda=tuple(lam),
            rho_label=format_combination(lam, ADJ_LATTICE.basis_labels, bar=True),
            character=character, x_lambda=x, subsystem=tuple(sub), u_class=u, kottwitz=kc,
            twisted=twisted, identification=ident, quotient_label=label,
            inner_form_label="GSpin_5(k)" if u == 1 else "GSpin_{4,1}(k)",
            alcove_choice=f"x_λ + {EPSILON}·{GENERIC_DIRECTION}",
            y_linear=y.linear))
    if len(rows) != group.order:
        raise InternalInconsistency("packet size differs from the component group order")
    return rows


# ---------------------------------------------------------------------------
# third table: torus elements
# ---------------------------------------------------------------------------


R_SYMBOL = {("GSpinOdd", False): "+", ("GSpinEven", False): "-",
            ("GSpinEven", True): "†", ("SpinQuotient", True): "‡"}


def case_symbol(row: PacketRow) -> str:
    return R_SYMBOL[(row.quotient_label.family, row.quotient_label.twisted)]


@dataclass(frozen=True)
class DualTorusElement:
    """Diagonal entries in ``GSp_4`` coordinates as exponents of a generator of ``F_{q^4}^×``.

    ``symbols`` is the symbolic pattern; ``similitude`` is the exponent of
    the common product of opposite entries (an annotation, not enforced
    beyond the genericity checks).
    """

    q: int
    modulus: int
    exponents: tuple[int, int, int, int]
    symbols: tuple[str, str, str, str]
    similitude: int


def _sym_pattern(shape: TRDShape, swap: bool) -> tuple[str, ...]:
    if shape.kind is Shape.IRREDUCIBLE:
        return ("τ", "τ^q", "τ^{q³}", "τ^{q²}")
    a, b = ("τ2", "τ1") if swap else ("τ1", "τ2")
    return (a, b, f"{b}^q", f"{a}^q")


def dual_torus_element(shape: TRDShape | Shape | str, q: int, exps: Sequence[int],
                       swap: bool = False) -> DualTorusElement:
    """Validated torus element; ``exps`` are ``(a,)`` for ``τ = g^a`` or ``(a1, a2)``."""
    if not isinstance(shape, TRDShape):
        shape = TRDShape.of(shape)
    mod = q ** 4 - 1
    if shape.kind is Shape.IRREDUCIBLE:
        (a,) = exps
        a %= mod
        if a % (q * q + 1) == 0:
            raise ConstraintViolation("τ must lie in F_{q^4}^× but not in F_{q^2}^×")
        vals = (a, a * q % mod, a * q ** 3 % mod, a * q * q % mod)
        sim = a * (1 + q * q) % mod
        return DualTorusElement(q, mod, vals, _sym_pattern(shape, False), sim)
    a1, a2 = (e % mod for e in exps)
    small = q * q + 1
    for name, a in (("τ1", a1), ("τ2", a2)):
        if a % small:
            raise ConstraintViolation(f"{name} must lie in F_{{q^2}}^×")
        if a % (mod // (q - 1)) == 0:
            raise ConstraintViolation(f"{name} must not lie in F_q^×")
    if a1 * (1 + q) % mod != a2 * (1 + q) % mod:
        raise ConstraintViolation("τ1 and τ2 must have equal norms to F_q^×")
    if a1 == a2 or a1 == a2 * q % mod:
        raise ConstraintViolation("τ1 must differ from τ2 and τ2^q")
    if swap:
        a1, a2 = a2, a1
    vals = (a1, a2, a2 * q % mod, a1 * q % mod)
    return DualTorusElement(q, mod, vals, _sym_pattern(shape, swap), a1 * (1 + q) % mod)


def torus_row_pattern(row: PacketRow) -> tuple[str, ...]:
    """Symbolic ``s`` for a row: the base pattern permuted by the identification."""
    perm = row.identification.permutation
    swap = perm[1:] == (2, 1)
    return _sym_pattern(row.shape, swap)


# ---------------------------------------------------------------------------
# rendering
# ---------------------------------------------------------------------------


def _roots_text(roots: Sequence[tuple[int, ...]]) -> str:
    labels = build_preset("GSpin_5").X.basis_labels
    return "{" + ", ".join(format_combination(r, labels) for r in roots) + "}"


def _char_text(c: Sequence[int]) -> str:
    return "(" + ", ".join(str(x) for x in c) + ")"


def _quotient_text(label: GroupLabel) -> str:
    text = str(label)
    if label.family in ("SpinQuotient", "TildeQuotient"):
        return f"[{text}](𝔣)"
    return f"{text}(𝔣)"


def table_records(shape: TRDShape | Shape | str) -> dict[str, list[dict[str, str]]]:
    """The three tables as lists of string records."""
    rows = packet_table(shape)
    t1, t2, t3 = [], [], []
    for r in rows:
        phi = r.shape.display
        t1.append({"phi": phi, "rho": r.rho_label,
                   "x": format_point(r.x_lambda, ADJ_LATTICE.basis_labels),
                   "roots": _roots_text(r.subsystem), "u": str(r.u_class)})
        t2.append({"phi": phi, "rho": _char_text(r.character),
                   "reductive_quotient": _quotient_text(r.quotient_label),
                   "inner_form": r.inner_form_label})
        pattern = torus_row_pattern(r)
        t3.append({"phi": phi, "R": f"R_π^{case_symbol(r)}",
                   "s": "diag(" + ", ".join(pattern) + ")",
                   "reductive_quotient": _quotient_text(r.quotient_label)})
    return {"table1": t1, "table2": t2, "table3": t3}


TABLE_HEADERS = {
    "table1": ("φ", "ρ_λ", "x_λ", "Φ_{x_λ}^+", "[u_λ]"),
    "table2": ("φ", "ρ_λ", "𝔾_λ^{F_λ}", "G^{F_λ}"),
    "table3": ("φ", "±R(t)", "s", "𝔾_λ^{F_λ}"),
}


def render_markdown(records: dict[str, list[dict[str, str]]]) -> str:
    out = []
    for name, rows in records.items():
        head = TABLE_HEADERS[name]
        out.append("| " + " | ".join(head) + " |")
        out.append("|" + "---|" * len(head))
        for row in rows:
            out.append("| " + " | ".join(row.values()) + " |")
        out.append("")
    return "\n".join(out)
