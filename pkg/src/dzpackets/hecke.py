"""The two-parameter affine Hecke algebra of type Ã₁ and its principal series.

Basis elements ``T_w`` are indexed by reduced words of the infinite
dihedral group, written as alternating strings over ``"1"`` and ``"2"``.
An optional central generator ``T_c`` (invertible, commuting with both
``T_1`` and ``T_2``) adjoins a Laurent polynomial factor.

Principal series normalization.  For ``ξ ∈ ℂ^×`` put
``β(ξ) = √(q1 q2)(ξ + ξ⁻¹) + q1 + q2`` and

    T_1 ↦ [[-1, 0], [1, q1]],    T_2 ↦ [[q2, β], [0, -1]].

Both satisfy their quadratic relations for every ``β``, and ``T_1 T_2`` has
trace ``β - q1 - q2`` and determinant ``q1 q2``, so its eigenvalues are
``√(q1 q2)·ξ^{±1}``.  The module is reducible exactly when ``β = 0`` or
``β = (q1 + 1)(q2 + 1)``, i.e. for ``ξ^{±1} ∈ {√(q1 q2), -√(q2/q1)}``.
``π_ξ`` and ``π_{ξ⁻¹}`` coincide.
"""

from __future__ import annotations

import cmath
import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Union

from . import dualcent

Scalar = Union[Fraction, "QuadSurd", complex]


class LengthOverflow(ValueError):
    """A product would contain a word longer than the algebra's bound."""


# ---------------------------------------------------------------------------
# exact real quadratic numbers
# ---------------------------------------------------------------------------


def squarefree_split(n: int) -> tuple[int, int]:
    """``n = k² · d`` with ``d`` squarefree; returns ``(k, d)``."""
    if n <= 0:
        raise ValueError("radicand must be positive")
    k, d, p = 1, 1, 2
    while p * p <= n:
        while n % (p * p) == 0:
            n //= p * p
            k *= p
        if n % p == 0:
            n //= p
            d *= p
        p += 1
    return k, d * n


@dataclass(frozen=True)
class QuadSurd:
    """``a + b√d`` with rational ``a, b`` and squarefree ``d ≥ 1``."""

    a: Fraction
    b: Fraction = Fraction(0)
    d: int = 1

    def __post_init__(self) -> None:
        a, b, d = Fraction(self.a), Fraction(self.b), self.d
        if d == 1:
            a, b = a + b, Fraction(0)
        if b == 0:
            d = 1
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "d", d)

    @classmethod
    def sqrt(cls, x: Fraction | int) -> "QuadSurd":
        """Exact ``√x`` for a positive rational ``x``."""
        x = Fraction(x)
        k, d = squarefree_split(x.numerator * x.denominator)
        return cls(Fraction(0), Fraction(k, x.denominator), d)

    def _coerce(self, other) -> "QuadSurd":
        if isinstance(other, QuadSurd):
            if self.d != 1 and other.d != 1 and other.d != self.d:
                raise ValueError(f"√{self.d} and √{other.d} live in different fields")
            return other
        return QuadSurd(Fraction(other))

    def _field(self, other: "QuadSurd") -> int:
        return self.d if self.d != 1 else other.d

    def __add__(self, other) -> "QuadSurd":
        o = self._coerce(other)
        return QuadSurd(self.a + o.a, self.b + o.b, self._field(o))

    __radd__ = __add__

    def __neg__(self) -> "QuadSurd":
        return QuadSurd(-self.a, -self.b, self.d)

    def __sub__(self, other) -> "QuadSurd":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "QuadSurd":
        return self._coerce(other) - self

    def __mul__(self, other) -> "QuadSurd":
        o = self._coerce(other)
        d = self._field(o)
        return QuadSurd(self.a * o.a + self.b * o.b * d, self.a * o.b + self.b * o.a, d)

    __rmul__ = __mul__

    def inverse(self) -> "QuadSurd":
        norm = self.a * self.a - self.b * self.b * self.d
        if norm == 0:
            raise ZeroDivisionError("inverse of zero")
        return QuadSurd(self.a / norm, -self.b / norm, self.d)

    def __truediv__(self, other) -> "QuadSurd":
        return self * self._coerce(other).inverse()

    def __rtruediv__(self, other) -> "QuadSurd":
        return self._coerce(other) * self.inverse()

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = QuadSurd(Fraction(other))
        if not isinstance(other, QuadSurd):
            return NotImplemented
        return (self.a, self.b, self.d) == (other.a, other.b, other.d)

    def __hash__(self) -> int:
        return hash((self.a, self.b, self.d))

    def __bool__(self) -> bool:
        return bool(self.a or self.b)

    def __float__(self) -> float:
        return float(self.a) + float(self.b) * math.sqrt(self.d)

    def __lt__(self, other) -> bool:
        diff = self - self._coerce(other)
        return diff.sign() < 0

    def __le__(self, other) -> bool:
        return self == other or self < other

    def sign(self) -> int:
        """Exact sign of ``a + b√d``."""
        sa = (self.a > 0) - (self.a < 0)
        sb = (self.b > 0) - (self.b < 0)
        if sa == sb or sb == 0:
            return sa
        if sa == 0:
            return sb
        # opposite signs: compare a² with b²d
        big_a = self.a * self.a > self.b * self.b * self.d
        return sa if big_a else sb

    def to_json(self):
        """``[c, r]`` for ``c√r`` or ``{"rational": a, "surd": [b, d]}``."""
        if self.a == 0 or self.b == 0:
            c = self.b if self.b else self.a
            return [frac_str(c), self.d]
        return {"rational": frac_str(self.a), "surd": [frac_str(self.b), self.d]}

    def __str__(self) -> str:
        if self.b == 0:
            return frac_str(self.a)
        surd = f"{frac_str(self.b)}√{self.d}" if self.b not in (1, -1) else f"{'-' if self.b < 0 else ''}√{self.d}"
        if self.a == 0:
            return surd
        sign = "+" if self.b > 0 else "-"
        mag = abs(self.b)
        tail = f"√{self.d}" if mag == 1 else f"{frac_str(mag)}√{self.d}"
        return f"{frac_str(self.a)} {sign} {tail}"


def frac_str(x: Fraction) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


# ---------------------------------------------------------------------------
# the algebra
# ---------------------------------------------------------------------------


Key = tuple[str, int]


def _alternating(word: str) -> bool:
    return all(c in "12" for c in word) and all(a != b for a, b in zip(word, word[1:]))


@dataclass(frozen=True)
class HeckeA1Tilde:
    q1: Fraction
    q2: Fraction
    central: bool = False
    length_bound: int = 64

    def __post_init__(self) -> None:
        object.__setattr__(self, "q1", Fraction(self.q1))
        object.__setattr__(self, "q2", Fraction(self.q2))
        if self.q1 <= 0 or self.q2 <= 0:
            raise ValueError("parameters must be positive")

    def param(self, s: str) -> Fraction:
        return self.q1 if s == "1" else self.q2

    def basis(self, word: str = "", c_power: int = 0) -> "HeckeElement":
        if not _alternating(word):
            raise ValueError(f"{word!r} is not a reduced word")
        if c_power and not self.central:
            raise ValueError("algebra has no central generator")
        if len(word) > self.length_bound:
            raise LengthOverflow(f"length {len(word)} exceeds {self.length_bound}")
        return HeckeElement(self, {(word, c_power): Fraction(1)})

    def one(self) -> "HeckeElement":
        return self.basis()

    def T(self, s: str) -> "HeckeElement":
        return self.basis(s)

    def Tc(self, power: int = 1) -> "HeckeElement":
        return self.basis("", power)

    def words_up_to(self, length: int) -> list[str]:
        out = [""]
        for k in range(1, length + 1):
            out += ["".join("12"[(i + s) % 2] for i in range(k)) for s in (0, 1)]
        return out


@dataclass(frozen=True)
class HeckeElement:
    algebra: HeckeA1Tilde
    coefficients: dict = field(default_factory=dict)

    def __post_init__(self) -> None:
        clean = {k: Fraction(v) for k, v in self.coefficients.items() if v}
        object.__setattr__(self, "coefficients", clean)

    def __add__(self, other: "HeckeElement") -> "HeckeElement":
        out = dict(self.coefficients)
        for k, v in other.coefficients.items():
            out[k] = out.get(k, 0) + v
        return HeckeElement(self.algebra, out)

    def scale(self, c) -> "HeckeElement":
        return HeckeElement(self.algebra, {k: c * v for k, v in self.coefficients.items()})

    def __sub__(self, other: "HeckeElement") -> "HeckeElement":
        return self + other.scale(-1)

    def __mul__(self, other: "HeckeElement") -> "HeckeElement":
        return multiply(self, other)

    def __eq__(self, other) -> bool:
        return isinstance(other, HeckeElement) and self.coefficients == other.coefficients

    def __str__(self) -> str:
        if not self.coefficients:
            return "0"
        terms = []
        for (word, c), v in sorted(self.coefficients.items(), key=lambda kv: (len(kv[0][0]), kv[0])):
            basis = f"T_{{s{'s'.join(word)}}}" if word else ""
            if c:
                basis += f"T_c^{c}" if c != 1 else "T_c"
            coef = frac_str(v)
            terms.append(coef if not basis else (basis if v == 1 else f"{coef}·{basis}"))
        return " + ".join(terms)


def _times_generator(alg: HeckeA1Tilde, word: str, s: str) -> dict[str, Fraction]:
    """``T_word · T_s`` as a map word -> coefficient."""
    if word.endswith(s):
        qs = alg.param(s)
        return {word: qs - 1, word[:-1]: qs}
    if len(word) + 1 > alg.length_bound:
        raise LengthOverflow(f"length {len(word) + 1} exceeds {alg.length_bound}")
    return {word + s: Fraction(1)}


def multiply(a: HeckeElement, b: HeckeElement) -> HeckeElement:
    """Product in the basis ``T_w T_c^k``, rewriting one generator at a time."""
    alg = a.algebra
    if b.algebra != alg:
        raise ValueError("elements of different algebras")
    out: dict[Key, Fraction] = {}
    for (w1, c1), v1 in a.coefficients.items():
        for (w2, c2), v2 in b.coefficients.items():
            if len(w1) + len(w2) > alg.length_bound:
                raise LengthOverflow(f"length {len(w1) + len(w2)} exceeds {alg.length_bound}")
            current = {w1: v1 * v2}
            for s in w2:
                nxt: dict[str, Fraction] = {}
                for w, v in current.items():
                    for w_new, c in _times_generator(alg, w, s).items():
                        nxt[w_new] = nxt.get(w_new, 0) + v * c
                current = nxt
            for w, v in current.items():
                key = (w, c1 + c2)
                out[key] = out.get(key, 0) + v
    return HeckeElement(alg, out)


# ---------------------------------------------------------------------------
# principal series
# ---------------------------------------------------------------------------


Matrix = tuple[tuple, tuple]


def _mm(x: Matrix, y: Matrix) -> Matrix:
    return tuple(tuple(sum(x[i][k] * y[k][j] for k in range(2)) for j in range(2)) for i in range(2))


def _madd(x: Matrix, y: Matrix, c=1) -> Matrix:
    return tuple(tuple(x[i][j] + c * y[i][j] for j in range(2)) for i in range(2))


def _ident(one=1) -> Matrix:
    zero = one - one
    return ((one, zero), (zero, one))


@dataclass(frozen=True)
class PrincipalSeries:
    algebra: HeckeA1Tilde
    xi: Scalar
    beta: Scalar
    T1: Matrix
    T2: Matrix
    central_scalar: Scalar = Fraction(1)

    @property
    def exact(self) -> bool:
        return not isinstance(self.xi, complex)

    def image(self, s: str) -> Matrix:
        return self.T1 if s == "1" else self.T2

    def act(self, h: HeckeElement) -> Matrix:
        """``π_ξ(h)``, with ``T_c`` acting by the central scalar."""
        zero = self.beta - self.beta
        total: Matrix = ((zero, zero), (zero, zero))
        for (word, c), v in h.coefficients.items():
            m = _ident(zero + 1)
            for s in word:
                m = _mm(m, self.image(s))
            scalar = v * _power(self.central_scalar, c)
            total = _madd(total, m, scalar)
        return total


def _power(x, k: int):
    if k >= 0:
        out = x - x + 1
        for _ in range(k):
            out = out * x
        return out
    return 1 / _power(x, -k)


def _exact_scalar(xi, alg: HeckeA1Tilde):
    if isinstance(xi, complex):
        return xi
    if isinstance(xi, float):
        return complex(xi)
    root = QuadSurd.sqrt(alg.q1 * alg.q2)
    return xi if isinstance(xi, QuadSurd) else QuadSurd(Fraction(xi), Fraction(0), root.d)


def principal_series(alg: HeckeA1Tilde, xi, central_scalar=Fraction(1)) -> PrincipalSeries:
    """``π_ξ`` in the normalization described in the module docstring.

    ``ξ`` may be rational, a :class:`QuadSurd` in ``ℚ(√(q1 q2))`` (exact), or
    a complex number (floating point).
    """
    xi = _exact_scalar(xi, alg)
    if not xi:
        raise ValueError("ξ must be non-zero")
    if isinstance(xi, complex):
        root = math.sqrt(alg.q1 * alg.q2)
        beta = root * (xi + 1 / xi) + float(alg.q1 + alg.q2)
        one = complex(1)
        q1, q2 = complex(alg.q1), complex(alg.q2)
        c = complex(central_scalar)
    else:
        root = QuadSurd.sqrt(alg.q1 * alg.q2)
        beta = root * (xi + xi.inverse()) + (alg.q1 + alg.q2)
        one = QuadSurd(Fraction(1))
        q1, q2 = one * alg.q1, one * alg.q2
        c = central_scalar
    zero = one - one
    T1 = ((-one, zero), (one, q1))
    T2 = ((q2, beta), (zero, -one))
    ps = PrincipalSeries(alg, xi, beta, T1, T2, c)
    check_relations(ps)
    return ps


def relation_residual(ps: PrincipalSeries, s: str):
    """``π(T_s)² - (q_s - 1)π(T_s) - q_s`` as a matrix."""
    m = ps.image(s)
    qs = ps.algebra.param(s)
    one = ps.beta - ps.beta + 1
    return _madd(_madd(_mm(m, m), m, -(qs - 1)), _ident(one), -qs)


def check_relations(ps: PrincipalSeries, tol: float = 1e-9) -> None:
    for s in "12":
        r = relation_residual(ps, s)
        entries = [x for row in r for x in row]
        if ps.exact:
            bad = any(entries)
        else:
            bad = max(abs(complex(x)) for x in entries) > tol * (1 + float(ps.algebra.param(s)) ** 2)
        if bad:
            raise AssertionError(f"quadratic relation fails for T_{s}")


def _kernel_pair_det(ps: PrincipalSeries, l1, l2):
    """2×2 minors of the stacked ``[T_1 - l1; T_2 - l2]`` (all zero iff a common kernel)."""
    one = ps.beta - ps.beta + 1
    A = _madd(ps.T1, _ident(one), -l1)
    B = _madd(ps.T2, _ident(one), -l2)
    rows = [A[0], A[1], B[0], B[1]]
    return [rows[i][0] * rows[j][1] - rows[i][1] * rows[j][0] for i in range(4) for j in range(i + 1, 4)]


def _eigen_pairs(ps: PrincipalSeries):
    q1, q2 = ps.algebra.q1, ps.algebra.q2
    return [(l1, l2) for l1 in (q1, Fraction(-1)) for l2 in (q2, Fraction(-1))]


def common_eigenvector_residual(ps: PrincipalSeries) -> float:
    """Smallest singular value of ``[T_1 - l1; T_2 - l2]`` over eigenvalue pairs, scaled.

    Zero exactly when ``T_1`` and ``T_2`` share an eigenvector.
    """
    best = math.inf
    scale = 1 + max(abs(complex(x)) for m in (ps.T1, ps.T2) for row in m for x in row)
    for l1, l2 in _eigen_pairs(ps):
        A = [[complex(x) for x in row] for row in _madd(ps.T1, _ident(ps.beta - ps.beta + 1), -l1)]
        B = [[complex(x) for x in row] for row in _madd(ps.T2, _ident(ps.beta - ps.beta + 1), -l2)]
        M = A + B
        g = [[sum(M[k][i].conjugate() * M[k][j] for k in range(4)) for j in range(2)] for i in range(2)]
        tr = (g[0][0] + g[1][1]).real
        det = (g[0][0] * g[1][1] - g[0][1] * g[1][0]).real
        disc = max(tr * tr / 4 - det, 0.0)
        smallest = max(tr / 2 - math.sqrt(disc), 0.0)
        best = min(best, math.sqrt(smallest) / scale)
    return best


RESIDUAL_THRESHOLD = 1e-9


def is_reducible(ps: PrincipalSeries, threshold: float = RESIDUAL_THRESHOLD) -> bool:
    """Whether ``π_ξ(T_1)`` and ``π_ξ(T_2)`` share an eigenvector.

    Exact for rational or surd ``ξ``; for complex ``ξ`` the scaled residual
    is compared against ``threshold``.
    """
    if ps.exact:
        return any(not any(_kernel_pair_det(ps, l1, l2)) for l1, l2 in _eigen_pairs(ps))
    return common_eigenvector_residual(ps) < threshold


def _normalize(q1, q2) -> tuple[Fraction, Fraction]:
    q1, q2 = Fraction(q1), Fraction(q2)
    if q1 > q2:
        q1, q2 = q2, q1
    if q1 < 1:
        raise ValueError("parameters must be at least 1")
    return q1, q2


def special_points(q1, q2) -> tuple[QuadSurd, QuadSurd]:
    """``√(q1 q2)`` and ``-√(q2/q1)`` (for ``q2 ≥ q1``)."""
    q1, q2 = _normalize(q1, q2)
    return QuadSurd.sqrt(q1 * q2), -QuadSurd.sqrt(q2 / q1)


def special_orbit(q1, q2) -> set[QuadSurd]:
    """Special points together with their images under ``ξ ↦ ξ⁻¹``."""
    pts = special_points(q1, q2)
    return set(pts) | {p.inverse() for p in pts}


def sample_irreducible_points(q1, q2, count: int = 50, seed: int = 0) -> list[complex]:
    """Unit-circle and real sample points kept away from the special orbit."""
    rng = random.Random(seed)
    avoid = [complex(float(p)) for p in special_orbit(q1, q2)] + [1, -1]
    out: list[complex] = []
    while len(out) < count:
        if len(out) % 2 == 0:
            z = cmath.exp(2j * math.pi * rng.random())
        else:
            z = complex(rng.choice((-1, 1)) * math.exp(rng.uniform(-3, 3)))
        if all(abs(z - a) > 1e-3 for a in avoid):
            out.append(z)
    return out


# ---------------------------------------------------------------------------
# complementary series and Plancherel masses
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Interval:
    lo: QuadSurd
    hi: QuadSurd
    lo_closed: bool
    hi_closed: bool

    @property
    def empty(self) -> bool:
        if self.hi < self.lo:
            return True
        if self.lo == self.hi:
            return not (self.lo_closed and self.hi_closed)
        return False

    def __contains__(self, x) -> bool:
        x = self.lo._coerce(x)
        above = self.lo < x or (self.lo_closed and self.lo == x)
        below = x < self.hi or (self.hi_closed and self.hi == x)
        return above and below

    def __str__(self) -> str:
        return f"{'[' if self.lo_closed else '('}{self.lo}, {self.hi}{']' if self.hi_closed else ')'}"

    def to_json(self) -> dict:
        return {"lo": self.lo.to_json(), "hi": self.hi.to_json(),
                "lo_closed": self.lo_closed, "hi_closed": self.hi_closed, "empty": self.empty}


def complementary_series(q1, q2) -> tuple[Interval, Interval]:
    """``(1, √(q1 q2)]`` and ``[-√(q2/q1), -1)``, inputs reordered so ``q2 ≥ q1``."""
    plus, minus = special_points(q1, q2)
    one = QuadSurd(Fraction(1), Fraction(0), plus.d)
    return Interval(one, plus, False, True), Interval(minus, -one, True, False)


def plancherel_masses(q1, q2) -> tuple[Fraction, Fraction]:
    """The two discrete point masses, for ``q2 ≥ q1 ≥ 1``."""
    q1, q2 = _normalize(q1, q2)
    m1 = (1 - 1 / (q1 * q2)) / ((1 + 1 / q1) * (1 + 1 / q2))
    m2 = (1 - q1 / q2) / ((1 + q1) * (1 + 1 / q2))
    return m1, m2


def two_complementary_series(q1, q2) -> bool:
    q1, q2 = _normalize(q1, q2)
    answer = q1 != q2
    second = complementary_series(q1, q2)[1]
    _, m2 = plancherel_masses(q1, q2)
    if answer != (not second.empty) or answer != (m2 > 0):
        raise AssertionError("complementary series, masses and parameters disagree")
    return answer


def continuous_weight(q1, q2) -> Fraction:
    """Weight left for the tempered part when ``f`` is the identity element."""
    m1, m2 = plancherel_masses(q1, q2)
    return 1 - m1 - m2


# ---------------------------------------------------------------------------
# reducibility report
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ReducibilityReport:
    family: str
    m: int
    subcase: int
    q: int
    vertices: tuple[str, str]
    types: tuple[str, str]
    orbit_counts: tuple[int, int]
    parameters: tuple[int, int]
    intervals: tuple[Interval, Interval]
    masses: tuple[Fraction, Fraction]
    two_series: bool
    conclusion: str

    def to_json(self) -> dict:
        return {
            "family": self.family, "m": self.m, "case": self.subcase, "q": self.q,
            "vertices": list(self.vertices), "types": list(self.types),
            "orbit_counts": list(self.orbit_counts), "parameters": list(self.parameters),
            "complementary_series": [i.to_json() for i in self.intervals],
            "plancherel_masses": [frac_str(x) for x in self.masses],
            "two_complementary_series": self.two_series, "conclusion": self.conclusion,
        }


UNIQUE_POSITIVE = "unique s0 > 0"
WITHHELD = "s0 = 0 possible"


def conclusion_for(p_a, p_b) -> str:
    return UNIQUE_POSITIVE if Fraction(p_a) != Fraction(p_b) else WITHHELD


def reducibility_report(family: str, q: int, m: int | None = None, subcase: int | None = None,
                        witness: dualcent.Witness | None = None) -> ReducibilityReport:
    a, b = dualcent.case_pair(family, m, subcase)
    cds = [dualcent.centralizer_for(c, q, witness) for c in (a, b)]
    params = tuple(dualcent.hecke_parameter(cd, q) for cd in cds)
    if params[0] == params[1]:
        raise AssertionError(f"equal parameters {params} for {a.name}, {b.name}")
    q1, q2 = sorted(params)
    return ReducibilityReport(
        a.family, a.m, a.subcase, q, (a.name, b.name),
        tuple(cd.cartan_type for cd in cds), tuple(dualcent.frob_orbit_count(cd) for cd in cds),
        params, complementary_series(q1, q2), plancherel_masses(q1, q2),
        two_complementary_series(q1, q2), conclusion_for(*params))


def basis_elements(alg: HeckeA1Tilde, length: int) -> Iterable[HeckeElement]:
    for w in alg.words_up_to(length):
        yield alg.basis(w)


def matrices_close(x: Matrix, y: Matrix, tol: float = 1e-9) -> bool:
    return all(abs(complex(x[i][j]) - complex(y[i][j])) <= tol * (1 + abs(complex(y[i][j])))
               for i in range(2) for j in range(2))


def trace(m: Matrix):
    return m[0][0] + m[1][1]
