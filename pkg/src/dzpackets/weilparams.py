"""Tame characters of unramified Weil groups in exponent arithmetic.

A character ``η`` of ``W_{k_{2d}}`` that is trivial on wild inertia is
stored as two residues: its restriction to tame inertia (a character of
``F_{q^{2d}}^×``, i.e. an exponent mod ``q^{2d} - 1``) and its value on
``Frob^{2d}`` as an exponent of ``ζ_N``.  Induced parameters
``V(η_1) ⊕ ... ⊕ V(η_s)`` are lists of such characters sharing a
similitude character ``λ`` of ``W_k``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

TRD_GUARD = 10 ** 7


class NotIrreducible(ValueError):
    """The induced representation V(η) is reducible."""


class TooLarge(ValueError):
    """An exhaustive enumeration would exceed the size guard."""


def is_prime_power(q: int) -> bool:
    if q < 2:
        return False
    p = next(p for p in range(2, q + 1) if q % p == 0)
    while q % p == 0:
        q //= p
    return q == 1


@dataclass(frozen=True)
class FieldContext:
    q: int
    d: int
    N: int

    def __post_init__(self) -> None:
        if self.q < 2:
            raise ValueError("q must be at least 2")
        if self.d < 1:
            raise ValueError("d must be positive")
        if self.N < 2 or self.N % 2:
            raise ValueError("the value modulus N must be even")

    @property
    def inertia_modulus(self) -> int:
        return self.q ** (2 * self.d) - 1


@dataclass(frozen=True)
class TameCharacter:
    ctx: FieldContext
    inertia_exp: int
    frob_exp: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "inertia_exp", self.inertia_exp % self.ctx.inertia_modulus)
        object.__setattr__(self, "frob_exp", self.frob_exp % self.ctx.N)

    @property
    def degree(self) -> int:
        return self.ctx.d

    def orbit(self) -> tuple[int, ...]:
        """Inertia exponents of ``η, η^Frob, ..., η^{Frob^{2d-1}}``."""
        q, mod = self.ctx.q, self.ctx.inertia_modulus
        return tuple(self.inertia_exp * q ** i % mod for i in range(2 * self.ctx.d))

    def key(self) -> tuple:
        """Isomorphism invariant of V(η)."""
        return (self.ctx.q, self.ctx.d, self.ctx.N, frozenset(self.orbit()), self.frob_exp)

    def as_tuple(self) -> tuple[int, int, int, int, int]:
        return (self.ctx.q, self.ctx.d, self.ctx.N, self.inertia_exp, self.frob_exp)


@dataclass(frozen=True)
class SimilitudeCharacter:
    q: int
    inertia_exp: int
    frob_exp: int
    N: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "inertia_exp", self.inertia_exp % (self.q - 1))
        object.__setattr__(self, "frob_exp", self.frob_exp % self.N)

    def as_tuple(self) -> tuple[int, int, int, int]:
        return (self.q, self.inertia_exp, self.frob_exp, self.N)


@dataclass(frozen=True)
class InducedParameter:
    components: tuple[TameCharacter, ...]
    similitude: SimilitudeCharacter

    @property
    def dimension(self) -> int:
        return sum(2 * c.degree for c in self.components)

    def key(self) -> tuple:
        return (tuple(sorted(c.key() for c in self.components)), self.similitude)


def frob_conjugate(eta: TameCharacter, i: int) -> TameCharacter:
    mod = eta.ctx.inertia_modulus
    return TameCharacter(eta.ctx, eta.inertia_exp * pow(eta.ctx.q, i % (2 * eta.ctx.d), mod), eta.frob_exp)


def is_irreducible(eta: TameCharacter) -> bool:
    return len(set(eta.orbit())) == 2 * eta.ctx.d


def restrict_similitude(lam: SimilitudeCharacter, ctx: FieldContext) -> TameCharacter:
    """``λ`` restricted to ``W_{k_{2d}}`` via the norm map."""
    if lam.q != ctx.q or lam.N != ctx.N:
        raise ValueError("similitude character lives in a different context")
    lift = ctx.inertia_modulus // (ctx.q - 1)
    return TameCharacter(ctx, lam.inertia_exp * lift, 2 * ctx.d * lam.frob_exp)


def is_symplectic(eta: TameCharacter, lam: SimilitudeCharacter) -> bool:
    """Whether V(η) carries a ``λ``-similitude alternating form."""
    if not is_irreducible(eta):
        raise NotIrreducible(f"η = {eta.as_tuple()} has a repeated Frobenius conjugate")
    ctx = eta.ctx
    target = restrict_similitude(lam, ctx)
    mod = ctx.inertia_modulus
    if eta.inertia_exp * (1 + ctx.q ** ctx.d) % mod != target.inertia_exp:
        return False
    # η·η^{Frob^d} on Frob^{2d}: conjugation leaves the value unchanged
    if 2 * eta.frob_exp % ctx.N != target.frob_exp:
        return False
    return eta.frob_exp == (ctx.d * lam.frob_exp + ctx.N // 2) % ctx.N


@dataclass(frozen=True)
class Violation:
    clause: str
    detail: str


@dataclass(frozen=True)
class TRDReport:
    violations: tuple[Violation, ...] = field(default=())

    @property
    def valid(self) -> bool:
        return not self.violations

    def __bool__(self) -> bool:
        return self.valid


def classify_trd(param: InducedParameter, n: int) -> TRDReport:
    """Check the tame regular discrete series conditions, listing every failure."""
    out: list[Violation] = []
    total = sum(c.degree for c in param.components)
    if total != n:
        out.append(Violation("degree-sum", f"degrees sum to {total}, expected {n}"))
    for idx, c in enumerate(param.components):
        if not is_irreducible(c):
            out.append(Violation("irreducible", f"component {idx} is not regular"))
        elif not is_symplectic(c, param.similitude):
            out.append(Violation("symplectic", f"component {idx} is not symplectic for λ"))
    for (i, a), (j, b) in itertools.combinations(enumerate(param.components), 2):
        if a.degree == b.degree and a.key() == b.key():
            out.append(Violation("distinct", f"components {i} and {j} are Frobenius-conjugate"))
    return TRDReport(tuple(out))


def symplectic_characters(q: int, d: int, lam: SimilitudeCharacter) -> list[TameCharacter]:
    """One representative per Frobenius orbit of symplectic degree-``d`` characters."""
    ctx = FieldContext(q, d, lam.N)
    frob = (d * lam.frob_exp + lam.N // 2) % lam.N
    seen: set[frozenset] = set()
    out = []
    for a in range(ctx.inertia_modulus):
        eta = TameCharacter(ctx, a, frob)
        if not is_irreducible(eta) or not is_symplectic(eta, lam):
            continue
        orb = frozenset(eta.orbit())
        if orb in seen:
            continue
        seen.add(orb)
        out.append(TameCharacter(ctx, min(orb), frob))
    return out


def _partitions(n: int, largest: int | None = None):
    largest = n if largest is None else largest
    if n == 0:
        yield ()
        return
    for k in range(min(n, largest), 0, -1):
        for rest in _partitions(n - k, k):
            yield (k,) + rest


def enumerate_trd(q: int, n: int, lam: SimilitudeCharacter) -> list[InducedParameter]:
    """All TRD parameters of dimension ``2n`` with similitude ``λ``, up to isomorphism."""
    size = q ** (2 * n)
    if size > TRD_GUARD:
        raise TooLarge(f"q^(2n) = {size} exceeds the guard {TRD_GUARD}")
    by_degree = {d: symplectic_characters(q, d, lam) for d in range(1, n + 1)}
    out = []
    for degrees in _partitions(n):
        counts = {d: degrees.count(d) for d in set(degrees)}
        pools = [itertools.combinations(by_degree[d], k) for d, k in sorted(counts.items(), reverse=True)]
        for choice in itertools.product(*pools):
            comps = tuple(c for group in choice for c in group)
            out.append(InducedParameter(comps, lam))
    return out


def twist(eta: TameCharacter, k: int) -> TameCharacter:
    """``V(η) ⊗ χ`` for the unramified ``χ`` with ``χ(Frob) = ζ_N^k``."""
    return TameCharacter(eta.ctx, eta.inertia_exp, eta.frob_exp + 2 * eta.ctx.d * k)


def dual_twist(eta: TameCharacter, lam: SimilitudeCharacter) -> TameCharacter:
    """``V(η)^∨ ⊗ λ`` as an induced character."""
    res = restrict_similitude(lam, eta.ctx)
    return TameCharacter(eta.ctx, res.inertia_exp - eta.inertia_exp, res.frob_exp - eta.frob_exp)


def count_self_dual_twists(eta: TameCharacter, lam: SimilitudeCharacter, m: int) -> int:
    """Classes of unramified twists of order dividing ``4m`` keeping V(η) self-dual up to ``λ``."""
    if not is_irreducible(eta):
        raise NotIrreducible("η must be regular")
    if eta.ctx.d != m:
        raise ValueError("η must have degree m")
    N = eta.ctx.N
    if N % (4 * m):
        raise ValueError(f"N = {N} cannot represent characters of order {4 * m}")
    classes = set()
    for k in range(0, N, N // (4 * m)):
        t = twist(eta, k)
        if t.key() == dual_twist(t, lam).key():
            classes.add(t.key())
    if len(classes) > 2:
        raise AssertionError("more than two self-dual twist classes")
    return len(classes)


def hom_dim(p1: InducedParameter, p2: InducedParameter) -> int:
    """``dim Hom_{W_k}(V(p1), V(p2))`` by Mackey on components."""
    return sum(1 for a in p1.components for b in p2.components
               if a.degree == b.degree and a.key() == b.key())


def single(eta: TameCharacter, lam: SimilitudeCharacter) -> InducedParameter:
    return InducedParameter((eta,), lam)
