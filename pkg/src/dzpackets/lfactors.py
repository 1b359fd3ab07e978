"""Monomial models of tame Weil representations and their Artin L-factors.

A representation is stored on a basis permuted by Frobenius:
``Frob e_i = ζ_N^{s_i} e_{π(i)}`` and a generator of tame inertia acts on
``e_i`` by ``ζ^{a_i}`` with ``ζ`` a generator of ``F_{q^K}^×``.  L-factors
are kept as lists of Frobenius cycles on the inertia invariants, each
cycle of length ℓ with total scalar ``ζ_N^z`` contributing
``1 - ζ_N^z T^ℓ`` to the denominator.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import lcm
from typing import Sequence

from .weilparams import (InducedParameter, NotIrreducible, SimilitudeCharacter, TameCharacter,
                         enumerate_trd, hom_dim, is_irreducible, is_symplectic)


class PreconditionViolation(ValueError):
    """A hypothesis of the pole criterion fails."""


@dataclass(frozen=True)
class MonomialRep:
    q: int
    K: int
    N: int
    inertia_exps: tuple[int, ...]
    frob_perm: tuple[int, ...]
    frob_scalars: tuple[int, ...]

    def __post_init__(self) -> None:
        n = len(self.inertia_exps)
        if sorted(self.frob_perm) != list(range(n)) or len(self.frob_scalars) != n:
            raise ValueError("frob_perm must be a permutation of the basis")
        mod = self.modulus
        object.__setattr__(self, "inertia_exps", tuple(a % mod for a in self.inertia_exps))
        object.__setattr__(self, "frob_scalars", tuple(s % self.N for s in self.frob_scalars))
        for i, j in enumerate(self.frob_perm):
            if self.inertia_exps[j] != self.q * self.inertia_exps[i] % mod:
                raise ValueError("inertia exponents are not Frobenius-compatible")

    @property
    def dim(self) -> int:
        return len(self.inertia_exps)

    @property
    def modulus(self) -> int:
        return self.q ** self.K - 1

    def rescaled(self, K: int, N: int) -> "MonomialRep":
        """The same representation in a larger ambient field and value group."""
        if K % self.K or N % self.N:
            raise ValueError("can only rescale to multiples")
        f = (self.q ** K - 1) // self.modulus
        g = N // self.N
        return MonomialRep(self.q, K, N, tuple(a * f for a in self.inertia_exps), self.frob_perm,
                           tuple(s * g for s in self.frob_scalars))


def _common(m1: MonomialRep, m2: MonomialRep) -> tuple[MonomialRep, MonomialRep]:
    if m1.q != m2.q:
        raise ValueError("representations over different residue fields")
    K, N = lcm(m1.K, m2.K), lcm(m1.N, m2.N)
    return m1.rescaled(K, N), m2.rescaled(K, N)


def trivial_rep(q: int, N: int, K: int = 1) -> MonomialRep:
    return MonomialRep(q, K, N, (0,), (0,), (0,))


def character_rep(lam: SimilitudeCharacter, K: int = 1) -> MonomialRep:
    """The one-dimensional representation ``λ`` of ``W_k``."""
    lift = (lam.q ** K - 1) // (lam.q - 1)
    return MonomialRep(lam.q, K, lam.N, (lam.inertia_exp * lift,), (0,), (lam.frob_exp,))


def induce_to_monomial(eta: TameCharacter) -> MonomialRep:
    """V(η) on the basis of Frobenius conjugates, wrap-around scalar ``η(Frob^{2d})``."""
    if not is_irreducible(eta):
        raise NotIrreducible(f"η = {eta.as_tuple()} is not regular")
    k = 2 * eta.ctx.d
    perm = tuple((i + 1) % k for i in range(k))
    scalars = tuple(eta.frob_exp if i == k - 1 else 0 for i in range(k))
    return MonomialRep(eta.ctx.q, k, eta.ctx.N, eta.orbit(), perm, scalars)


def direct_sum(*reps: MonomialRep) -> MonomialRep:
    if not reps:
        raise ValueError("empty direct sum")
    K = lcm(*(r.K for r in reps))
    N = lcm(*(r.N for r in reps))
    reps = tuple(r.rescaled(K, N) for r in reps)
    inertia, perm, scalars = [], [], []
    offset = 0
    for r in reps:
        inertia += r.inertia_exps
        perm += [p + offset for p in r.frob_perm]
        scalars += r.frob_scalars
        offset += r.dim
    return MonomialRep(reps[0].q, K, N, tuple(inertia), tuple(perm), tuple(scalars))


def parameter_rep(param: InducedParameter) -> MonomialRep:
    return direct_sum(*(induce_to_monomial(c) for c in param.components))


def tensor(m1: MonomialRep, m2: MonomialRep) -> MonomialRep:
    a, b = _common(m1, m2)
    n2 = b.dim
    inertia, perm, scalars = [], [], []
    for i in range(a.dim):
        for j in range(n2):
            inertia.append(a.inertia_exps[i] + b.inertia_exps[j])
            perm.append(a.frob_perm[i] * n2 + b.frob_perm[j])
            scalars.append(a.frob_scalars[i] + b.frob_scalars[j])
    return MonomialRep(a.q, a.K, a.N, tuple(inertia), tuple(perm), tuple(scalars))


def dual_rep(m: MonomialRep) -> MonomialRep:
    return MonomialRep(m.q, m.K, m.N, tuple(-a for a in m.inertia_exps), m.frob_perm,
                       tuple(-s for s in m.frob_scalars))


def _pair_rep(m: MonomialRep, diagonal: bool) -> MonomialRep:
    pairs = [(i, j) for i in range(m.dim) for j in range(i if diagonal else i + 1, m.dim)]
    index = {p: k for k, p in enumerate(pairs)}
    inertia, perm, scalars = [], [], []
    for i, j in pairs:
        pi, pj = m.frob_perm[i], m.frob_perm[j]
        s = m.frob_scalars[i] + m.frob_scalars[j]
        if pi > pj:
            pi, pj = pj, pi
            if not diagonal:
                s += m.N // 2  # e_a ∧ e_b = -e_b ∧ e_a
        inertia.append(m.inertia_exps[i] + m.inertia_exps[j])
        perm.append(index[(pi, pj)])
        scalars.append(s)
    return MonomialRep(m.q, m.K, m.N, tuple(inertia), tuple(perm), tuple(scalars))


def sym2(m: MonomialRep) -> MonomialRep:
    return _pair_rep(m, diagonal=True)


def alt2(m: MonomialRep) -> MonomialRep:
    if m.N % 2:
        raise ValueError("Λ² needs -1 in the value group")
    return _pair_rep(m, diagonal=False)


def inertia_invariants(m: MonomialRep) -> MonomialRep:
    keep = [i for i, a in enumerate(m.inertia_exps) if a == 0]
    pos = {i: k for k, i in enumerate(keep)}
    if any(m.frob_perm[i] not in pos for i in keep):
        raise AssertionError("inertia invariants are not Frobenius-stable")
    return MonomialRep(m.q, m.K, m.N, tuple(0 for _ in keep),
                       tuple(pos[m.frob_perm[i]] for i in keep),
                       tuple(m.frob_scalars[i] for i in keep))


@dataclass(frozen=True)
class LFactor:
    """``∏ 1/(1 - ζ_N^z T^ℓ)`` with ``T = q^{-s}``."""

    cycles: tuple[tuple[int, int], ...]
    N: int
    restricted: bool = field(default=False, compare=False)

    def __mul__(self, other: "LFactor") -> "LFactor":
        N = lcm(self.N, other.N)
        f, g = N // self.N, N // other.N
        return LFactor(tuple(sorted([(l, z * f % N) for l, z in self.cycles]
                                    + [(l, z * g % N) for l, z in other.cycles])), N)

    def triples(self) -> list[tuple[int, int, int]]:
        return [(l, z, self.N) for l, z in self.cycles]

    def __str__(self) -> str:
        if not self.cycles:
            return "1"
        parts = []
        for l, z in self.cycles:
            t = "T" if l == 1 else f"T^{l}"
            parts.append(f"(1 - {t})" if z == 0 else f"(1 - ζ_{self.N}^{z}·{t})")
        return "1/[" + " ".join(parts) + "]"


def l_factor(m: MonomialRep) -> LFactor:
    """Artin L-factor; non-invariant input is restricted first and flagged."""
    restricted = any(m.inertia_exps)
    inv = inertia_invariants(m) if restricted else m
    seen = [False] * inv.dim
    cycles = []
    for start in range(inv.dim):
        if seen[start]:
            continue
        length, z, i = 0, 0, start
        while not seen[i]:
            seen[i] = True
            z += inv.frob_scalars[i]
            i = inv.frob_perm[i]
            length += 1
        cycles.append((length, z % inv.N))
    return LFactor(tuple(sorted(cycles)), inv.N, restricted)


def pole_order_at_zero(L: LFactor) -> int:
    return sum(1 for _, z in L.cycles if z == 0)


# ---------------------------------------------------------------------------
# pole criterion
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class MuZeroReport:
    pole_orders: tuple[int, int, int, int]
    sym2_inertia_dims: tuple[int, int]
    hom: int

    @property
    def sym2_invariants(self) -> tuple[int, int]:
        """``W_k``-fixed dimensions of the two symmetric-square terms."""
        return self.pole_orders[2], self.pole_orders[3]

    @property
    def hom_nonzero(self) -> bool:
        return self.hom > 0


def mu_zero_criterion(phi_pi: InducedParameter, phi_sigma: InducedParameter) -> MuZeroReport:
    """Pole orders at ``s = 0`` of the four L-denominators in the Plancherel factorisation."""
    if len(phi_sigma.components) != 1:
        raise PreconditionViolation("φ_σ must be irreducible")
    (eta,) = phi_sigma.components
    if not is_irreducible(eta):
        raise PreconditionViolation("φ_σ must be irreducible")
    lam = phi_pi.similitude
    if phi_sigma.similitude != lam:
        raise PreconditionViolation("φ_σ must have the similitude character of φ_π")
    if not is_symplectic(eta, lam):
        raise PreconditionViolation("φ_σ must be symplectic with similitude sim φ_π")
    vp, vs = parameter_rep(phi_pi), parameter_rep(phi_sigma)
    lam_rep = character_rep(lam)
    dens = [
        tensor(dual_rep(vp), vs),
        tensor(vp, dual_rep(vs)),
        tensor(sym2(vs), dual_rep(lam_rep)),
        tensor(sym2(dual_rep(vs)), lam_rep),
    ]
    orders = tuple(pole_order_at_zero(l_factor(d)) for d in dens)
    sym_inv = (inertia_invariants(dens[2]).dim, inertia_invariants(dens[3]).dim)
    if any(orders[2:]):
        raise AssertionError("a symmetric-square denominator has a pole for symplectic φ_σ")
    return MuZeroReport(orders, sym_inv, hom_dim(phi_pi, phi_sigma))


@dataclass(frozen=True)
class AgreementReport:
    parameter: InducedParameter
    passing: tuple[InducedParameter, ...]
    family_size: int

    @property
    def unique(self) -> bool:
        return len(self.passing) == 1 and self.passing[0].key() == self.parameter.key()


def hom_via_poles(p1: InducedParameter, p2: InducedParameter) -> int:
    """``dim Hom`` read off from the pole order of ``L(s, p1^∨ ⊗ p2)``."""
    return pole_order_at_zero(l_factor(tensor(dual_rep(parameter_rep(p1)), parameter_rep(p2))))


def packets_agree_check(phi: InducedParameter, family: Sequence[InducedParameter] | None = None,
                        n: int | None = None) -> AgreementReport:
    """Candidates ``φ'`` with ``Hom(φ_i, φ') ≠ 0`` for every component, by both Hom routes."""
    if family is None:
        if n is None:
            n = sum(c.degree for c in phi.components)
        family = enumerate_trd(phi.similitude.q, n, phi.similitude)
    passing = []
    for cand in family:
        ok = True
        for comp in phi.components:
            piece = InducedParameter((comp,), phi.similitude)
            mackey, poles = hom_dim(piece, cand), hom_via_poles(piece, cand)
            if mackey != poles:
                raise AssertionError("pole order and Mackey count disagree")
            ok = ok and mackey > 0
        if ok:
            passing.append(cand)
    return AgreementReport(phi, tuple(passing), len(family))
