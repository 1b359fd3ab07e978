"""Brute-force oracles that share no code with the package under test."""

from __future__ import annotations

import itertools
from math import gcd, lcm


# ---------------------------------------------------------------------------
# exact cyclotomic integers
# ---------------------------------------------------------------------------


def _poly_divmod(num: list[int], den: list[int]) -> tuple[list[int], list[int]]:
    """Division of integer polynomials (lowest degree first) by a monic divisor."""
    num = list(num)
    out = [0] * max(len(num) - len(den) + 1, 1)
    for k in range(len(num) - len(den), -1, -1):
        c = num[k + len(den) - 1]
        out[k] = c
        for i, d in enumerate(den):
            num[k + i] -= c * d
    rem = num[: len(den) - 1] or [0]
    return out, rem


def cyclotomic_polynomial(n: int) -> list[int]:
    """Coefficients of the n-th cyclotomic polynomial, lowest degree first."""
    poly = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            poly, rem = _poly_divmod(poly, cyclotomic_polynomial(d))
            assert not any(rem)
    while len(poly) > 1 and poly[-1] == 0:
        poly.pop()
    return poly


class CycloInt:
    """An element of ℤ[ζ_L] as a power sum, with zero test modulo Φ_L."""

    def __init__(self, L: int, terms: dict[int, int] | None = None):
        self.L = L
        self.terms = {k % L: v for k, v in (terms or {}).items() if v}

    @classmethod
    def root(cls, L: int, k: int) -> "CycloInt":
        return cls(L, {k: 1})

    def __add__(self, other: "CycloInt") -> "CycloInt":
        t = dict(self.terms)
        for k, v in other.terms.items():
            t[k] = t.get(k, 0) + v
        return CycloInt(self.L, t)

    def __mul__(self, other: "CycloInt") -> "CycloInt":
        t: dict[int, int] = {}
        for (a, x), (b, y) in itertools.product(self.terms.items(), other.terms.items()):
            k = (a + b) % self.L
            t[k] = t.get(k, 0) + x * y
        return CycloInt(self.L, t)

    def is_zero(self) -> bool:
        poly = [0] * self.L
        for k, v in self.terms.items():
            poly[k] += v
        _, rem = _poly_divmod(poly, cyclotomic_polynomial(self.L))
        return not any(rem)


# ---------------------------------------------------------------------------
# λ-similitude alternating forms on monomial representations
# ---------------------------------------------------------------------------


def induced_monomial_matrices(q: int, d: int, N: int, a: int, f: int):
    """Generators of V(η) as monomial matrices ``e_i -> ζ^c e_σ(i)``.

    Inertia scalars are exponents of a generator of ``μ_{q^{2d}-1}`` and the
    Frobenius scalars are exponents of ``ζ_N``.
    """
    k = 2 * d
    M = q ** k - 1
    inertia = [(i, a * q ** i % M) for i in range(k)]
    frob = [((i + 1) % k, f if i == k - 1 else 0) for i in range(k)]
    return inertia, frob


def _pfaffian_terms(k: int):
    """Perfect matchings of ``range(k)`` with their Pfaffian signs."""
    if k == 0:
        yield [], 1
        return
    for j in range(1, k):
        rest = [x for x in range(1, k) if x != j]
        for sub, sign in _pfaffian_terms(k - 2):
            pairs = [(0, j)] + [(rest[x], rest[y]) for x, y in sub]
            yield pairs, sign * (-1) ** (j - 1)


def has_alternating_similitude_form(q: int, d: int, N: int, a: int, f: int,
                                    lam_inertia: int, lam_frob: int) -> bool:
    """Search for a nondegenerate alternating form ``B`` on V(η) with
    ``B(gv, gw) = λ(g) B(v, w)``.

    Every condition relates two matrix entries by a root of unity, so the
    entries fall into classes (weighted union-find); a class is forced to
    vanish when its relations are inconsistent.  The surviving classes span
    the space of invariant forms, and a nondegenerate one exists iff the
    Pfaffian is a non-zero polynomial in the class variables.
    """
    k = 2 * d
    M = q ** k - 1
    L = lcm(2, M, N)
    half = L // 2
    to_L_inertia, to_L_frob = L // M, L // N
    inertia, frob = induced_monomial_matrices(q, d, N, a, f)
    lam_i = lam_inertia * (M // (q - 1)) * to_L_inertia
    lam_f = lam_frob * to_L_frob

    entries = [(i, j) for i in range(k) for j in range(k) if i != j]
    parent = {e: e for e in entries}
    weight = {e: 0 for e in entries}  # b_e = ζ_L^weight[e] · b_root(e)
    dead: set = set()

    def find(e):
        if parent[e] == e:
            return e, 0
        r, w = find(parent[e])
        return r, (w + weight[e]) % L

    def relate(e1, e2, w):
        """Record ``b_{e2} = ζ_L^w · b_{e1}``."""
        r1, w1 = find(e1)
        r2, w2 = find(e2)
        if r1 == r2:
            if (w2 - w1 - w) % L:
                dead.add(r1)
            return
        parent[r2] = r1
        weight[r2] = (w1 + w - w2) % L
        if r2 in dead:
            dead.add(r1)

    for i, j in entries:
        relate((i, j), (j, i), half)
        # inertia is diagonal: ω^{c_i + c_j} b_ij = λ(t) b_ij
        ci, cj = inertia[i][1] * to_L_inertia, inertia[j][1] * to_L_inertia
        if (ci + cj - lam_i) % L:
            dead.add(find((i, j))[0])
        # Frobenius: ζ^{c_i + c_j} b_{σi σj} = λ(F) b_ij
        (si, fi), (sj, fj) = frob[i], frob[j]
        relate((i, j), (si, sj), (lam_f - (fi + fj) * to_L_frob) % L)

    roots = {find(e)[0] for e in entries}
    dead = {find(r)[0] for r in dead}
    free = sorted(roots - dead)
    if not free:
        return False
    var = {r: n for n, r in enumerate(free)}
    pf: dict[tuple[int, ...], CycloInt] = {}
    for pairs, sign in _pfaffian_terms(k):
        mono = [0] * len(free)
        coeff = CycloInt(L, {0: sign})
        zero = False
        for e in pairs:
            r, w = find(e)
            if r in dead:
                zero = True
                break
            mono[var[r]] += 1
            coeff = coeff * CycloInt.root(L, w)
        if zero:
            continue
        key = tuple(mono)
        pf[key] = pf.get(key, CycloInt(L)) + coeff
    return any(not c.is_zero() for c in pf.values())


def regular_exponents(q: int, d: int) -> list[int]:
    """Inertia exponents with ``2d`` distinct Frobenius conjugates."""
    k = 2 * d
    M = q ** k - 1
    return [a for a in range(M) if len({a * q ** i % M for i in range(k)}) == k]


def symplectic_orbits_by_search(q: int, d: int, N: int, lam_inertia: int, lam_frob: int) -> set:
    """Isomorphism classes ``(orbit, f)`` of symplectic V(η), by brute force."""
    M = q ** (2 * d) - 1
    out = set()
    for a in regular_exponents(q, d):
        for f in range(N):
            if has_alternating_similitude_form(q, d, N, a, f, lam_inertia, lam_frob):
                out.add((frozenset(a * q ** i % M for i in range(2 * d)), f))
    return out


# ---------------------------------------------------------------------------
# integer matrices
# ---------------------------------------------------------------------------


def _det(m: list[list[int]]) -> int:
    n = len(m)
    if n == 0:
        return 1
    total = 0
    for perm in itertools.permutations(range(n)):
        inv = sum(1 for i, j in itertools.combinations(range(n), 2) if perm[i] > perm[j])
        prod = 1
        for i in range(n):
            prod *= m[i][perm[i]]
        total += (-1) ** inv * prod
    return total


def invariant_factors_by_minors(m: list[list[int]]) -> list[int]:
    """Smith invariants from gcds of k×k minors (determinantal divisors)."""
    rows, cols = len(m), len(m[0]) if m else 0
    divisors = [1]
    for k in range(1, min(rows, cols) + 1):
        g = 0
        for ri in itertools.combinations(range(rows), k):
            for ci in itertools.combinations(range(cols), k):
                g = gcd(g, _det([[m[i][j] for j in ci] for i in ri]))
        if g == 0:
            break
        divisors.append(g)
    return [divisors[i] // divisors[i - 1] for i in range(1, len(divisors))]


# ---------------------------------------------------------------------------
# 2×2 matrices over an exact field
# ---------------------------------------------------------------------------


def share_eigenvector_2x2(A, B) -> bool:
    """Two 2×2 matrices share an eigenvector iff ``det(AB - BA) = 0``."""
    def mul(X, Y):
        return [[X[i][0] * Y[0][j] + X[i][1] * Y[1][j] for j in range(2)] for i in range(2)]

    AB, BA = mul(A, B), mul(B, A)
    C = [[AB[i][j] - BA[i][j] for j in range(2)] for i in range(2)]
    return C[0][0] * C[1][1] - C[0][1] * C[1][0] == 0


def induced_block(q: int, K: int, N: int, d: int, a: int, f: int):
    """V(η) for ``η`` of degree ``d`` with inertia exponents in ``μ_{q^K - 1}``."""
    k = 2 * d
    scale = (q ** K - 1) // (q ** k - 1)
    inertia = [a * q ** i * scale % (q ** K - 1) for i in range(k)]
    frob = [((i + 1) % k, f if i == k - 1 else 0) for i in range(k)]
    return inertia, frob


def block_sum(blocks):
    inertia, frob = [], []
    for inr, fr in blocks:
        off = len(inertia)
        inertia += inr
        frob += [(t + off, c) for t, c in fr]
    return inertia, frob


def intertwiner_dimension(rep1, rep2, M: int, N: int) -> int:
    """``dim Hom(V1, V2)`` by solving ``X g1 = g2 X`` entrywise."""
    (in1, fr1), (in2, fr2) = rep1, rep2
    entries = [(u, v) for u in range(len(in2)) for v in range(len(in1))]
    parent = {e: e for e in entries}
    weight = {e: 0 for e in entries}
    dead: set = set()

    def find(e):
        if parent[e] == e:
            return e, 0
        r, w = find(parent[e])
        return r, (w + weight[e]) % N

    for u, v in entries:
        if (in1[v] - in2[u]) % M:
            dead.add((u, v))
    for u, v in entries:
        # X_{τu, σv} = ζ^{t_u - s_v} X_{uv}
        (tu, cu), (sv, cv) = fr2[u], fr1[v]
        r1, w1 = find((u, v))
        r2, w2 = find((tu, sv))
        w = (cu - cv) % N
        if r1 == r2:
            if (w2 - w1 - w) % N:
                dead.add(r1)
            continue
        parent[r2] = r1
        weight[r2] = (w1 + w - w2) % N
    dead = {find(e)[0] for e in dead}
    return len({find(e)[0] for e in entries} - dead)
