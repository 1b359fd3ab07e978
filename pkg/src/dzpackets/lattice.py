"""Exact integer-lattice linear algebra.

Smith normal form, torsion subgroups of finite quotients ``L / im(M)`` with
canonical coset representatives, and exact rational solving.  Everything is
computed with Python integers and :class:`fractions.Fraction`; no floating
point is used anywhere in this module.
"""

from __future__ import annotations

import itertools
import unicodedata
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

Matrix = list[list[int]]
Vector = tuple[int, ...]


class NoSolution(ValueError):
    """Raised when a linear system has no rational solution."""


# ---------------------------------------------------------------------------
# small matrix helpers
# ---------------------------------------------------------------------------


def identity(n: int) -> Matrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def as_matrix(rows: Iterable[Iterable[int]]) -> Matrix:
    return [list(r) for r in rows]


def matmul(a: Sequence[Sequence], b: Sequence[Sequence]) -> list[list]:
    if not a:
        return []
    inner = len(b)
    cols = len(b[0]) if b else 0
    return [[sum(a[i][k] * b[k][j] for k in range(inner)) for j in range(cols)]
            for i in range(len(a))]


def matvec(a: Sequence[Sequence], v: Sequence) -> tuple:
    return tuple(sum(x * y for x, y in zip(row, v)) for row in a)


def transpose(a: Sequence[Sequence]) -> list[list]:
    return [list(col) for col in zip(*a)] if a else []


def determinant(a: Sequence[Sequence]) -> Fraction:
    """Exact determinant by fraction-valued Gaussian elimination."""
    n = len(a)
    m = [[Fraction(x) for x in row] for row in a]
    det = Fraction(1)
    for c in range(n):
        pivot = next((r for r in range(c, n) if m[r][c] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != c:
            m[c], m[pivot] = m[pivot], m[c]
            det = -det
        det *= m[c][c]
        for r in range(c + 1, n):
            f = m[r][c] / m[c][c]
            if f:
                m[r] = [x - f * y for x, y in zip(m[r], m[c])]
    return det


def inverse(a: Sequence[Sequence]) -> list[list[Fraction]]:
    """Exact inverse of a square matrix; raises NoSolution if singular."""
    n = len(a)
    m = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(a)]
    for c in range(n):
        pivot = next((r for r in range(c, n) if m[r][c] != 0), None)
        if pivot is None:
            raise NoSolution("matrix is singular")
        m[c], m[pivot] = m[pivot], m[c]
        p = m[c][c]
        m[c] = [x / p for x in m[c]]
        for r in range(n):
            if r != c and m[r][c] != 0:
                f = m[r][c]
                m[r] = [x - f * y for x, y in zip(m[r], m[c])]
    return [row[n:] for row in m]


def integer_inverse(a: Sequence[Sequence[int]]) -> Matrix:
    """Inverse of a unimodular integer matrix."""
    inv = inverse(a)
    out = []
    for row in inv:
        if any(x.denominator != 1 for x in row):
            raise ValueError("matrix is not unimodular")
        out.append([int(x) for x in row])
    return out


# ---------------------------------------------------------------------------
# lattice types
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class FreeLattice:
    """A free abelian group with named basis vectors."""

    rank: int
    basis_labels: tuple[str, ...]

    def __post_init__(self) -> None:
        labels = tuple(self.basis_labels)
        object.__setattr__(self, "basis_labels", labels)
        if len(labels) != self.rank:
            raise ValueError("rank must equal the number of basis labels")
        if len(set(labels)) != len(labels):
            raise ValueError("basis labels must be pairwise distinct")

    @classmethod
    def standard(cls, labels: Sequence[str]) -> "FreeLattice":
        return cls(len(labels), tuple(labels))

    def unit(self, label: str) -> Vector:
        i = self.basis_labels.index(label)
        return tuple(int(j == i) for j in range(self.rank))

    def format(self, v: Sequence, bar: bool = False) -> str:
        """Render ``v`` as a signed combination of basis labels."""
        return format_combination(v, self.basis_labels, bar=bar)


@dataclass(frozen=True)
class LatticeMap:
    """A homomorphism of free lattices given by a codomain x domain matrix."""

    domain: FreeLattice
    codomain: FreeLattice
    matrix: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        mat = tuple(tuple(int(x) for x in row) for row in self.matrix)
        object.__setattr__(self, "matrix", mat)
        if len(mat) != self.codomain.rank:
            raise ValueError("matrix row count must equal codomain rank")
        if any(len(row) != self.domain.rank for row in mat):
            raise ValueError("matrix column count must equal domain rank")

    def __call__(self, v: Sequence) -> tuple:
        return matvec(self.matrix, v)


def format_combination(v: Sequence, labels: Sequence[str], bar: bool = False) -> str:
    """Format an integer/rational vector, e.g. ``e1* - 2e2*``.

    With ``bar=True`` each label is written with a combining overline, which
    is how coset classes are displayed (``ē1* + ē2*``).  Output is NFC
    normalized, so ``e`` with the overline becomes the precomposed ``ē``.
    """
    terms: list[str] = []
    for coeff, label in zip(v, labels):
        if coeff == 0:
            continue
        name = (label[0] + "̄" + label[1:]) if bar else label
        mag = abs(coeff)
        body = name if mag == 1 else f"{mag}{name}"
        if not terms:
            terms.append(body if coeff > 0 else f"-{body}")
        else:
            terms.append(("+ " if coeff > 0 else "- ") + body)
    if not terms:
        return "0̄" if bar else "0"
    return unicodedata.normalize("NFC", " ".join(terms))


# ---------------------------------------------------------------------------
# Smith normal form
# ---------------------------------------------------------------------------


def smith_normal_form(m: Sequence[Sequence[int]]) -> tuple[Matrix, Matrix, Matrix]:
    """Return unimodular ``U``, ``V`` and diagonal ``D`` with ``U·M·V = D``.

    The diagonal entries are non-negative and satisfy ``d_i | d_{i+1}``.
    """
    rows = len(m)
    cols = len(m[0]) if rows else 0
    a = [list(map(int, r)) for r in m]
    u = identity(rows)
    v = identity(cols)

    def swap_rows(i: int, j: int) -> None:
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i: int, j: int) -> None:
        for row in a:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]

    def add_row(dst: int, src: int, f: int) -> None:
        a[dst] = [x + f * y for x, y in zip(a[dst], a[src])]
        u[dst] = [x + f * y for x, y in zip(u[dst], u[src])]

    def add_col(dst: int, src: int, f: int) -> None:
        for row in a:
            row[dst] += f * row[src]
        for row in v:
            row[dst] += f * row[src]

    t = 0
    while t < min(rows, cols):
        nonzero = [(abs(a[i][j]), i, j) for i in range(t, rows)
                   for j in range(t, cols) if a[i][j] != 0]
        if not nonzero:
            break
        _, pi, pj = min(nonzero)
        swap_rows(t, pi)
        swap_cols(t, pj)
        while True:
            done = True
            for i in range(t + 1, rows):
                if a[i][t]:
                    add_row(i, t, -(a[i][t] // a[t][t]))
                    if a[i][t]:
                        done = False
            for j in range(t + 1, cols):
                if a[t][j]:
                    add_col(j, t, -(a[t][j] // a[t][t]))
                    if a[t][j]:
                        done = False
            if not done:
                _, pi, pj = min((abs(a[i][j]), i, j)
                                for i, j in itertools.chain(
                                    ((i, t) for i in range(t, rows)),
                                    ((t, j) for j in range(t, cols)))
                                if a[i][j] != 0)
                swap_rows(t, pi)
                swap_cols(t, pj)
                continue
            # divisibility: push a non-multiple into the pivot row
            bad = next(((i, j) for i in range(t + 1, rows) for j in range(t + 1, cols)
                        if a[i][j] % a[t][t]), None)
            if bad is None:
                break
            add_row(t, bad[0], 1)
        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            u[t] = [-x for x in u[t]]
        t += 1
    return u, a, v


def diagonal(d: Sequence[Sequence[int]]) -> list[int]:
    return [d[i][i] for i in range(min(len(d), len(d[0]) if d else 0))]


# ---------------------------------------------------------------------------
# finite abelian groups and torsion quotients
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class FinAbGroup:
    """Finite abelian group ``⊕ ℤ/d_i`` with canonical class codes.

    ``representatives`` maps each class code (a tuple of residues, one per
    invariant factor) to a cocharacter vector in the ambient lattice.  Codes
    are the lexicographically least non-negative Smith coordinates.
    """

    invariant_factors: tuple[int, ...]
    representatives: dict[tuple[int, ...], Vector]
    lattice: FreeLattice | None = None
    # Smith data used by reduce(): coordinate rows and their moduli
    _rows: tuple[tuple[int, ...], ...] = field(default=(), repr=False)
    _free_rows: tuple[tuple[int, ...], ...] = field(default=(), repr=False)

    @property
    def order(self) -> int:
        out = 1
        for d in self.invariant_factors:
            out *= d
        return out

    def codes(self) -> list[tuple[int, ...]]:
        return list(self.representatives)

    def reduce(self, v: Sequence[int]) -> tuple[int, ...]:
        """Class code of a lattice vector lying in the torsion subgroup."""
        if any(matvec([r], v)[0] for r in self._free_rows):
            raise ValueError("vector does not lie in the torsion subgroup")
        return tuple(matvec([r], v)[0] % d
                     for r, d in zip(self._rows, self.invariant_factors))

    def representative(self, code: Sequence[int]) -> Vector:
        return self.representatives[tuple(code)]

    def members_among(self, vectors: Iterable[Sequence[int]], code) -> list[Vector]:
        """Those ``vectors`` that fall in the class ``code``."""
        out = []
        for w in vectors:
            try:
                if self.reduce(w) == tuple(code):
                    out.append(tuple(w))
            except ValueError:
                continue
        return out

    def class_label(self, code: Sequence[int]) -> str:
        """Display name of a class, listing coinciding basis vectors.

        For example the single non-trivial class of ``ℤ²/(1-w)`` for the
        rotation prints as ``ē1* = ē2*``.
        """
        labels = self.lattice.basis_labels if self.lattice else None
        rep = self.representative(code)
        if labels is None:
            return str(rep)
        if not any(rep):
            return "0̄"
        units = [tuple(int(i == j) for j in range(len(labels))) for i in range(len(labels))]
        same = self.members_among(units, code)
        if len(same) > 1:
            return " = ".join(format_combination(u, labels, bar=True) for u in same)
        return format_combination(rep, labels, bar=True)


def _display_key(v: Sequence[int]) -> tuple:
    # short vectors first, then fewer negative entries, then earlier basis vectors
    return (sum(abs(x) for x in v), sum(1 for x in v if x < 0), tuple(-x for x in v))


def quotient_torsion(lat: FreeLattice | int, m: LatticeMap | Sequence[Sequence[int]]) -> FinAbGroup:
    """Torsion subgroup of ``L / im(M)`` with one representative per class."""
    if isinstance(lat, int):
        lat = FreeLattice.standard([f"e{i}" for i in range(lat)])
    mat = m.matrix if isinstance(m, LatticeMap) else tuple(tuple(r) for r in m)
    if isinstance(m, LatticeMap) and m.codomain != lat:
        raise ValueError("map codomain must be the lattice")
    n = lat.rank
    if not mat or not mat[0]:
        mat = tuple(() for _ in range(n))
    if len(mat) != n:
        raise ValueError("map codomain rank must match the lattice")
    if mat and mat[0]:
        u, d, _ = smith_normal_form(mat)
        diag = diagonal(d)
    else:
        u, diag = identity(n), []
    diag = diag + [0] * (n - len(diag))
    rows, factors, free = [], [], []
    for i, di in enumerate(diag):
        if di == 0:
            free.append(tuple(u[i]))
        elif di > 1:
            rows.append(tuple(u[i]))
            factors.append(di)
    group = FinAbGroup(tuple(factors), {}, lat, tuple(rows), tuple(free))
    # chosen displayed representative: shortest vector found in a small box,
    # falling back to the Smith-basis lift
    uinv = integer_inverse(u)
    reps: dict[tuple[int, ...], Vector] = {}
    for code in itertools.product(*(range(d) for d in factors)):
        y = [0] * n
        k = 0
        for i, di in enumerate(diag):
            if di > 1:
                y[i] = code[k]
                k += 1
        reps[code] = tuple(matvec(uinv, y))
    best: dict[tuple[int, ...], Vector] = {}
    if factors and n <= 8:
        for w in itertools.product((-1, 0, 1), repeat=n):
            try:
                c = group.reduce(w)
            except ValueError:
                continue
            if c not in best or _display_key(w) < _display_key(best[c]):
                best[c] = w
    for code, lift in reps.items():
        cand = best.get(code, lift)
        if _display_key(lift) < _display_key(cand):
            cand = lift
        group.representatives[code] = tuple(cand)
    return group


# ---------------------------------------------------------------------------
# rational solving
# ---------------------------------------------------------------------------


def rational_solve(m: LatticeMap | Sequence[Sequence], v: Sequence) -> tuple[Fraction, ...]:
    """Solve ``M·x = v`` exactly over ℚ; free variables are set to 0."""
    mat = m.matrix if isinstance(m, LatticeMap) else m
    rows = len(mat)
    cols = len(mat[0]) if rows else 0
    if len(v) != rows:
        raise ValueError("right-hand side has the wrong length")
    a = [[Fraction(x) for x in mat[i]] + [Fraction(v[i])] for i in range(rows)]
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        p = next((i for i in range(r, rows) if a[i][c] != 0), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        pv = a[r][c]
        a[r] = [x / pv for x in a[r]]
        for i in range(rows):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    for i in range(r, rows):
        if a[i][cols] != 0:
            raise NoSolution("vector is not in the rational image")
    x = [Fraction(0)] * cols
    for i, c in enumerate(pivots):
        x[c] = a[i][cols]
    return tuple(x)


def in_integer_span(gens: Sequence[Sequence[int]], v: Sequence[int]) -> bool:
    """Whether ``v`` lies in the ℤ-span of ``gens`` (given as vectors)."""
    if not gens:
        return not any(v)
    cols = transpose(gens)
    u, d, _ = smith_normal_form(cols)
    y = matvec(u, v)
    diag = diagonal(d)
    for i, yi in enumerate(y):
        di = diag[i] if i < len(diag) else 0
        if di == 0:
            if yi != 0:
                return False
        elif yi % di:
            return False
    return True


def rank(rows: Sequence[Sequence]) -> int:
    """Rank over ℚ of a list of row vectors."""
    a = [[Fraction(x) for x in r] for r in rows]
    if not a:
        return 0
    rk = 0
    for c in range(len(a[0])):
        p = next((i for i in range(rk, len(a)) if a[i][c] != 0), None)
        if p is None:
            continue
        a[rk], a[p] = a[p], a[rk]
        for i in range(rk + 1, len(a)):
            f = a[i][c] / a[rk][c]
            a[i] = [x - f * y for x, y in zip(a[i], a[rk])]
        rk += 1
    return rk
