"""Exact dense linear algebra over Q(zeta): echelon forms, nullspaces,
subspace bookkeeping.  Everything here is small-matrix code used by module
models and block computations; rows are lists of CycloNum."""

from __future__ import annotations

from .cyclotomic import CycloField, CycloNum

__all__ = [
    "Subspace",
    "mat_mul",
    "mat_vec",
    "mat_add",
    "mat_sub",
    "mat_scale",
    "mat_pow",
    "commutator",
    "identity",
    "zero_matrix",
    "transpose",
    "rank",
    "nullspace",
    "solve",
]


def zero_matrix(field: CycloField, m: int, n: int):
    return [[field.zero] * n for _ in range(m)]


def identity(field: CycloField, n: int):
    return [[field.one if i == j else field.zero for j in range(n)] for i in range(n)]


def transpose(a):
    return [list(col) for col in zip(*a)]


def mat_vec(a, v):
    out = []
    for row in a:
        acc = None
        for x, y in zip(row, v):
            if not x.is_zero() and not y.is_zero():
                acc = x * y if acc is None else acc + x * y
        out.append(acc if acc is not None else row[0].field.zero)
    return out


def mat_mul(a, b):
    bt = transpose(b)
    return [mat_vec(bt, row) for row in a]


def mat_add(a, b):
    return [[x + y for x, y in zip(r, s)] for r, s in zip(a, b)]


def mat_sub(a, b):
    return [[x - y for x, y in zip(r, s)] for r, s in zip(a, b)]


def mat_scale(c, a):
    return [[c * x for x in row] for row in a]


def mat_pow(a, n: int):
    field = a[0][0].field
    result = identity(field, len(a))
    base = a
    while n:
        if n & 1:
            result = mat_mul(result, base)
        base = mat_mul(base, base) if n > 1 else base
        n >>= 1
    return result


def commutator(a, b):
    return mat_sub(mat_mul(a, b), mat_mul(b, a))


class Subspace:
    """A subspace of k^n kept in reduced row echelon form.

    add() reduces a vector against the basis and absorbs any new direction,
    returning whether the dimension grew.  Equality compares canonical RREFs.
    """

    def __init__(self, field: CycloField, n: int, vectors=None):
        self.field = field
        self.n = n
        self.rows: list[list[CycloNum]] = []
        self.pivots: list[int] = []
        if vectors is not None:
            for v in vectors:
                self.add(v)

    @property
    def dim(self) -> int:
        return len(self.rows)

    def reduce(self, vec):
        """Residue of vec modulo the subspace (fresh list)."""
        v = list(vec)
        for row, p in zip(self.rows, self.pivots):
            c = v[p]
            if not c.is_zero():
                for j in range(p, self.n):
                    if not row[j].is_zero():
                        v[j] = v[j] - c * row[j]
        return v

    def contains(self, vec) -> bool:
        return all(x.is_zero() for x in self.reduce(vec))

    def contains_all(self, vectors) -> bool:
        return all(self.contains(v) for v in vectors)

    def add(self, vec) -> bool:
        v = self.reduce(vec)
        for p in range(self.n):
            if not v[p].is_zero():
                inv = v[p].inverse()
                v = [x * inv for x in v]
                # back-substitute into earlier rows to stay fully reduced
                for row in self.rows:
                    c = row[p]
                    if not c.is_zero():
                        for j in range(p, self.n):
                            if not v[j].is_zero():
                                row[j] = row[j] - c * v[j]
                idx = 0
                while idx < len(self.pivots) and self.pivots[idx] < p:
                    idx += 1
                self.rows.insert(idx, v)
                self.pivots.insert(idx, p)
                return True
        return False

    def add_all(self, vectors) -> bool:
        grew = False
        for v in vectors:
            grew = self.add(v) or grew
        return grew

    def basis(self):
        return [list(r) for r in self.rows]

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.n == other.n and self.pivots == other.pivots and self.rows == other.rows

    def __le__(self, other):
        return other.contains_all(self.rows)

    def __repr__(self):
        return f"Subspace(dim={self.dim}, ambient={self.n})"

    def intersect(self, other: "Subspace") -> "Subspace":
        """Zassenhaus-style intersection via a doubled-width echelon."""
        assert self.n == other.n
        f = self.field
        wide = Subspace(f, 2 * self.n)
        for r in self.rows:
            wide.add(list(r) + list(r))
        inter = Subspace(f, self.n)
        for r in other.rows:
            residue = wide.reduce(list(r) + [f.zero] * self.n)
            if all(x.is_zero() for x in residue[: self.n]):
                inter.add([-x for x in residue[self.n:]])
            else:
                wide.add(residue)
        return inter

    def sum(self, other: "Subspace") -> "Subspace":
        out = Subspace(self.field, self.n, self.basis())
        out.add_all(other.rows)
        return out


def rank(rows, field: CycloField | None = None, n: int | None = None) -> int:
    rows = list(rows)
    if not rows:
        return 0
    if field is None:
        field = rows[0][0].field
    sp = Subspace(field, len(rows[0]), rows)
    return sp.dim


def nullspace(rows, field: CycloField, n: int):
    """Basis of {x : A x = 0} for A given as a list of length-n rows."""
    sp = Subspace(field, n, rows)
    pivot_set = set(sp.pivots)
    free_cols = [j for j in range(n) if j not in pivot_set]
    basis = []
    for j in free_cols:
        v = [field.zero] * n
        v[j] = field.one
        for row, p in zip(sp.rows, sp.pivots):
            v[p] = -row[j]
        basis.append(v)
    return basis


def solve(a_rows, b, field: CycloField):
    """One solution x of A x = b, or None if inconsistent (A as rows)."""
    n = len(a_rows[0])
    aug = Subspace(field, n + 1)
    for row, rhs in zip(a_rows, b):
        aug.add(list(row) + [rhs])
    x = [field.zero] * n
    for row, p in zip(aug.rows, aug.pivots):
        if p == n:
            return None
    # back-substitution on the fully reduced system
    for row, p in zip(reversed(aug.rows), reversed(aug.pivots)):
        acc = row[n]
        for j in range(p + 1, n):
            if not row[j].is_zero():
                acc = acc - row[j] * x[j]
        x[p] = acc
    return x
