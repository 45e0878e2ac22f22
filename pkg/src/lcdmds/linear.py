"""Generic linear codes over a Field, given by full-row-rank generator matrices.

This module holds the verification oracles everything else is checked
against: reduced row echelon form and rank, dual codes via null spaces,
intersection and hull dimensions, and two independent MDS tests (exhaustive
codeword enumeration and nonsingularity of every k-column submatrix).
Matrices are sequences of rows of canonical element indices.
"""

from __future__ import annotations

from itertools import combinations
from math import comb

import numpy as np

from .errors import BudgetExceeded, FieldMismatch, ParameterError
from .fields import Field

DEFAULT_BUDGET = 10**7

ROUTE_ENUMERATION = "enumeration"
ROUTE_COLUMN_SUBSETS = "column_subsets"


def _matrix(field: Field, rows) -> list[list[int]]:
    out = [[field.check(x) for x in row] for row in rows]
    if out and len({len(r) for r in out}) != 1:
        raise ParameterError("matrix rows have unequal lengths")
    return out


def rref(field: Field, rows):
    """Reduced row echelon form.

    Returns (rref_rows, rank, pivot_columns). Deterministic: the pivot for
    each column is the first row, top to bottom, with a nonzero entry there.
    """
    M = _matrix(field, rows)
    if not M:
        return (), 0, ()
    n = len(M[0])
    mul, sub, inv = field.mul, field.sub, field.inv
    pivots = []
    r = 0
    for c in range(n):
        pr = next((i for i in range(r, len(M)) if M[i][c]), None)
        if pr is None:
            continue
        M[r], M[pr] = M[pr], M[r]
        s = inv(M[r][c])
        M[r] = [mul(s, x) for x in M[r]]
        for i in range(len(M)):
            if i != r and M[i][c]:
                f = M[i][c]
                M[i] = [sub(x, mul(f, y)) for x, y in zip(M[i], M[r])]
        pivots.append(c)
        r += 1
        if r == len(M):
            break
    return tuple(tuple(row) for row in M), r, tuple(pivots)


def mat_mul(field: Field, A, B):
    """Exact matrix product over the field."""
    A = _matrix(field, A)
    B = _matrix(field, B)
    if A and B and len(A[0]) != len(B):
        raise ParameterError("inner dimensions do not match")
    add, mul = field.add, field.mul
    out = []
    for row in A:
        acc = [0] * (len(B[0]) if B else 0)
        for a, brow in zip(row, B):
            if a:
                for j, b in enumerate(brow):
                    if b:
                        acc[j] = add(acc[j], mul(a, b))
        out.append(acc)
    return out


class LinearCode:
    """An [n, k] linear code; the generator must have full row rank.

    k = 0 (empty generator) is allowed so duals of full-space codes exist.
    """

    def __init__(self, field: Field, gen, n: int | None = None):
        M = _matrix(field, gen)
        if M:
            length = len(M[0])
        elif n is not None:
            length = int(n)
        else:
            raise ParameterError("zero-dimensional code needs an explicit length")
        if n is not None and M and int(n) != length:
            raise ParameterError("explicit length disagrees with the generator")
        if length < 1:
            raise ParameterError("code length must be positive")
        if len(M) > length:
            raise ParameterError("more generator rows than the length allows")
        _, rank, _ = rref(field, M)
        if rank != len(M):
            raise ParameterError("generator rows are linearly dependent")
        self.field = field
        self.gen = tuple(tuple(row) for row in M)
        self.n = length
        self.k = len(M)

    def __repr__(self):
        return f"LinearCode([{self.n},{self.k}] over {self.field!r})"

    def _same_space(self, other: "LinearCode"):
        if self.field != other.field:
            raise FieldMismatch(f"{self.field!r} vs {other.field!r}")
        if self.n != other.n:
            raise ParameterError(f"length mismatch: {self.n} vs {other.n}")

    def same_row_space(self, other: "LinearCode") -> bool:
        self._same_space(other)
        a, ra, _ = rref(self.field, self.gen)
        b, rb, _ = rref(other.field, other.gen)
        return a[:ra] == b[:rb]

    def dual(self) -> "LinearCode":
        """The dual code under the standard inner product, in RREF."""
        F = self.field
        if self.k == 0:
            ident = [[1 if i == j else 0 for j in range(self.n)] for i in range(self.n)]
            return LinearCode(F, ident)
        R, rank, pivots = rref(F, self.gen)
        pivot_set = set(pivots)
        rows = []
        for f in (j for j in range(self.n) if j not in pivot_set):
            w = [0] * self.n
            w[f] = 1
            for r, pc in enumerate(pivots):
                w[pc] = F.neg(R[r][f])
            rows.append(w)
        if not rows:
            return LinearCode(F, [], n=self.n)
        canon, rank, _ = rref(F, rows)
        return LinearCode(F, canon[:rank])

    def intersection_dim(self, other: "LinearCode") -> int:
        """dim(C1 and C2) = k1 + k2 - rank of the stacked generators."""
        self._same_space(other)
        _, rank, _ = rref(self.field, list(self.gen) + list(other.gen))
        return self.k + other.k - rank

    def hull_dimension(self) -> int:
        """dim(C and C-dual) = k - rank(G Gt)."""
        if self.k == 0:
            return 0
        gt = [[row[j] for row in self.gen] for j in range(self.n)]
        _, rank, _ = rref(self.field, mat_mul(self.field, self.gen, gt))
        return self.k - rank

    def is_lcd(self) -> bool:
        return self.hull_dimension() == 0

    # -- minimum distance / MDS oracles --

    def minimum_distance(self, budget: int = DEFAULT_BUDGET) -> int:
        """Minimum Hamming weight over all q^k - 1 nonzero codewords.

        Exhaustive message enumeration; raises BudgetExceeded when q^k is
        over budget (use is_mds, which can fall back to column subsets).
        """
        if self.k == 0:
            raise ParameterError("zero-dimensional code has no minimum distance")
        total = self.field.q**self.k
        if total > budget:
            raise BudgetExceeded(
                f"enumerating {total} codewords exceeds the budget {budget}"
            )
        return self._enumerate_min_weight()

    def _enumerate_min_weight(self) -> int:
        F = self.field
        p, e, q = F.p, F.e, F.q
        n, k = self.n, self.k
        dtype = np.int16 if p <= 16000 else np.int32
        digits = np.array([F.coeffs(i) for i in range(q)], dtype=dtype)
        mul = F.mul
        scaled = []
        for row in self.gen:
            idx = np.array([[mul(c, x) for x in row] for c in range(q)])
            scaled.append(digits[idx])  # (q, n, e) digit tensor of c*row
        S = np.zeros((1, n, e), dtype=dtype)
        for r in range(k - 1):
            S = (S[:, None, :, :] + scaled[r][None, :, :, :]) % p
            S = S.reshape(-1, n, e)
        best = n + 1
        last = scaled[k - 1]
        for c in range(q):
            T = (S + last[c]) % p
            w = T.any(axis=2).sum(axis=1)
            if c == 0:
                w = w[1:]  # drop the all-zero message
            if w.size:
                best = min(best, int(w.min()))
        return best

    def mds_by_column_subsets(self, max_subsets: int | None = None) -> bool:
        """MDS iff every k-subset of generator columns is nonsingular."""
        if self.k == 0:
            raise ParameterError("zero-dimensional code has no MDS predicate")
        total = comb(self.n, self.k)
        if max_subsets is not None and total > max_subsets:
            raise BudgetExceeded(
                f"{total} column subsets exceed the budget {max_subsets}"
            )
        F = self.field
        k = self.k
        mul, sub, inv = F.mul, F.sub, F.inv
        for cols in combinations(range(self.n), k):
            M = [[row[c] for c in cols] for row in self.gen]
            singular = False
            for c in range(k):
                pr = next((i for i in range(c, k) if M[i][c]), None)
                if pr is None:
                    singular = True
                    break
                M[c], M[pr] = M[pr], M[c]
                piv = inv(M[c][c])
                for i in range(c + 1, k):
                    f = M[i][c]
                    if f:
                        f = mul(f, piv)
                        M[i] = [sub(x, mul(f, y)) for x, y in zip(M[i], M[c])]
            if singular:
                return False
        return True

    def mds_check(self, budget: int = DEFAULT_BUDGET):
        """(is_mds, route, min_distance) using the first route within budget.

        min_distance is None when the column-subset route decided.
        """
        if self.k == 0:
            raise ParameterError("zero-dimensional code has no MDS predicate")
        if self.field.q**self.k <= budget:
            d = self._enumerate_min_weight()
            return d == self.n - self.k + 1, ROUTE_ENUMERATION, d
        if comb(self.n, self.k) <= budget:
            return self.mds_by_column_subsets(), ROUTE_COLUMN_SUBSETS, None
        raise BudgetExceeded(
            f"neither {self.field.q ** self.k} codewords nor "
            f"{comb(self.n, self.k)} column subsets fit the budget {budget}"
        )

    def is_mds(self, budget: int = DEFAULT_BUDGET) -> bool:
        return self.mds_check(budget)[0]

    # -- serialization --

    def to_dict(self) -> dict:
        return {
            "field": self.field.to_dict(),
            "n": self.n,
            "k": self.k,
            "generator": [list(row) for row in self.gen],
        }

    @classmethod
    def from_dict(cls, d: dict) -> "LinearCode":
        F = Field.from_dict(d["field"])
        return cls(F, d["generator"], n=d.get("n"))
