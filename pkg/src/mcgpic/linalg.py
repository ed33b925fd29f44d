"""
Exact integer linear algebra.

Everything here works over Python ints, so nothing overflows no matter how
large the intermediate coefficients get. The central routine is
:func:`smith_normal_form`; :func:`cokernel` turns a relation matrix into a
finitely generated abelian group in invariant-factor form.

Convention: a relation matrix has one column per generator and one row per
relation, so ``cokernel(M) = Z^cols / rowspace(M)``.
"""

from __future__ import annotations

import itertools
import math
import re
from dataclasses import dataclass
from typing import Iterable, Sequence


@dataclass(frozen=True)
class IntMatrix:
    """Dense row-major integer matrix."""

    rows: int
    cols: int
    entries: tuple[int, ...]

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ValueError("matrix dimensions must be non-negative")
        if len(self.entries) != self.rows * self.cols:
            raise ValueError(
                f"expected {self.rows * self.cols} entries, got {len(self.entries)}"
            )

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], cols: int | None = None) -> IntMatrix:
        rows = [list(r) for r in rows]
        if cols is None:
            if not rows:
                raise ValueError("column count is ambiguous for a matrix with no rows")
            cols = len(rows[0])
        for r in rows:
            if len(r) != cols:
                raise ValueError("ragged rows")
        return cls(len(rows), cols, tuple(int(x) for r in rows for x in r))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> IntMatrix:
        return cls(rows, cols, (0,) * (rows * cols))

    @classmethod
    def identity(cls, n: int) -> IntMatrix:
        return cls(n, n, tuple(int(i == j) for i in range(n) for j in range(n)))

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.entries[i * self.cols + j]

    def to_rows(self) -> list[list[int]]:
        c = self.cols
        return [list(self.entries[i * c:(i + 1) * c]) for i in range(self.rows)]

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def transpose(self) -> IntMatrix:
        return IntMatrix(
            self.cols,
            self.rows,
            tuple(self[i, j] for j in range(self.cols) for i in range(self.rows)),
        )

    def __matmul__(self, other: IntMatrix) -> IntMatrix:
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        a = self.to_rows()
        bt = other.transpose().to_rows()
        return IntMatrix(
            self.rows,
            other.cols,
            tuple(sum(x * y for x, y in zip(row, col)) for row in a for col in bt),
        )

    def diagonal(self) -> list[int]:
        return [self[i, i] for i in range(min(self.rows, self.cols))]

    def is_diagonal(self) -> bool:
        return all(
            self[i, j] == 0
            for i in range(self.rows)
            for j in range(self.cols)
            if i != j
        )

    def det(self) -> int:
        """Determinant by fraction-free (Bareiss) elimination."""
        if self.rows != self.cols:
            raise ValueError("determinant of a non-square matrix")
        n = self.rows
        if n == 0:
            return 1
        a = self.to_rows()
        sign = 1
        prev = 1
        for k in range(n - 1):
            if a[k][k] == 0:
                for i in range(k + 1, n):
                    if a[i][k] != 0:
                        a[k], a[i] = a[i], a[k]
                        sign = -sign
                        break
                else:
                    return 0
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            prev = a[k][k]
        return sign * a[n - 1][n - 1]


@dataclass(frozen=True)
class SnfResult:
    """``U @ M @ V == S`` with U, V unimodular and S diagonal."""

    S: IntMatrix
    U: IntMatrix
    V: IntMatrix

    @property
    def invariants(self) -> list[int]:
        return self.S.diagonal()


def _min_abs_nonzero(a, rows: Iterable[int], cols: Iterable[int]):
    best = None
    cols = list(cols)
    for i in rows:
        row = a[i]
        for j in cols:
            x = row[j]
            if x and (best is None or abs(x) < best[0]):
                best = (abs(x), i, j)
                if best[0] == 1:
                    return best
    return best


def smith_normal_form(M: IntMatrix) -> SnfResult:
    """Smith normal form with transforms.

    Pivots are chosen with minimal absolute value, which keeps coefficient
    growth small on the matrices that come up here. Diagonal entries come
    out non-negative with ``S[i,i] | S[i+1,i+1]``; any zeros sit at the end.
    """
    m, n = M.rows, M.cols
    a = M.to_rows()
    u = IntMatrix.identity(m).to_rows()
    # V is accumulated transposed so column operations become row operations.
    vt = IntMatrix.identity(n).to_rows()

    def swap_rows(i, k):
        a[i], a[k] = a[k], a[i]
        u[i], u[k] = u[k], u[i]

    def swap_cols(j, k):
        for row in a:
            row[j], row[k] = row[k], row[j]
        vt[j], vt[k] = vt[k], vt[j]

    def add_row(dst, src, q):
        # row_dst += q * row_src
        rd, rs = a[dst], a[src]
        for c in range(n):
            if rs[c]:
                rd[c] += q * rs[c]
        ud, us = u[dst], u[src]
        for c in range(m):
            if us[c]:
                ud[c] += q * us[c]

    def add_col(dst, src, q):
        for row in a:
            if row[src]:
                row[dst] += q * row[src]
        vd, vs = vt[dst], vt[src]
        for c in range(n):
            if vs[c]:
                vd[c] += q * vs[c]

    for t in range(min(m, n)):
        best = _min_abs_nonzero(a, range(t, m), range(t, n))
        if best is None:
            break
        _, i, j = best
        if i != t:
            swap_rows(t, i)
        if j != t:
            swap_cols(t, j)

        while True:
            p = a[t][t]
            for i in range(t + 1, m):
                if a[i][t]:
                    add_row(i, t, -(a[i][t] // p))
            for j in range(t + 1, n):
                if a[t][j]:
                    add_col(j, t, -(a[t][j] // p))

            # Remainders left in the pivot row/column are smaller than |p|.
            best = _min_abs_nonzero(a, range(t + 1, m), [t])
            best_c = _min_abs_nonzero([a[t]], [0], range(t + 1, n))
            if best is not None or best_c is not None:
                if best_c is None or (best is not None and best[0] <= best_c[0]):
                    swap_rows(t, best[1])
                else:
                    swap_cols(t, best_c[2])
                continue

            # Pivot row and column are clear; enforce divisibility.
            bad = next(
                (i for i in range(t + 1, m)
                 for j in range(t + 1, n) if a[i][j] % p),
                None,
            )
            if bad is None:
                break
            add_row(t, bad, 1)

        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            u[t] = [-x for x in u[t]]

    return SnfResult(
        S=IntMatrix.from_rows(a, cols=n),
        U=IntMatrix.from_rows(u, cols=m),
        V=IntMatrix.from_rows(vt, cols=n).transpose(),
    )


_GROUP_TOKEN = re.compile(r"^Z(?:\^(\d+))?$|^Z/(\d+)$")


@dataclass(frozen=True)
class FgAbelianGroup:
    """``Z^free_rank x Z/d_1 x ... x Z/d_t`` with ``d_i | d_{i+1}`` and ``d_i >= 2``.

    Instances are canonical, so ``==`` is isomorphism. Build arbitrary sums
    of cyclic groups with :meth:`from_orders`.
    """

    free_rank: int = 0
    torsion: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "torsion", tuple(int(d) for d in self.torsion))
        if self.free_rank < 0:
            raise ValueError("free rank must be non-negative")
        for d in self.torsion:
            if d < 2:
                raise ValueError(f"invariant factor {d} < 2")
        for d, e in itertools.pairwise(self.torsion):
            if e % d:
                raise ValueError(f"invariant factors {d}, {e} break the divisibility chain")

    @classmethod
    def from_orders(cls, orders: Iterable[int], free_rank: int = 0) -> FgAbelianGroup:
        """Normalize a direct sum of cyclic groups ``Z/o`` (``o = 0`` means ``Z``)."""
        orders = [abs(int(o)) for o in orders]
        free_rank += sum(1 for o in orders if o == 0)
        return cls(free_rank, tuple(_invariant_factors([o for o in orders if o > 1])))

    @classmethod
    def cyclic(cls, order: int) -> FgAbelianGroup:
        return cls.from_orders([order])

    @classmethod
    def parse(cls, text: str) -> FgAbelianGroup:
        """Inverse of ``str``; also accepts non-normalized factor lists."""
        text = text.strip()
        if text == "0":
            return cls()
        free, orders = 0, []
        for tok in text.split(" x "):
            mt = _GROUP_TOKEN.match(tok.strip())
            if not mt:
                raise ValueError(f"cannot parse group factor {tok!r}")
            if mt.group(2) is not None:
                orders.append(int(mt.group(2)))
            else:
                free += int(mt.group(1) or 1)
        return cls.from_orders(orders, free_rank=free)

    @classmethod
    def from_dict(cls, data: dict) -> FgAbelianGroup:
        return cls.from_orders(data.get("torsion", []), free_rank=int(data.get("free_rank", 0)))

    def to_dict(self) -> dict:
        return {"free_rank": self.free_rank, "torsion": list(self.torsion)}

    def __str__(self) -> str:
        parts = []
        if self.free_rank == 1:
            parts.append("Z")
        elif self.free_rank > 1:
            parts.append(f"Z^{self.free_rank}")
        parts.extend(f"Z/{d}" for d in self.torsion)
        return " x ".join(parts) if parts else "0"

    def __add__(self, other: FgAbelianGroup) -> FgAbelianGroup:
        """Direct sum."""
        if not isinstance(other, FgAbelianGroup):
            return NotImplemented
        return FgAbelianGroup.from_orders(
            self.torsion + other.torsion, free_rank=self.free_rank + other.free_rank
        )

    @property
    def is_finite(self) -> bool:
        return self.free_rank == 0

    @property
    def is_trivial(self) -> bool:
        return self.free_rank == 0 and not self.torsion

    @property
    def is_cyclic(self) -> bool:
        return self.free_rank + len(self.torsion) <= 1

    @property
    def order(self) -> int | None:
        """Group order, or None when infinite."""
        return math.prod(self.torsion) if self.is_finite else None


def direct_sum(*groups: FgAbelianGroup) -> FgAbelianGroup:
    total = FgAbelianGroup()
    for G in groups:
        total = total + G
    return total


def _invariant_factors(orders: list[int]) -> list[int]:
    # Collect prime powers per prime, then rebuild the divisibility chain from the top.
    by_prime: dict[int, list[int]] = {}
    for o in orders:
        for p, e in _factorize(o).items():
            by_prime.setdefault(p, []).append(p ** e)
    if not by_prime:
        return []
    length = max(len(v) for v in by_prime.values())
    chain = [1] * length
    for powers in by_prime.values():
        powers.sort()
        for k, q in enumerate(powers):
            chain[length - len(powers) + k] *= q
    return chain


def _factorize(n: int) -> dict[int, int]:
    out: dict[int, int] = {}
    p = 2
    while p * p <= n:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        p += 1 if p == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def cokernel(M: IntMatrix) -> FgAbelianGroup:
    """``Z^cols / rowspace(M)`` in invariant-factor form."""
    diag = smith_normal_form(M).invariants
    nonzero = [d for d in diag if d]
    return FgAbelianGroup(M.cols - len(nonzero), tuple(d for d in nonzero if d > 1))


def reduce_mod(G: FgAbelianGroup, m: int) -> FgAbelianGroup:
    """``G (x) Z/m``."""
    if m < 2:
        raise ValueError(f"modulus must be at least 2, got {m}")
    return FgAbelianGroup.from_orders([m] * G.free_rank + [math.gcd(d, m) for d in G.torsion])


def wedge3_basis(dim: int) -> list[tuple[int, int, int]]:
    """Lexicographically ordered index triples ``i < j < k`` spanning the third exterior power."""
    return list(itertools.combinations(range(dim), 3))


def theta_wedge_matrix(g: int) -> IntMatrix:
    """Relations ``theta ^ v`` for ``v`` in a symplectic basis of ``Z^{2g}``.

    Basis order is ``a_1..a_g, b_1..b_g`` and ``theta = sum a_i ^ b_i``.
    Row ``j`` is the image of the ``j``-th basis vector expressed in the
    lexicographic basis of triples, so the matrix is ``2g x C(2g, 3)`` and
    its cokernel is the quotient of the third exterior power by ``theta ^ V``.
    """
    if g < 2:
        raise ValueError(f"genus must be at least 2, got {g}")
    dim = 2 * g
    basis = wedge3_basis(dim)
    index = {t: k for k, t in enumerate(basis)}
    rows = []
    for v in range(dim):
        row = [0] * len(basis)
        for i in range(g):
            triple = [i, g + i, v]
            if len(set(triple)) < 3:
                continue
            row[index[tuple(sorted(triple))]] += _perm_sign(triple)
        rows.append(row)
    return IntMatrix.from_rows(rows, cols=len(basis))


def _perm_sign(seq: list[int]) -> int:
    inversions = sum(1 for x, y in itertools.combinations(seq, 2) if x > y)
    return -1 if inversions % 2 else 1
