"""Semi-tensor product primitives and logical-matrix utilities.

Boolean values are encoded as columns of the 2x2 identity: true is column 1,
false is column 2.  A k-tuple of Booleans packs into one column of the 2^k
identity, first variable most significant, so the all-true tuple gets index 1
and the all-false tuple index 2^k.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

import numpy as np

COLUMN_ORDERS = ("state-first", "input-first")


@dataclass(frozen=True)
class LogicalMatrix:
    """A 0/1 matrix with exactly one 1 per column, stored by column index.

    col_index[j] is the 1-based row of the single nonzero entry of column
    j + 1.  The representation makes products and column lookups cheap and
    keeps the decision pipeline in exact integer arithmetic.
    """

    rows: int
    col_index: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.rows < 1:
            raise ValueError(f"rows must be positive, got {self.rows}")
        object.__setattr__(self, "col_index", tuple(self.col_index))
        for j, r in enumerate(self.col_index):
            if not isinstance(r, int) or isinstance(r, bool):
                raise ValueError(f"column {j + 1} index must be an int, got {r!r}")
            if not 1 <= r <= self.rows:
                raise ValueError(
                    f"column {j + 1} points at row {r}, outside 1..{self.rows}"
                )

    @property
    def cols(self) -> int:
        return len(self.col_index)

    @classmethod
    def identity(cls, n: int) -> "LogicalMatrix":
        return cls(n, tuple(range(1, n + 1)))

    @classmethod
    def delta(cls, n: int, i: int) -> "LogicalMatrix":
        """The i-th column of the n x n identity, as an n x 1 matrix."""
        return cls(n, (i,))

    def to_dense(self) -> np.ndarray:
        out = np.zeros((self.rows, self.cols), dtype=np.int64)
        for j, r in enumerate(self.col_index):
            out[r - 1, j] = 1
        return out

    @classmethod
    def from_dense(cls, array) -> "LogicalMatrix":
        a = np.asarray(array)
        if a.ndim != 2:
            raise ValueError("need a 2-D array")
        if not np.isin(a, (0, 1)).all():
            raise ValueError("entries must be 0 or 1")
        if not (a.sum(axis=0) == 1).all():
            raise ValueError("every column must contain exactly one 1")
        return cls(a.shape[0], tuple(int(r) + 1 for r in a.argmax(axis=0)))


def stp(a, b) -> np.ndarray:
    """Semi-tensor product of two dense matrices.

    For A of shape (m, n) and B of shape (p, q), with t = lcm(n, p), this is
    (A kron I_{t/n}) @ (B kron I_{t/p}), of shape (m*t/n, q*t/p).  When
    n == p it reduces to the ordinary matrix product.
    """
    a = np.asarray(a)
    b = np.asarray(b)
    if a.ndim != 2 or b.ndim != 2:
        raise ValueError("stp operands must be 2-D")
    n, p = a.shape[1], b.shape[0]
    t = math.lcm(n, p)
    dtype = np.result_type(a, b)
    left = np.kron(a, np.eye(t // n, dtype=dtype))
    right = np.kron(b, np.eye(t // p, dtype=dtype))
    return left @ right


def logical_stp(a: LogicalMatrix, b: LogicalMatrix) -> LogicalMatrix:
    """Semi-tensor product of logical matrices, by index arithmetic alone.

    One inner dimension must divide the other; that covers every product the
    network pipeline forms (transition matrix times delta column, output map
    times state, stacking an input onto a state).  Agrees with stp() on the
    dense representations.
    """
    m, n = a.rows, a.cols
    p = b.rows
    if n % p == 0:
        # A (B kron I_k): result column (j-1)k + r reads column (b_j - 1)k + r of A
        k = n // p
        idx: list[int] = []
        for bj in b.col_index:
            base = (bj - 1) * k
            idx.extend(a.col_index[base:base + k])
        return LogicalMatrix(m, tuple(idx))
    if p % n == 0:
        # (A kron I_k) B: with b_j = (s-1)k + r, result column j is (a_s - 1)k + r
        k = p // n
        idx = []
        for bj in b.col_index:
            s, r = divmod(bj - 1, k)
            idx.append((a.col_index[s] - 1) * k + r + 1)
        return LogicalMatrix(m * k, tuple(idx))
    raise ValueError(
        f"inner dimensions {n} and {p} divide neither way; such a product"
        " of logical matrices need not be logical"
    )


def swap_matrix(m: int, n: int) -> LogicalMatrix:
    """The permutation W with W (u stp v) = v stp u for u in D_m, v in D_n.

    Column (i-1)n + j carries index (j-1)m + i.  swap_matrix(1, n) and
    swap_matrix(n, 1) are the n x n identity.
    """
    if m < 1 or n < 1:
        raise ValueError("swap matrix factors must be positive")
    idx = [0] * (m * n)
    for i in range(1, m + 1):
        for j in range(1, n + 1):
            idx[(i - 1) * n + (j - 1)] = (j - 1) * m + i
    return LogicalMatrix(m * n, tuple(idx))


def bool_tuple_index(values: Iterable[bool]) -> int:
    """1-based delta index of a Boolean tuple, first variable most significant."""
    idx = 1
    for v in values:
        idx = 2 * idx - 1 if v else 2 * idx
    return idx


def index_to_bool_tuple(index: int, width: int) -> tuple[bool, ...]:
    """Inverse of bool_tuple_index for a fixed tuple width."""
    if not 1 <= index <= 2 ** width:
        raise ValueError(f"index {index} outside 1..{2 ** width}")
    rem = index - 1
    return tuple(not (rem >> pos) & 1 for pos in range(width - 1, -1, -1))


def from_truth_table(
    n_inputs: int,
    n_outputs: int,
    table: Mapping[Sequence[bool], Sequence[bool]],
) -> LogicalMatrix:
    """Compile a total Boolean map into its structure matrix F.

    F satisfies F stp enc(v_1) stp ... stp enc(v_k) = enc(f(v_1, ..., v_k))
    under the delta encoding.  The table must assign every valuation exactly
    once; keys and values are tuples of Booleans (0/1 accepted).
    """
    if n_inputs < 0 or n_outputs < 1:
        raise ValueError("need n_inputs >= 0 and n_outputs >= 1")
    cols = [0] * (2 ** n_inputs)
    for key, value in table.items():
        if len(key) != n_inputs:
            raise ValueError(f"valuation {key!r} does not have {n_inputs} entries")
        if len(value) != n_outputs:
            raise ValueError(f"result {value!r} does not have {n_outputs} entries")
        for v in (*key, *value):
            if v not in (0, 1):
                raise ValueError(f"non-Boolean entry {v!r} in truth table")
        j = bool_tuple_index(bool(v) for v in key)
        if cols[j - 1] != 0:
            raise ValueError(f"valuation {tuple(key)!r} assigned twice")
        cols[j - 1] = bool_tuple_index(bool(v) for v in value)
    missing = [k + 1 for k, c in enumerate(cols) if c == 0]
    if missing:
        raise ValueError(
            f"truth table is not total: {len(missing)} of {len(cols)} valuations missing"
        )
    return LogicalMatrix(2 ** n_outputs, tuple(cols))


def reorder_columns(
    matrix: LogicalMatrix,
    n_states: int,
    n_inputs: int,
    from_order: str,
    to_order: str,
) -> LogicalMatrix:
    """Re-index transition-matrix columns between the two (state, input) layouts.

    state-first puts the column for state i under input j at position
    (i-1)*n_inputs + j; input-first puts it at (j-1)*n_states + i.  The two
    conventions carry the same data and mixing them up silently corrupts a
    network, so callers must always name both layouts.
    """
    for order in (from_order, to_order):
        if order not in COLUMN_ORDERS:
            raise ValueError(f"unknown column ordering {order!r}, expected one of {COLUMN_ORDERS}")
    if matrix.cols != n_states * n_inputs:
        raise ValueError(
            f"matrix has {matrix.cols} columns, expected {n_states} * {n_inputs}"
        )
    if from_order == to_order:
        return matrix
    idx = [0] * matrix.cols
    for i in range(1, n_states + 1):
        for j in range(1, n_inputs + 1):
            state_first = (i - 1) * n_inputs + j
            input_first = (j - 1) * n_states + i
            src, dst = (
                (state_first, input_first)
                if from_order == "state-first"
                else (input_first, state_first)
            )
            idx[dst - 1] = matrix.col_index[src - 1]
    return LogicalMatrix(matrix.rows, tuple(idx))
