"""Square matrix semirings over a finite base, and constant-pair extraction.

Matrices are n-by-n tuples of base element indices. The materialized mode
realizes the whole matrix semiring as a FiniteSemiring whose element order is
the mixed-radix value of the row-major entry vector; the lazy mode keeps only
the base tables and computes matrix operations on demand.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

import numpy as np

from .core import FiniteSemiring
from .errors import InputError, PreconditionError, SizeLimitError

DEFAULT_THRESHOLD = 4096


def _as_matrix(S, n, mat):
    rows = tuple(tuple(int(v) for v in row) for row in mat)
    if len(rows) != n or any(len(r) != n for r in rows):
        raise InputError(f"expected an {n}x{n} matrix")
    k = S.size
    for row in rows:
        for v in row:
            if not (0 <= v < k):
                raise InputError(f"matrix entry {v} out of range for |S| = {k}")
    return rows


def mat_add(S, A, B):
    return tuple(tuple(S.add[a][b] for a, b in zip(ra, rb)) for ra, rb in zip(A, B))


def mat_mul(S, A, B):
    n = len(A)
    out = []
    for i in range(n):
        row = []
        for j in range(n):
            acc = S.mul[A[i][0]][B[0][j]]
            for t in range(1, n):
                acc = S.add[acc][S.mul[A[i][t]][B[t][j]]]
            row.append(acc)
        out.append(tuple(row))
    return tuple(out)


def const_matrix(S, n, a):
    if not (0 <= a < S.size):
        raise InputError(f"element index {a} out of range")
    return tuple((a,) * n for _ in range(n))


def const_embed(S, n, a):
    """The all-a matrix. For additively idempotent S this embeds S into M_n(S)."""
    return const_matrix(S, n, a)


def matrix_label(S, mat):
    return json.dumps([[S.elements[v] for v in row] for row in mat], separators=(",", ":"))


def parse_matrix_literal(S, text_or_rows):
    rows = json.loads(text_or_rows) if isinstance(text_or_rows, str) else text_or_rows
    if not isinstance(rows, list):
        raise InputError("matrix literal must be an array of rows")
    try:
        return tuple(tuple(S.index(lab) for lab in row) for row in rows)
    except TypeError:
        raise InputError("matrix literal must be an array of arrays of element labels") from None


class MatrixSemiring:
    """Handle for M_n(S): materialized as a FiniteSemiring, or lazy."""

    __slots__ = ("base", "n", "mode", "semiring", "entries")

    def __init__(self, base, n, mode, semiring=None, entries=None):
        self.base = base
        self.n = n
        self.mode = mode
        self.semiring = semiring
        self.entries = entries

    @property
    def size(self):
        return self.base.size ** (self.n * self.n)

    def encode(self, mat):
        mat = _as_matrix(self.base, self.n, mat)
        k = self.base.size
        code = 0
        for row in mat:
            for v in row:
                code = code * k + v
        return code

    def decode(self, idx):
        k = self.base.size
        n = self.n
        vals = []
        for _ in range(n * n):
            vals.append(idx % k)
            idx //= k
        vals.reverse()
        return tuple(tuple(vals[i * n : (i + 1) * n]) for i in range(n))

    def const_index(self, a):
        return self.encode(const_matrix(self.base, self.n, a))

    def add_mat(self, A, B):
        return mat_add(self.base, A, B)

    def mul_mat(self, A, B):
        return mat_mul(self.base, A, B)

    def __repr__(self):
        return f"MatrixSemiring(M_{self.n}({self.base.name}), mode={self.mode})"


def _materialize_tables(S, n):
    kS = S.size
    kT = kS ** (n * n)
    slots = n * n
    addS = S.add_np
    mulS = S.mul_np
    idx = np.arange(kT)
    entries = np.empty((kT, slots), np.int64)
    for i in range(slots):
        entries[:, i] = (idx // kS ** (slots - 1 - i)) % kS

    acc = np.zeros((kT, kT), np.int64)
    for i in range(slots):
        acc = acc * kS + addS[entries[:, np.newaxis, i], entries[np.newaxis, :, i]]
    addT = acc

    acc = np.zeros((kT, kT), np.int64)
    for i in range(n):
        for j in range(n):
            s = mulS[entries[:, np.newaxis, i * n], entries[np.newaxis, :, j]]
            for t in range(1, n):
                s = addS[s, mulS[entries[:, np.newaxis, i * n + t], entries[np.newaxis, :, t * n + j]]]
            acc = acc * kS + s
    mulT = acc
    return addT, mulT, entries


def matrix_semiring(S, n, mode="materialized", threshold=DEFAULT_THRESHOLD):
    """Construct M_n(S).

    Materialization is refused when |S|^(n*n) exceeds the threshold; lazy
    handles have no size limit but support only element-level operations.
    """
    if n < 1:
        raise InputError(f"matrix dimension must be >= 1, got {n}")
    if mode not in ("materialized", "lazy"):
        raise InputError(f"unknown mode {mode!r}")
    size = S.size ** (n * n)
    if mode == "lazy":
        return MatrixSemiring(S, n, "lazy")
    if size > threshold:
        raise SizeLimitError(
            f"M_{n}({S.name}) has {size} elements, over the materialization threshold {threshold}"
        )
    addT, mulT, entries = _materialize_tables(S, n)
    labels = []
    for vals in entries.tolist():
        rows = [[S.elements[vals[i * n + j]] for j in range(n)] for i in range(n)]
        labels.append(json.dumps(rows, separators=(",", ":")))
    T = FiniteSemiring(f"M{n}({S.name})", labels, addT, mulT)
    entries.setflags(write=False)
    return MatrixSemiring(S, n, "materialized", semiring=T, entries=entries)


@dataclass(frozen=True)
class ChainStep:
    kind: str  # "add" | "mul_left" | "mul_right"
    matrix: tuple

    def apply(self, S, A, B):
        if self.kind == "add":
            return mat_add(S, A, self.matrix), mat_add(S, B, self.matrix)
        if self.kind == "mul_left":
            return mat_mul(S, self.matrix, A), mat_mul(S, self.matrix, B)
        if self.kind == "mul_right":
            return mat_mul(S, A, self.matrix), mat_mul(S, B, self.matrix)
        raise ValueError(self.kind)


@dataclass(frozen=True)
class WitnessChain:
    """Translation steps carrying a matrix pair to a constant pair.

    Every intermediate pair stays inside any congruence containing the
    original pair, because each step is a one-sided translation.
    """

    steps: tuple

    def replay(self, S, A, B):
        for step in self.steps:
            A, B = step.apply(S, A, B)
        return A, B


def _is_constant(mat):
    vals = {v for row in mat for v in row}
    return len(vals) == 1


def _padded_separation_holds(S):
    from .checkers import check_padded_separation

    return check_padded_separation(S)


def extract_constant_pair(S, n, A, B):
    """Reduce a distinct matrix pair to a distinct constant pair by translations.

    Pipeline: (1) add a matrix that swamps every entry outside one chosen
    differing cell, (2) left-multiply to make the differing column constant,
    (3) right-multiply to make both matrices constant. The required elements
    are found by exhaustive lexicographic search. Returns (a, b, chain) with
    the all-a / all-b matrices related to (A, B) in any congruence containing
    them.
    """
    if n < 2:
        raise PreconditionError("constant-pair extraction needs n >= 2")
    A = _as_matrix(S, n, A)
    B = _as_matrix(S, n, B)
    if A == B:
        raise PreconditionError("matrices must differ")

    verdict = _padded_separation_holds(S)
    if not verdict.holds:
        raise PreconditionError(
            f"{S.name} lacks the padded separation property needed for extraction: {verdict.witness}"
        )

    add, mul = S.add, S.mul
    k = S.size
    steps = []

    if _is_constant(A) and _is_constant(B):
        return A[0][0], B[0][0], WitnessChain(steps=())

    # step 1: isolate the first differing cell (i0, j0)
    i0, j0 = next((i, j) for i in range(n) for j in range(n) if A[i][j] != B[i][j])
    others = [A[i][j] for i in range(n) for j in range(n) if (i, j) != (i0, j0)]
    others += [B[i][j] for i in range(n) for j in range(n) if (i, j) != (i0, j0)]
    eprime = next(x for x in range(k) if all(add[v][x] == x for v in others))
    a0, b0 = A[i0][j0], B[i0][j0]
    g = next(x for x in range(k) if add[a0][x] != add[b0][x])
    E1 = tuple(
        tuple(g if (i, j) == (i0, j0) else eprime for j in range(n)) for i in range(n)
    )
    step = ChainStep("add", E1)
    A, B = step.apply(S, A, B)
    steps.append(step)

    # step 2: make column j0 constant via left multiplication
    a1, b1 = A[i0][j0], B[i0][j0]
    e1 = next(A[i][j] for i in range(n) for j in range(n) if (i, j) != (i0, j0))
    cf = next(
        ((c, f) for c in range(k) for f in range(k)
         if add[mul[c][a1]][mul[f][e1]] != add[mul[c][b1]][mul[f][e1]]),
        None,
    )
    if cf is None:
        raise PreconditionError(
            f"no (c, f) separates the triple (a={S.elements[a1]}, b={S.elements[b1]}, e={S.elements[e1]})"
        )
    c, f = cf
    E2 = tuple(tuple(c if j == i0 else f for j in range(n)) for _ in range(n))
    step = ChainStep("mul_left", E2)
    A, B = step.apply(S, A, B)
    steps.append(step)

    # step 3: flood both matrices constant via right multiplication
    a2, b2 = A[0][j0], B[0][j0]
    e2 = next(A[i][j] for i in range(n) for j in range(n) if j != j0)
    dg = next(
        ((d, gg) for d in range(k) for gg in range(k)
         if add[mul[a2][d]][mul[e2][gg]] != add[mul[b2][d]][mul[e2][gg]]),
        None,
    )
    if dg is None:
        raise PreconditionError(
            f"no (d, g) separates the triple (a={S.elements[a2]}, b={S.elements[b2]}, e={S.elements[e2]})"
        )
    d, gg = dg
    E3 = tuple(tuple(d for _ in range(n)) if i == j0 else tuple(gg for _ in range(n)) for i in range(n))
    step = ChainStep("mul_right", E3)
    A, B = step.apply(S, A, B)
    steps.append(step)

    assert _is_constant(A) and _is_constant(B) and A != B
    return A[0][0], B[0][0], WitnessChain(steps=tuple(steps))
