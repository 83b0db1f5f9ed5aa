"""Finite semirings as operation tables: axioms, element classes, natural order.

A semiring here is a finite set {0..k-1} with two k-by-k tables: a commutative
associative addition and an associative multiplication distributing over the
addition from both sides. Elements are identified by index; labels are
cosmetic and used only for printing and serialization.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

import numpy as np

from .errors import PreconditionError, TableFormatError


def _as_table(rows, k, field):
    """Validate a k-by-k table of indices in 0..k-1; return tuple-of-tuples."""
    if isinstance(rows, np.ndarray):
        if rows.shape != (k, k) or not np.issubdtype(rows.dtype, np.integer):
            raise TableFormatError(f"{field}: expected a {k}x{k} integer table")
        if rows.size and (rows.min() < 0 or rows.max() >= k):
            bad = np.argwhere((rows < 0) | (rows >= k))[0]
            i, j = (int(v) for v in bad)
            raise TableFormatError(f"{field}[{i}][{j}] = {rows[i, j]} is not an element index in 0..{k - 1}")
        return tuple(map(tuple, rows.tolist()))
    if not isinstance(rows, (list, tuple)) or len(rows) != k:
        raise TableFormatError(f"{field}: expected {k} rows, got {len(rows) if isinstance(rows, (list, tuple)) else type(rows).__name__}")
    out = []
    for i, row in enumerate(rows):
        if not isinstance(row, (list, tuple)) or len(row) != k:
            raise TableFormatError(f"{field}: row {i} is ragged (expected {k} entries)")
        for j, v in enumerate(row):
            if not isinstance(v, (int, np.integer)) or isinstance(v, bool) or not (0 <= v < k):
                raise TableFormatError(f"{field}[{i}][{j}] = {v!r} is not an element index in 0..{k - 1}")
        out.append(tuple(int(v) for v in row))
    return tuple(out)


class FiniteSemiring:
    """Operation tables over an indexed universe. Immutable after construction.

    Construction validates table shape only; use verify_axioms to check the
    semiring axioms themselves.
    """

    __slots__ = ("name", "elements", "add", "mul", "_add_np", "_mul_np")

    def __init__(self, name, elements, add, mul):
        if not isinstance(name, str):
            raise TableFormatError("name must be a string")
        elements = tuple(elements)
        if len(elements) < 1:
            raise TableFormatError("elements must be non-empty")
        if not all(isinstance(e, str) for e in elements):
            raise TableFormatError("element labels must be strings")
        if len(set(elements)) != len(elements):
            raise TableFormatError("element labels must be pairwise distinct")
        k = len(elements)
        self.name = name
        self.elements = elements
        self.add = _as_table(add, k, "add")
        self.mul = _as_table(mul, k, "mul")
        self._add_np = None
        self._mul_np = None

    @property
    def size(self):
        return len(self.elements)

    @property
    def add_np(self):
        if self._add_np is None:
            a = np.array(self.add, dtype=np.int64)
            a.setflags(write=False)
            self._add_np = a
        return self._add_np

    @property
    def mul_np(self):
        if self._mul_np is None:
            m = np.array(self.mul, dtype=np.int64)
            m.setflags(write=False)
            self._mul_np = m
        return self._mul_np

    def index(self, label):
        try:
            return self.elements.index(label)
        except ValueError:
            raise TableFormatError(f"unknown element label {label!r} in semiring {self.name!r}") from None

    def __eq__(self, other):
        return (
            isinstance(other, FiniteSemiring)
            and self.elements == other.elements
            and self.add == other.add
            and self.mul == other.mul
        )

    def __hash__(self):
        return hash((self.elements, self.add, self.mul))

    def __repr__(self):
        return f"FiniteSemiring({self.name!r}, k={self.size})"

    def to_dict(self):
        return {
            "name": self.name,
            "elements": list(self.elements),
            "add": [list(r) for r in self.add],
            "mul": [list(r) for r in self.mul],
        }


def semiring_from_dict(d):
    if not isinstance(d, dict):
        raise TableFormatError("semiring document must be a JSON object")
    for key in ("name", "elements", "add", "mul"):
        if key not in d:
            raise TableFormatError(f"semiring document is missing key {key!r}")
    return FiniteSemiring(d["name"], d["elements"], d["add"], d["mul"])


def load_semiring(path):
    with open(path, encoding="utf-8") as f:
        try:
            doc = json.load(f)
        except json.JSONDecodeError as exc:
            raise TableFormatError(f"{path}: not valid JSON ({exc})") from None
    try:
        return semiring_from_dict(doc)
    except TableFormatError as exc:
        raise TableFormatError(f"{path}: {exc}") from None


def dump_semiring(S, path):
    with open(path, "w", encoding="utf-8") as f:
        json.dump(S.to_dict(), f, indent=2, sort_keys=True)
        f.write("\n")


@dataclass(frozen=True)
class AxiomFailure:
    axiom: str
    witness: tuple  # indices: (a, b) for commutativity, (a, b, c) otherwise

    def describe(self, S):
        labs = tuple(S.elements[i] for i in self.witness)
        return f"{self.axiom} fails at {labs}"


@dataclass(frozen=True)
class AxiomReport:
    ok: bool
    failures: tuple

    def to_dict(self, S=None):
        out = {"ok": self.ok, "failures": []}
        for f in self.failures:
            item = {"axiom": f.axiom, "witness": list(f.witness)}
            if S is not None:
                item["witness_labels"] = [S.elements[i] for i in f.witness]
            out["failures"].append(item)
        return out


def _first_assoc_failure(T):
    """First (a,b,c) with T[T[a,b],c] != T[a,T[b,c]], or None. Chunked over a."""
    k = T.shape[0]
    chunk = max(1, (1 << 22) // (k * k))
    for a0 in range(0, k, chunk):
        rows = T[a0 : a0 + chunk]
        left = T[rows, :]  # left[i,b,c] = T[T[a_i,b], c]
        right = rows[:, T]  # right[i,b,c] = T[a_i, T[b,c]]
        bad = left != right
        if bad.any():
            i, b, c = np.argwhere(bad)[0]
            return (a0 + int(i), int(b), int(c))
    return None


def _first_left_dist_failure(A, M):
    """First (a,b,c) with M[a, A[b,c]] != A[M[a,b], M[a,c]]."""
    k = A.shape[0]
    chunk = max(1, (1 << 22) // (k * k))
    for a0 in range(0, k, chunk):
        Ma = M[a0 : a0 + chunk]
        left = Ma[:, A]
        right = A[Ma[:, :, np.newaxis], Ma[:, np.newaxis, :]]
        bad = left != right
        if bad.any():
            i, b, c = np.argwhere(bad)[0]
            return (a0 + int(i), int(b), int(c))
    return None


def _first_right_dist_failure(A, M):
    """First (a,b,c) with M[A[b,c], a] != A[M[b,a], M[c,a]], ordered by (a,b,c)."""
    k = A.shape[0]
    chunk = max(1, (1 << 22) // (k * k))
    for a0 in range(0, k, chunk):
        Mc = M[:, a0 : a0 + chunk]  # (k, ch): Mc[x, i] = x * a_i
        left = Mc[A]  # (k, k, ch): M[A[b,c], a_i]
        right = A[Mc[:, np.newaxis, :], Mc[np.newaxis, :, :]]  # A[M[b,a], M[c,a]]
        bad = np.transpose(left != right, (2, 0, 1))  # order by (a, b, c)
        if bad.any():
            i, b, c = np.argwhere(bad)[0]
            return (a0 + int(i), int(b), int(c))
    return None


def verify_axioms(S):
    """Check the five semiring axiom families exhaustively.

    Returns an AxiomReport carrying, for each failing family, the first
    failing triple in lexicographic order. Table shape errors are raised at
    construction time and never reach this function.
    """
    A, M = S.add_np, S.mul_np
    failures = []

    w = _first_assoc_failure(A)
    if w is not None:
        failures.append(AxiomFailure("add_associative", w))
    bad = A != A.T
    if bad.any():
        a, b = np.argwhere(bad)[0]
        failures.append(AxiomFailure("add_commutative", (int(a), int(b))))
    w = _first_assoc_failure(M)
    if w is not None:
        failures.append(AxiomFailure("mul_associative", w))
    w = _first_left_dist_failure(A, M)
    if w is not None:
        failures.append(AxiomFailure("left_distributive", w))
    w = _first_right_dist_failure(A, M)
    if w is not None:
        failures.append(AxiomFailure("right_distributive", w))

    return AxiomReport(ok=not failures, failures=tuple(failures))


class NaturalOrder:
    """The partial order a <= b iff a + b = b of an additively idempotent semiring."""

    __slots__ = ("leq",)

    def __init__(self, leq):
        leq = np.asarray(leq, dtype=bool)
        leq.setflags(write=False)
        self.leq = leq

    @property
    def size(self):
        return self.leq.shape[0]

    def le(self, a, b):
        return bool(self.leq[a, b])

    def minimal_elements(self):
        # a is minimal iff nothing but a lies below it
        return tuple(int(a) for a in range(self.size) if self.leq[:, a].sum() == 1)

    def greatest_index(self):
        cols = self.leq.all(axis=0)
        idx = np.flatnonzero(cols)
        return int(idx[0]) if idx.size else None

    def is_total(self):
        return bool((self.leq | self.leq.T).all())

    def to_dict(self):
        return {"leq": self.leq.astype(int).tolist()}


def natural_order(S):
    """Order table of an additively idempotent semiring; refuses otherwise."""
    A = S.add_np
    k = S.size
    diag = A[np.arange(k), np.arange(k)]
    bad = np.flatnonzero(diag != np.arange(k))
    if bad.size:
        a = int(bad[0])
        raise PreconditionError(
            f"{S.name}: not additively idempotent ({S.elements[a]} + {S.elements[a]} = {S.elements[int(diag[a])]})"
        )
    return NaturalOrder(A == np.arange(k)[np.newaxis, :])


@dataclass(frozen=True)
class ElementProfile:
    """Exhaustively computed element classes, plus the unique witnesses if any.

    Order-based flags (is_minimal, is_greatest) are computed only for
    additively idempotent semirings and are all False otherwise.
    """

    is_zero: tuple
    is_unity: tuple
    is_bi_absorbing: tuple
    is_left_mult_absorbing: tuple
    is_right_mult_absorbing: tuple
    is_minimal: tuple
    is_greatest: tuple
    zero_index: int | None
    unity_index: int | None
    greatest_index: int | None

    def to_dict(self, S=None):
        def lab(i):
            return None if i is None else (S.elements[i] if S is not None else i)

        return {
            "zero": lab(self.zero_index),
            "unity": lab(self.unity_index),
            "greatest": lab(self.greatest_index),
            "bi_absorbing": lab(next((i for i, f in enumerate(self.is_bi_absorbing) if f), None)),
        }


def element_profile(S):
    A, M = S.add_np, S.mul_np
    k = S.size
    idx = np.arange(k)

    left_abs = (M == idx[:, np.newaxis]).all(axis=1)  # wa = w for all a
    right_abs = (M == idx[np.newaxis, :]).all(axis=0)  # aw = w for all a
    mult_abs = left_abs & right_abs
    unity = (M == idx[np.newaxis, :]).all(axis=1) & (M == idx[:, np.newaxis]).all(axis=0)
    add_neutral = (A == idx[:, np.newaxis]).all(axis=0)  # a + w = a for all a
    add_absorbing = (A == idx[np.newaxis, :]).all(axis=0)  # a + w = w for all a
    zero = mult_abs & add_neutral
    bi = mult_abs & add_absorbing

    ai = bool((A[idx, idx] == idx).all())
    if ai:
        leq = A == idx[np.newaxis, :]
        minimal = leq.sum(axis=0) == 1
        greatest = leq.all(axis=0)
    else:
        minimal = np.zeros(k, dtype=bool)
        greatest = np.zeros(k, dtype=bool)

    # uniqueness is forced by the axioms whenever the tables form a semiring
    assert zero.sum() <= 1 and unity.sum() <= 1 and bi.sum() <= 1 and greatest.sum() <= 1
    assert not (zero.any() and bi.any()) or k == 1

    def opt(mask):
        pos = np.flatnonzero(mask)
        return int(pos[0]) if pos.size else None

    return ElementProfile(
        is_zero=tuple(map(bool, zero)),
        is_unity=tuple(map(bool, unity)),
        is_bi_absorbing=tuple(map(bool, bi)),
        is_left_mult_absorbing=tuple(map(bool, left_abs)),
        is_right_mult_absorbing=tuple(map(bool, right_abs)),
        is_minimal=tuple(map(bool, minimal)),
        is_greatest=tuple(map(bool, greatest)),
        zero_index=opt(zero),
        unity_index=opt(unity),
        greatest_index=opt(greatest),
    )


@dataclass(frozen=True)
class ClassFlags:
    additively_idempotent: bool
    commutative: bool
    almost_integral: bool
    integral: bool
    downward_directed: bool
    ss_size: int

    def to_dict(self):
        return {
            "additively_idempotent": self.additively_idempotent,
            "commutative": self.commutative,
            "almost_integral": self.almost_integral,
            "integral": self.integral,
            "downward_directed": self.downward_directed,
            "ss_size": self.ss_size,
        }


def _downward_directed(leq):
    """Every pair of elements has a common lower bound. Bitset sweep."""
    k = leq.shape[0]
    lower = np.packbits(leq.T, axis=1)  # row a = bitset of {c : c <= a}
    chunk = max(1, (1 << 22) // max(1, k * lower.shape[1]))
    for a0 in range(0, k, chunk):
        common = lower[a0 : a0 + chunk, np.newaxis, :] & lower[np.newaxis, :, :]
        if not common.any(axis=2).all():
            return False
    return True


def classify(S):
    """Class flags by exhaustive table checks."""
    A, M = S.add_np, S.mul_np
    k = S.size
    idx = np.arange(k)

    ai = bool((A[idx, idx] == idx).all())
    commutative = bool((M == M.T).all())
    almost_integral = False
    if ai:
        col = idx[:, np.newaxis]
        below_left = (A[M, col] == col).all()  # ab + a = a
        below_right = (A[M.T, col] == col).all()  # ba + a = a
        almost_integral = bool(below_left and below_right)
    unity_exists = bool(((M == idx[np.newaxis, :]).all(axis=1) & (M == idx[:, np.newaxis]).all(axis=0)).any())
    integral = almost_integral and unity_exists
    directed = _downward_directed(A == idx[np.newaxis, :]) if ai else False
    ss_size = int(np.unique(M).size)

    return ClassFlags(
        additively_idempotent=ai,
        commutative=commutative,
        almost_integral=almost_integral,
        integral=integral,
        downward_directed=directed,
        ss_size=ss_size,
    )


def _refine_colors(add, mul, colors):
    """One-dimensional refinement of element colors by table context."""
    k = len(colors)
    while True:
        sig = []
        for a in range(k):
            ctx = sorted((colors[x], colors[add[a][x]], colors[mul[a][x]], colors[mul[x][a]]) for x in range(k))
            sig.append((colors[a], tuple(ctx)))
        ranks = {s: i for i, s in enumerate(sorted(set(sig)))}
        new = tuple(ranks[s] for s in sig)
        if new == colors:
            return new
        colors = new


def is_isomorphic(S, T):
    """Search for a bijection carrying both tables of S onto those of T.

    Returns (True, mapping) with mapping[i] = image index, or (False, None).
    Backtracking over color classes; intended for the small universes used in
    enumeration dedup.
    """
    k = S.size
    if T.size != k:
        return False, None
    a1, m1, a2, m2 = S.add, S.mul, T.add, T.mul

    def initial(add, mul):
        return tuple((int(add[a][a] == a), int(mul[a][a] == a)) for a in range(k))

    ranks = {s: i for i, s in enumerate(sorted(set(initial(a1, m1)) | set(initial(a2, m2))))}
    c1 = _refine_colors(a1, m1, tuple(ranks[s] for s in initial(a1, m1)))
    c2 = _refine_colors(a2, m2, tuple(ranks[s] for s in initial(a2, m2)))
    if sorted(c1) != sorted(c2):
        return False, None

    image = [-1] * k
    used = [False] * k

    def consistent(a, b):
        # check all table constraints among already-assigned elements
        for x in range(k):
            fx = image[x] if x != a else b
            if fx < 0:
                continue
            for (t1, t2) in ((a1, a2), (m1, m2)):
                y = t1[a][x]
                fy = image[y] if y != a else b
                if fy >= 0 and t2[b][fx] != fy:
                    return False
                y = t1[x][a]
                fy = image[y] if y != a else b
                if fy >= 0 and t2[fx][b] != fy:
                    return False
        return True

    def backtrack(a):
        if a == k:
            return True
        for b in range(k):
            if used[b] or c2[b] != c1[a]:
                continue
            if not consistent(a, b):
                continue
            image[a] = b
            used[b] = True
            if backtrack(a + 1):
                return True
            image[a] = -1
            used[b] = False
        return False

    if backtrack(0):
        return True, tuple(image)
    return False, None
