"""Congruences as certified partitions; simplicity and subdirect irreducibility.

Everything here reduces to principal congruences: the least congruence
containing a seeded pair, generated by closing under elementary translations
to a union-find fixpoint. A semiring is congruence-simple when every seeded
pair generates the full relation, and subdirectly irreducible (SI) when the
intersection of all principal congruences, its monolith, is not the identity.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

import numpy as np

from . import _kernels
from .errors import DegenerateInputError, InputError
from .matrixring import matrix_semiring


def _canon(labels):
    """Rewrite arbitrary block labels as the least member of each block."""
    labels = np.asarray(labels, dtype=np.int64)
    first = {}
    out = np.empty_like(labels)
    for i, lab in enumerate(labels.tolist()):
        if lab not in first:
            first[lab] = i
        out[i] = first[lab]
    out.setflags(write=False)
    return out


class Partition:
    """An equivalence relation on {0..k-1}, stored as min-member block labels."""

    __slots__ = ("labels", "_nblocks")

    def __init__(self, labels, _canonical=False):
        if _canonical:
            self.labels = labels
        else:
            self.labels = _canon(labels)
        self._nblocks = None

    @classmethod
    def identity(cls, k):
        lab = np.arange(k)
        lab.setflags(write=False)
        return cls(lab, _canonical=True)

    @classmethod
    def full(cls, k):
        lab = np.zeros(k, dtype=np.int64)
        lab.setflags(write=False)
        return cls(lab, _canonical=True)

    @classmethod
    def from_pairs(cls, k, pairs):
        parent = list(range(k))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for a, b in pairs:
            ra, rb = find(a), find(b)
            if ra != rb:
                if ra < rb:
                    parent[rb] = ra
                else:
                    parent[ra] = rb
        return cls([find(i) for i in range(k)])

    @classmethod
    def from_blocks(cls, k, blocks):
        lab = [-1] * k
        for block in blocks:
            root = min(block)
            for x in block:
                if lab[x] != -1:
                    raise InputError(f"element {x} appears in two blocks")
                lab[x] = root
        if any(v == -1 for v in lab):
            missing = lab.index(-1)
            raise InputError(f"element {missing} is not covered by any block")
        return cls(lab)

    @property
    def size(self):
        return int(self.labels.shape[0])

    @property
    def num_blocks(self):
        if self._nblocks is None:
            self._nblocks = int(np.unique(self.labels).size)
        return self._nblocks

    @property
    def is_identity(self):
        return self.num_blocks == self.size

    @property
    def is_full(self):
        return self.num_blocks == 1

    def same(self, a, b):
        return bool(self.labels[a] == self.labels[b])

    def blocks(self):
        out = {}
        for i, r in enumerate(self.labels.tolist()):
            out.setdefault(r, []).append(i)
        return [out[r] for r in sorted(out)]

    def nontrivial_blocks(self):
        return [b for b in self.blocks() if len(b) > 1]

    def meet(self, other):
        if self.size != other.size:
            raise InputError("partition sizes differ")
        combo = self.labels * (self.size + 1) + other.labels
        return Partition(combo)

    def refines(self, other):
        """Every block of self lies inside a block of other."""
        return bool((other.labels == other.labels[self.labels]).all())

    def __eq__(self, other):
        return isinstance(other, Partition) and np.array_equal(self.labels, other.labels)

    def __hash__(self):
        return hash(self.labels.tobytes())

    def __repr__(self):
        return f"Partition(k={self.size}, blocks={self.num_blocks})"

    def to_blocks(self, element_labels):
        return [[element_labels[i] for i in block] for block in self.blocks()]

    def to_json(self, element_labels):
        return json.dumps(self.to_blocks(element_labels), sort_keys=True)


@dataclass(frozen=True)
class CongruenceViolation:
    pair: tuple
    translation: tuple  # (kind, c) with kind in {"add", "mul_left", "mul_right"}

    def describe(self, S):
        a, b = self.pair
        kind, c = self.translation
        return (
            f"pair ({S.elements[a]}, {S.elements[b]}) broken by {kind} with {S.elements[c]}"
        )


def is_congruence(S, p):
    """Exhaustive compatibility check of a partition against both tables.

    Returns (True, None) or (False, first CongruenceViolation) scanning
    translations in the order add, mul_left, mul_right and elements
    lexicographically.
    """
    if p.size != S.size:
        raise InputError(f"partition over {p.size} elements does not match |S| = {S.size}")
    A, M = S.add_np, S.mul_np
    L = p.labels
    maps = np.vstack((A.T, M, M.T))  # rows: x -> x+c, x -> cx, x -> xc
    LT = L[maps]
    bad = LT != LT[:, L]
    if not bad.any():
        return True, None
    r, x = (int(v) for v in np.argwhere(bad)[0])
    k = S.size
    kind = ("add", "mul_left", "mul_right")[r // k]
    return False, CongruenceViolation(pair=(x, int(L[x])), translation=(kind, r % k))


def principal_congruence(S, a, b):
    """Least congruence of S containing (a, b)."""
    k = S.size
    if not (0 <= a < k and 0 <= b < k):
        raise InputError(f"element index out of range: ({a}, {b})")
    labels = _kernels.closure_labels(S.add_np, S.mul_np, a, b)
    labels.setflags(write=False)
    return Partition(labels, _canonical=True)


def is_congruence_simple(S):
    """True iff every pair of distinct elements generates the full congruence."""
    if S.size < 2:
        raise DegenerateInputError(f"{S.name}: |S| = 1 has a single congruence; simplicity is undefined")
    return int(_kernels.all_pairs_full(S.add_np, S.mul_np)) == -1


@dataclass(frozen=True)
class Monolith:
    partition: Partition
    generating_pair: tuple


def _descend_to_minimal(S):
    """A minimal non-identity principal congruence and a pair generating it.

    Starts from the first pair and repeatedly replaces the current congruence
    by a strictly smaller one generated by a pair inside one of its blocks.
    """
    add, mul = S.add_np, S.mul_np
    seed = (0, 1)
    labels = _kernels.closure_labels(add, mul, 0, 1)
    nblocks = int(np.unique(labels).size)
    improved = True
    while improved:
        improved = False
        members = {}
        for i, r in enumerate(labels.tolist()):
            members.setdefault(r, []).append(i)
        for r in sorted(members):
            block = members[r]
            for ii in range(len(block)):
                for jj in range(ii + 1, len(block)):
                    x, y = block[ii], block[jj]
                    if (x, y) == seed:
                        continue
                    cand = _kernels.closure_labels(add, mul, x, y)
                    n2 = int(np.unique(cand).size)
                    if n2 > nblocks:
                        labels, seed, nblocks = cand, (x, y), n2
                        improved = True
                        break
                if improved:
                    break
            if improved:
                break
    labels.setflags(write=False)
    return Partition(labels, _canonical=True), seed


def monolith(S):
    """Least non-identity congruence, or None when S is not SI.

    Semantically this is the intersection of the principal congruences of all
    distinct pairs. It is computed as: descend to a minimal principal
    congruence, then confirm that its seed pair lies in every principal
    congruence. Any failure certifies that two distinct minimal principal
    congruences exist, which forces the intersection down to the identity.
    """
    if S.size < 2:
        raise DegenerateInputError(f"{S.name}: |S| = 1 has no non-identity congruence")
    part, seed = _descend_to_minimal(S)
    res = int(_kernels.verify_target_all_pairs(S.add_np, S.mul_np, seed[0], seed[1]))
    if res != -1:
        return None
    return Monolith(partition=part, generating_pair=seed)


def is_subdirectly_irreducible(S):
    return monolith(S) is not None


def lambda_rho(S):
    """The kernel congruences of right and left multiplication collapse.

    lambda relates a, b when ax = bx for every x; rho relates a, b when
    xa = xb for every x. Both are congruences; certification is kept as a
    guard against table corruption.
    """
    M = S.mul_np
    lam = Partition(_canon_rows(M))
    rho = Partition(_canon_rows(M.T))
    for p, tag in ((lam, "lambda"), (rho, "rho")):
        ok, viol = is_congruence(S, p)
        if not ok:
            raise AssertionError(f"{tag} failed certification: {viol.describe(S)}")
    return lam, rho


def _canon_rows(M):
    """Label each index by the first row identical to its row."""
    k = M.shape[0]
    seen = {}
    out = np.empty(k, dtype=np.int64)
    for i in range(k):
        key = M[i].tobytes()
        if key not in seen:
            seen[key] = i
        out[i] = seen[key]
    return out


def tilde_congruence(S, n, rho, threshold=None):
    """Entrywise lift of a congruence on S to the materialized matrix semiring.

    Two matrices are related iff corresponding entries are rho-related. The
    lift of the identity is the identity; of the full relation, the full one.
    """
    ok, viol = is_congruence(S, rho)
    if not ok:
        raise InputError(f"rho is not a congruence on {S.name}: {viol.describe(S)}")
    kwargs = {} if threshold is None else {"threshold": threshold}
    mat = matrix_semiring(S, n, **kwargs)
    T = mat.semiring
    entries = mat.entries  # (|T|, n*n) base indices
    lifted = Partition(_canon(_unique_rows(rho.labels[entries])))
    ok, viol = is_congruence(T, lifted)
    assert ok, f"entrywise lift failed certification: {viol.describe(T)}"
    return lifted


def _unique_rows(rows):
    _, inverse = np.unique(rows, axis=0, return_inverse=True)
    return inverse


def hat_congruence(S, n, rho, matrix=None):
    """Restriction of a matrix-semiring congruence to S along constant matrices.

    (x, y) lands in the result iff the all-x and all-y matrices are
    rho-related. Requires S additively idempotent so that the constant
    embedding is a semiring homomorphism.
    """
    from .core import natural_order

    natural_order(S)  # raises unless S is additively idempotent
    mat = matrix if matrix is not None else matrix_semiring(S, n)
    T = mat.semiring
    ok, viol = is_congruence(T, rho)
    if not ok:
        raise InputError(f"rho is not a congruence on {T.name}: {viol.describe(T)}")
    const = [mat.const_index(a) for a in range(S.size)]
    restricted = Partition(rho.labels[np.array(const)])
    ok, viol = is_congruence(S, restricted)
    assert ok, f"constant restriction failed certification: {viol.describe(S)}"
    return restricted
