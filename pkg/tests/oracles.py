"""Independent brute-force oracles used to validate the fast paths.

Everything here enumerates set partitions directly and checks the congruence
property by definition, with no union-find, no worklist, and no numpy, so a
bug in the kernels cannot hide in the oracle.
"""

from itertools import product


def set_partitions(k):
    """All partitions of {0..k-1} as label tuples (restricted growth strings)."""
    out = []

    def grow(prefix, top):
        if len(prefix) == k:
            out.append(tuple(prefix))
            return
        for v in range(top + 2):
            grow(prefix + [v], max(top, v))

    grow([0], 0)
    return out


def is_congruence_naive(S, labels):
    k = S.size
    for a in range(k):
        for b in range(k):
            if labels[a] != labels[b]:
                continue
            for c in range(k):
                if labels[S.add[a][c]] != labels[S.add[b][c]]:
                    return False
                if labels[S.mul[c][a]] != labels[S.mul[c][b]]:
                    return False
                if labels[S.mul[a][c]] != labels[S.mul[b][c]]:
                    return False
    return True


def all_congruences(S):
    return [lab for lab in set_partitions(S.size) if is_congruence_naive(S, lab)]


def meet_labels(l1, l2):
    combo = {}
    out = []
    for pair in zip(l1, l2):
        out.append(combo.setdefault(pair, len(combo)))
    return tuple(out)


def principal_naive(S, a, b):
    """Least congruence containing (a, b): intersect all congruences that do."""
    result = None
    for lab in all_congruences(S):
        if lab[a] == lab[b]:
            result = lab if result is None else meet_labels(result, lab)
    return result


def monolith_naive(S):
    """Intersection of all non-identity congruences; None when it is the identity."""
    k = S.size
    result = None
    for lab in all_congruences(S):
        if len(set(lab)) == k:
            continue
        result = lab if result is None else meet_labels(result, lab)
    if result is None or len(set(result)) == k:
        return None
    return result


def is_simple_naive(S):
    return len(all_congruences(S)) == 2


def axioms_ok_naive(S):
    k = S.size
    add, mul = S.add, S.mul
    for a, b, c in product(range(k), repeat=3):
        if add[add[a][b]][c] != add[a][add[b][c]]:
            return False
        if mul[mul[a][b]][c] != mul[a][mul[b][c]]:
            return False
        if mul[a][add[b][c]] != add[mul[a][b]][mul[a][c]]:
            return False
        if mul[add[b][c]][a] != add[mul[b][a]][mul[c][a]]:
            return False
    for a, b in product(range(k), repeat=2):
        if add[a][b] != add[b][a]:
            return False
    return True


def same_partition(labels, partition):
    """Compare an oracle label tuple against a Partition."""
    k = len(labels)
    for a in range(k):
        for b in range(k):
            if (labels[a] == labels[b]) != partition.same(a, b):
                return False
    return True
