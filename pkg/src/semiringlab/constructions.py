"""Generators for concrete semiring families and the transformations between them.

Covers two-element and Boolean lattice semirings, Lukasiewicz chains, the
join-endomorphism semiring of a finite lattice, corner subsemirings, and the
unity / least-element extensions used to build subdirectly irreducible
examples.
"""

from __future__ import annotations

import itertools
import json

from .core import FiniteSemiring, classify, element_profile, natural_order, verify_axioms
from .errors import InputError, PreconditionError, SizeLimitError


class FiniteLattice:
    """A finite lattice given by its order; join/meet tables are derived."""

    __slots__ = ("name", "elements", "leq", "join", "meet", "bottom", "top")

    def __init__(self, name, elements, leq, join, meet, bottom, top):
        self.name = name
        self.elements = tuple(elements)
        self.leq = leq
        self.join = join
        self.meet = meet
        self.bottom = bottom
        self.top = top

    @property
    def size(self):
        return len(self.elements)

    def le(self, a, b):
        return bool(self.leq[a][b])

    def __repr__(self):
        return f"FiniteLattice({self.name!r}, k={self.size})"

    def to_dict(self):
        return {"elements": list(self.elements), "leq": [[int(v) for v in row] for row in self.leq]}


def lattice_from_order(labels, leq, name="L"):
    """Build a lattice from a partial order, rejecting non-lattices.

    The order must be reflexive, antisymmetric and transitive; every pair must
    have a unique least upper bound and greatest lower bound. Violations are
    reported with the offending elements.
    """
    labels = tuple(labels)
    k = len(labels)
    if k < 1:
        raise InputError("lattice needs at least one element")
    if len(set(labels)) != k:
        raise InputError("lattice labels must be pairwise distinct")
    rows = tuple(tuple(bool(v) for v in row) for row in leq)
    if len(rows) != k or any(len(r) != k for r in rows):
        raise InputError(f"leq must be a {k}x{k} boolean matrix")

    for a in range(k):
        if not rows[a][a]:
            raise InputError(f"order not reflexive at {labels[a]}")
    for a in range(k):
        for b in range(k):
            if a != b and rows[a][b] and rows[b][a]:
                raise InputError(f"order not antisymmetric at ({labels[a]}, {labels[b]})")
    for a in range(k):
        for b in range(k):
            if rows[a][b]:
                for c in range(k):
                    if rows[b][c] and not rows[a][c]:
                        raise InputError(
                            f"order not transitive at ({labels[a]}, {labels[b]}, {labels[c]})"
                        )

    def bound(a, b, upper):
        if upper:
            cands = [c for c in range(k) if rows[a][c] and rows[b][c]]
            best = [c for c in cands if all(rows[c][d] for d in cands)]
        else:
            cands = [c for c in range(k) if rows[c][a] and rows[c][b]]
            best = [c for c in cands if all(rows[d][c] for d in cands)]
        if len(best) != 1:
            which = "least upper" if upper else "greatest lower"
            raise InputError(f"pair ({labels[a]}, {labels[b]}) has no unique {which} bound")
        return best[0]

    join = tuple(tuple(bound(a, b, True) for b in range(k)) for a in range(k))
    meet = tuple(tuple(bound(a, b, False) for b in range(k)) for a in range(k))
    bottom = next(a for a in range(k) if all(rows[a][b] for b in range(k)))
    top = next(a for a in range(k) if all(rows[b][a] for b in range(k)))
    return FiniteLattice(name, labels, rows, join, meet, bottom, top)


def lattice_from_dict(d, name="L"):
    if not isinstance(d, dict) or "elements" not in d or "leq" not in d:
        raise InputError('lattice document must be an object with "elements" and "leq"')
    return lattice_from_order(d["elements"], d["leq"], name=name)


def load_lattice(path):
    with open(path, encoding="utf-8") as f:
        try:
            doc = json.load(f)
        except json.JSONDecodeError as exc:
            raise InputError(f"{path}: not valid JSON ({exc})") from None
    return lattice_from_dict(doc, name=str(path))


def lattice_semiring(L):
    """The semiring (L, join, meet) of a finite lattice."""
    return FiniteSemiring(L.name, L.elements, L.join, L.meet)


def chain_lattice(labels):
    k = len(labels)
    leq = [[a <= b for b in range(k)] for a in range(k)]
    return lattice_from_order(labels, leq, name=f"C{k}")


def gen_l2():
    """The two-element lattice as a semiring: add = join, mul = meet."""
    return FiniteSemiring("L2", ("0", "1"), ((0, 1), (1, 1)), ((0, 0), (0, 1)))


def gen_boolean(atoms):
    """Powerset of an atom set under union and intersection."""
    if not (1 <= atoms <= 4):
        raise InputError(f"atoms must be in 1..4, got {atoms}")
    k = 1 << atoms
    names = "abcd"

    def lab(m):
        return "".join(names[i] for i in range(atoms) if m >> i & 1) or "0"

    add = [[a | b for b in range(k)] for a in range(k)]
    mul = [[a & b for b in range(k)] for a in range(k)]
    return FiniteSemiring(f"B{atoms}", tuple(lab(m) for m in range(k)), add, mul)


def gen_lukasiewicz(u):
    """The chain {0..u} with add = max and mul(a,b) = max(a+b-u, 0).

    The element u is the unity and 1 the least non-zero element; the label
    conventions are "0", "e" for 1, "u" for the top.
    """
    if u < 1:
        raise InputError(f"unity parameter must be >= 1, got {u}")

    def lab(v):
        if v == 0:
            return "0"
        if v == u:
            return "u"
        if v == 1:
            return "e"
        return str(v)

    k = u + 1
    add = [[max(a, b) for b in range(k)] for a in range(k)]
    mul = [[max(a + b - u, 0) for b in range(k)] for a in range(k)]
    return FiniteSemiring(f"Luk{k}", tuple(lab(v) for v in range(k)), add, mul)


def _end0_maps(L):
    kL = L.size
    if kL > 6:
        raise SizeLimitError(f"End0 enumeration limited to lattices with at most 6 elements, got {kL}")
    join = L.join
    bottom = L.bottom
    maps = []
    for f in itertools.product(range(kL), repeat=kL):
        if f[bottom] != bottom:
            continue
        if all(f[join[x][y]] == join[f[x]][f[y]] for x in range(kL) for y in range(kL)):
            maps.append(f)
    return maps


def gen_end0(L):
    """Join-endomorphisms of L fixing the bottom, under pointwise join and composition.

    Enumerates all |L|^|L| self-maps and filters; only sensible for small
    lattices.
    """
    kL = L.size
    join = L.join
    maps = _end0_maps(L)
    index = {f: i for i, f in enumerate(maps)}
    add = [[index[tuple(join[f[x]][g[x]] for x in range(kL))] for g in maps] for f in maps]
    mul = [[index[tuple(f[g[x]] for x in range(kL))] for g in maps] for f in maps]
    labels = tuple("(" + ",".join(L.elements[v] for v in f) + ")" for f in maps)
    return FiniteSemiring(f"End0({L.name})", labels, add, mul)


def gen_xl(L):
    """Indices (within gen_end0(L) element order) of maps with image of size <= 2."""
    return tuple(i for i, f in enumerate(_end0_maps(L)) if len(set(f)) <= 2)


def _fresh_label(base, taken):
    lab = base
    while lab in taken:
        lab += "'"
    return lab


def adjoin_unity(S):
    """Adjoin a unity that is also the greatest element to an almost integral semiring."""
    flags = classify(S)
    if not flags.almost_integral:
        raise PreconditionError(f"{S.name} is not almost integral")
    k = S.size
    u = k
    add = [list(row) + [u] for row in S.add] + [[u] * (k + 1)]
    mul = [list(row) + [a] for a, row in enumerate(S.mul)] + [list(range(k)) + [u]]
    labels = S.elements + (_fresh_label("1", set(S.elements)),)
    out = FiniteSemiring(f"{S.name}+1", labels, add, mul)
    assert verify_axioms(out).ok
    assert classify(out).integral
    assert element_profile(out).greatest_index == u
    return out


def corner(S, u):
    """The corner subsemiring {uau : uau <= u} of an idempotent u; always integral."""
    order = natural_order(S)
    if S.mul[u][u] != u:
        raise PreconditionError(f"{S.elements[u]} is not multiplicatively idempotent")
    members = sorted(
        {
            S.mul[S.mul[u][a]][u]
            for a in range(S.size)
            if order.le(S.mul[S.mul[u][a]][u], u)
        }
    )
    pos = {x: i for i, x in enumerate(members)}
    add = [[pos[S.add[x][y]] for y in members] for x in members]
    mul = [[pos[S.mul[x][y]] for y in members] for x in members]
    out = FiniteSemiring(
        f"{S.name}_corner_{S.elements[u]}",
        tuple(S.elements[x] for x in members),
        add,
        mul,
    )
    prof = element_profile(out)
    assert prof.unity_index == pos[u] and prof.greatest_index == pos[u]
    assert classify(out).integral
    return out


def adjoin_least(S):
    """Adjoin a new least non-zero element e with e*x = x*e = 0.

    Requires: S almost integral with a zero; every pair a not<= b separated by
    an annihilating two-sided product (allowing missing multipliers); and
    every minimal non-zero element multiplicatively idempotent. The result is
    certified subdirectly irreducible.
    """
    from .checkers import si_separation_condition
    from .congruence import is_subdirectly_irreducible

    flags = classify(S)
    if not flags.almost_integral:
        raise PreconditionError(f"{S.name} is not almost integral")
    prof = element_profile(S)
    zero = prof.zero_index
    if zero is None:
        raise PreconditionError(f"{S.name} has no zero element")
    cond = si_separation_condition(S)
    if not cond.holds:
        raise PreconditionError(
            f"{S.name} fails the separation condition needed for the least-element extension: {cond.witness}"
        )
    order = natural_order(S)
    for a in range(S.size):
        if a != zero and all(not order.le(b, a) for b in range(S.size) if b not in (a, zero)):
            if S.mul[a][a] != a:
                raise PreconditionError(
                    f"minimal non-zero element {S.elements[a]} is not multiplicatively idempotent"
                )

    k = S.size
    e = k
    add = [list(row) + [0] for row in S.add] + [[0] * (k + 1)]
    for a in range(k):
        add[a][e] = a if a != zero else e
        add[e][a] = a if a != zero else e
    add[e][e] = e
    mul = [list(row) + [zero] for row in S.mul] + [[zero] * (k + 1)]
    labels = S.elements + (_fresh_label("e", set(S.elements)),)
    out = FiniteSemiring(f"{S.name}+e", labels, add, mul)
    assert verify_axioms(out).ok
    assert is_subdirectly_irreducible(out)
    return out
