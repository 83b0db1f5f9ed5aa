"""Executable finite checks for the characterization conditions, plus cross-validation.

Each check encodes one quantified condition over a finite semiring and
returns a ConditionVerdict whose witness re-verifies against the tables.
crosscheck() runs the brute-force congruence machinery next to every
applicable condition and insists that each known equivalence holds; a
disagreement raises CrossCheckError carrying the counterexample, since the
equivalences themselves are settled facts and only an implementation bug can
break them.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction

from .congruence import is_congruence_simple, is_subdirectly_irreducible, monolith
from .constructions import adjoin_unity, gen_l2
from .core import FiniteSemiring, classify, element_profile, is_isomorphic, natural_order, verify_axioms
from .errors import CrossCheckError, PreconditionError, SizeLimitError
from .matrixring import DEFAULT_THRESHOLD, matrix_semiring


@dataclass(frozen=True)
class ConditionVerdict:
    condition_id: str
    holds: bool
    witness: dict | None = None

    def to_dict(self):
        return {"condition_id": self.condition_id, "holds": self.holds, "witness": self.witness}


def _require_additively_idempotent(S):
    for a in range(S.size):
        if S.add[a][a] != a:
            raise PreconditionError(f"{S.name} is not additively idempotent (at {S.elements[a]})")


def _require_almost_integral(S):
    if not classify(S).almost_integral:
        raise PreconditionError(f"{S.name} is not almost integral")


def check_two_sided_separation(S, witnesses=False):
    """Every distinct pair is separated by some left and some right multiplier."""
    k = S.size
    mul = S.mul
    found = []
    for a in range(k):
        for b in range(k):
            if a == b:
                continue
            c = next((c for c in range(k) if mul[c][a] != mul[c][b]), None)
            if c is None:
                return ConditionVerdict(
                    "two_sided_separation",
                    False,
                    {"a": S.elements[a], "b": S.elements[b], "missing": "left_multiplier"},
                )
            d = next((d for d in range(k) if mul[a][d] != mul[b][d]), None)
            if d is None:
                return ConditionVerdict(
                    "two_sided_separation",
                    False,
                    {"a": S.elements[a], "b": S.elements[b], "missing": "right_multiplier"},
                )
            if witnesses:
                found.append(
                    {"a": S.elements[a], "b": S.elements[b], "c": S.elements[c], "d": S.elements[d]}
                )
    return ConditionVerdict("two_sided_separation", True, {"examples": found} if witnesses else None)


def check_padded_separation(S, witnesses=False):
    """Separation by one-sided multipliers that survives padding with any e.

    For all a != b and every e there must be (c, f) with ca+fe != cb+fe and
    (d, g) with ad+eg != bd+eg.
    """
    _require_additively_idempotent(S)
    k = S.size
    add, mul = S.add, S.mul
    found = []
    for a in range(k):
        for b in range(k):
            if a == b:
                continue
            for e in range(k):
                cf = next(
                    (
                        (c, f)
                        for c in range(k)
                        for f in range(k)
                        if add[mul[c][a]][mul[f][e]] != add[mul[c][b]][mul[f][e]]
                    ),
                    None,
                )
                if cf is None:
                    return ConditionVerdict(
                        "padded_separation",
                        False,
                        {"a": S.elements[a], "b": S.elements[b], "e": S.elements[e], "missing": "left"},
                    )
                dg = next(
                    (
                        (d, g)
                        for d in range(k)
                        for g in range(k)
                        if add[mul[a][d]][mul[e][g]] != add[mul[b][d]][mul[e][g]]
                    ),
                    None,
                )
                if dg is None:
                    return ConditionVerdict(
                        "padded_separation",
                        False,
                        {"a": S.elements[a], "b": S.elements[b], "e": S.elements[e], "missing": "right"},
                    )
                if witnesses:
                    found.append(
                        {
                            "a": S.elements[a],
                            "b": S.elements[b],
                            "e": S.elements[e],
                            "c": S.elements[cf[0]],
                            "f": S.elements[cf[1]],
                            "d": S.elements[dg[0]],
                            "g": S.elements[dg[1]],
                        }
                    )
    return ConditionVerdict("padded_separation", True, {"examples": found} if witnesses else None)


def check_downward_directed(S):
    """Every two elements have a common lower bound in the natural order."""
    order = natural_order(S)
    k = S.size
    leq = order.leq
    for a in range(k):
        for b in range(k):
            if not (leq[:, a] & leq[:, b]).any():
                return ConditionVerdict(
                    "downward_directed", False, {"a": S.elements[a], "b": S.elements[b]}
                )
    return ConditionVerdict("downward_directed", True, None)


def _least_nonzero(S, zero):
    order = natural_order(S)
    for e in range(S.size):
        if e == zero:
            continue
        if all(order.le(e, x) for x in range(S.size) if x != zero):
            return e
    return None


def si_separation_condition(S):
    """For all a not<= b, some product cad with optional multipliers kills b but not a.

    The multipliers may be missing on either side: the disjunction accepts
    a != 0 = b outright, one-sided ca != 0 = cb or ad != 0 = bd, and the
    two-sided cad != 0 = cbd.
    """
    _require_additively_idempotent(S)
    zero = element_profile(S).zero_index
    if zero is None:
        return ConditionVerdict("si_separation", False, {"reason": "no_zero_element"})
    k = S.size
    mul = S.mul
    order = natural_order(S)
    for a in range(k):
        for b in range(k):
            if order.le(a, b):
                continue
            if a != zero and b == zero:
                continue
            if any(mul[c][a] != zero and mul[c][b] == zero for c in range(k)):
                continue
            if any(mul[a][d] != zero and mul[b][d] == zero for d in range(k)):
                continue
            if any(
                mul[mul[c][a]][d] != zero and mul[mul[c][b]][d] == zero
                for c in range(k)
                for d in range(k)
            ):
                continue
            return ConditionVerdict(
                "si_separation",
                False,
                {"a": S.elements[a], "b": S.elements[b], "reason": "no_annihilating_separation"},
            )
    return ConditionVerdict("si_separation", True, None)


def check_si_criterion(S):
    """Zero, a least non-zero element, and annihilating separation with optional multipliers.

    For almost integral semirings this is equivalent to subdirect
    irreducibility; crosscheck() asserts that equivalence.
    """
    _require_almost_integral(S)
    zero = element_profile(S).zero_index
    if zero is None:
        return ConditionVerdict("si_criterion", False, {"reason": "no_zero_element"})
    e = _least_nonzero(S, zero)
    if e is None:
        return ConditionVerdict("si_criterion", False, {"reason": "no_least_nonzero_element"})
    sep = si_separation_condition(S)
    if not sep.holds:
        return ConditionVerdict("si_criterion", False, sep.witness)
    return ConditionVerdict("si_criterion", True, {"zero": S.elements[zero], "e": S.elements[e]})


def check_matrix_si_criterion(S):
    """As check_si_criterion but with both multipliers required inside S."""
    _require_almost_integral(S)
    zero = element_profile(S).zero_index
    if zero is None:
        return ConditionVerdict("matrix_si_criterion", False, {"reason": "no_zero_element"})
    e = _least_nonzero(S, zero)
    if e is None:
        return ConditionVerdict("matrix_si_criterion", False, {"reason": "no_least_nonzero_element"})
    k = S.size
    mul = S.mul
    order = natural_order(S)
    for a in range(k):
        for b in range(k):
            if order.le(a, b):
                continue
            if not any(
                mul[mul[c][a]][d] != zero and mul[mul[c][b]][d] == zero
                for c in range(k)
                for d in range(k)
            ):
                return ConditionVerdict(
                    "matrix_si_criterion",
                    False,
                    {"a": S.elements[a], "b": S.elements[b], "reason": "no_two_sided_annihilating_separation"},
                )
    return ConditionVerdict(
        "matrix_si_criterion", True, {"zero": S.elements[zero], "e": S.elements[e]}
    )


def check_two_element(S):
    """Classify a two-element additively idempotent semiring against the lattice case.

    Holds exactly when the multiplication is the meet of the two-element
    chain; otherwise names the violated necessary condition for matrix
    simplicity.
    """
    if S.size != 2:
        raise PreconditionError(f"{S.name} has {S.size} elements, expected 2")
    _require_additively_idempotent(S)
    a, b = (0, 1) if S.add[0][1] == 1 else (1, 0)  # a < b
    mul = S.mul
    if mul[a][a] == a and mul[b][b] == b and mul[a][b] == a and mul[b][a] == a:
        return ConditionVerdict("two_element_lattice", True, None)
    prof = element_profile(S)
    if any(prof.is_bi_absorbing):
        w = prof.is_bi_absorbing.index(True)
        return ConditionVerdict(
            "two_element_lattice", False, {"violated": "bi_absorbing_element", "element": S.elements[w]}
        )
    if len({mul[x][y] for x in range(2) for y in range(2)}) == 1:
        return ConditionVerdict("two_element_lattice", False, {"violated": "products_collapse"})
    if all(mul[a][x] == mul[b][x] for x in range(2)):
        return ConditionVerdict("two_element_lattice", False, {"violated": "no_right_separator"})
    if all(mul[x][a] == mul[x][b] for x in range(2)):
        return ConditionVerdict("two_element_lattice", False, {"violated": "no_left_separator"})
    return ConditionVerdict("two_element_lattice", False, {"violated": "not_the_lattice_multiplication"})


def check_greatest_not_absorbing(S):
    """The greatest element must be absorbing on neither side."""
    _require_additively_idempotent(S)
    prof = element_profile(S)
    w = prof.greatest_index
    if w is None:
        raise PreconditionError(f"{S.name} has no greatest element")
    sides = []
    if prof.is_left_mult_absorbing[w]:
        sides.append("left")
    if prof.is_right_mult_absorbing[w]:
        sides.append("right")
    if sides:
        return ConditionVerdict(
            "greatest_not_absorbing", False, {"greatest": S.elements[w], "absorbing_sides": sides}
        )
    return ConditionVerdict("greatest_not_absorbing", True, {"greatest": S.elements[w]})


def check_si_consequences(S):
    """Structural consequences of subdirect irreducibility for almost integral S.

    Asserts e*e = 0 for the least non-zero element e; for commutative S also
    that ae != 0 forces a greatest, and (with a unity) that the unity is
    join-irreducible.
    """
    _require_almost_integral(S)
    if S.size < 3:
        raise PreconditionError(f"{S.name} has fewer than 3 elements")
    if not is_subdirectly_irreducible(S):
        raise PreconditionError(f"{S.name} is not subdirectly irreducible")
    prof = element_profile(S)
    zero = prof.zero_index
    assert zero is not None
    e = _least_nonzero(S, zero)
    assert e is not None
    flags = classify(S)
    k = S.size
    mul, add = S.mul, S.add

    checks = {"e_squared_zero": mul[e][e] == zero}
    if flags.commutative:
        greatest = prof.greatest_index
        checks["ae_nonzero_implies_greatest"] = all(
            mul[a][e] == zero or a == greatest for a in range(k)
        )
        if prof.unity_index is not None:
            one = prof.unity_index
            checks["unity_join_irreducible"] = all(
                x == one or y == one
                for x in range(k)
                for y in range(k)
                if add[x][y] == one
            )
    holds = all(checks.values())
    return ConditionVerdict(
        "si_consequences",
        holds,
        {"e": S.elements[e], "zero": S.elements[zero], "checks": checks},
    )


def _require_lukasiewicz(S):
    k = S.size
    u = k - 1
    for a in range(k):
        for b in range(k):
            if S.add[a][b] != max(a, b) or S.mul[a][b] != max(a + b - u, 0):
                raise PreconditionError(f"{S.name} is not a Lukasiewicz chain in index order")
    return u


def mv_separator_witness(S, a, b):
    """The canonical annihilating separator (c, d) = (u - b, u) on a Lukasiewicz chain.

    Requires a > b; returns multipliers with c*a*d != 0 = c*b*d, re-verified
    against the tables.
    """
    u = _require_lukasiewicz(S)
    if not (0 <= a <= u and 0 <= b <= u):
        raise PreconditionError(f"indices out of range: ({a}, {b})")
    if a <= b:
        raise PreconditionError(f"requires a > b, got a = {a}, b = {b}")
    c, d = u - b, u
    assert S.mul[S.mul[c][a]][d] != 0
    assert S.mul[S.mul[c][b]][d] == 0
    return c, d


def tropical_witness(a, b, e, fprime):
    """Max-plus separation pair (c, f): with c = a and f a large negative multiple
    of fprime, max(c+a, f+e) differs from max(c+b, f+e). Exact rationals."""
    a, b, e, fprime = Fraction(a), Fraction(b), Fraction(e), Fraction(fprime)
    if a == b:
        raise PreconditionError("requires a != b")
    if fprime >= 0:
        raise PreconditionError(f"fprime must be negative, got {fprime}")
    c = a
    bound = min(c + a, c + b) - e
    n = max(1, math.ceil(bound / fprime))
    f = n * fprime
    assert f + e <= min(c + a, c + b)
    assert max(c + a, f + e) != max(c + b, f + e)
    return c, f


def pair_product_separation(S):
    """For all a != b there are c, d with cad != cbd."""
    k = S.size
    mul = S.mul
    for a in range(k):
        for b in range(a + 1, k):
            if not any(
                mul[mul[c][a]][d] != mul[mul[c][b]][d] for c in range(k) for d in range(k)
            ):
                return False, (a, b)
    return True, None


@dataclass
class CrossCheckReport:
    semiring_name: str
    n: int
    brute_force: dict
    conditions: list
    agreements: list
    notes: dict = field(default_factory=dict)

    def to_dict(self):
        return {
            "semiring": self.semiring_name,
            "n": self.n,
            "brute_force": self.brute_force,
            "conditions": [c.to_dict() for c in self.conditions],
            "agreements": self.agreements,
            "notes": self.notes,
        }

    @property
    def ok(self):
        return all(a["agree"] is not False for a in self.agreements)


def _brute(S):
    """Brute-force verdicts; degenerate one-element semirings are neither simple nor SI."""
    if S.size < 2:
        return {"simple": False, "si": False, "monolith": None}
    mono = monolith(S)
    return {
        "simple": is_congruence_simple(S),
        "si": mono is not None,
        "monolith": mono,
    }


def crosscheck(S, n, threshold=DEFAULT_THRESHOLD):
    """Brute-force verdicts for S and M_n(S) against every applicable condition.

    Returns a CrossCheckReport; raises CrossCheckError on any disagreement
    with a serialized counterexample.
    """
    if n < 1:
        raise PreconditionError(f"n must be >= 1, got {n}")
    axioms = verify_axioms(S)
    if not axioms.ok:
        raise PreconditionError(f"{S.name} is not a semiring: {axioms.failures[0].describe(S)}")

    flags = classify(S)
    prof = element_profile(S)
    k = S.size
    ai = flags.additively_idempotent

    base = _brute(S)
    mat = matrix_semiring(S, n, threshold=threshold)
    T = mat.semiring
    matv = _brute(T)

    conditions = []
    two_sided = check_two_sided_separation(S)
    conditions.append(two_sided)
    padded = directed = si_crit = msi_crit = two_el = omega = None
    if ai:
        padded = check_padded_separation(S)
        conditions.append(padded)
        directed = check_downward_directed(S)
        conditions.append(directed)
        if k == 2:
            two_el = check_two_element(S)
            conditions.append(two_el)
        if prof.greatest_index is not None:
            omega = check_greatest_not_absorbing(S)
            conditions.append(omega)
    if flags.almost_integral:
        si_crit = check_si_criterion(S)
        conditions.append(si_crit)
        msi_crit = check_matrix_si_criterion(S)
        conditions.append(msi_crit)

    agreements = []
    notes = {}

    def record(theorem, applicable, agree=None, details=None):
        agreements.append(
            {
                "theorem": theorem,
                "applicable": bool(applicable),
                "agree": (None if not applicable else bool(agree)),
                "details": details,
            }
        )

    matrix_level = n >= 2 and k >= 2

    # simplicity of M_n over a downward-directed additively idempotent base
    applicable = matrix_level and ai and directed.holds
    record(
        "matrix_simplicity_directed",
        applicable,
        applicable and (matv["simple"] == (base["simple"] and padded.holds)),
        {"matrix_simple": matv["simple"], "base_simple": base["simple"], "padded": padded.holds if padded else None}
        if applicable
        else None,
    )
    if matrix_level and ai and not directed.holds:
        notes["nondirected_matrix_simplicity"] = {
            "matrix_simple": matv["simple"],
            "base_simple_and_padded": base["simple"] and padded.holds,
        }

    # SI of M_n over a base with zero and unity
    applicable = matrix_level and ai and prof.zero_index is not None and prof.unity_index is not None
    record(
        "matrix_si_zero_unity",
        applicable,
        applicable and (matv["si"] == base["si"]),
        {"matrix_si": matv["si"], "base_si": base["si"]} if applicable else None,
    )

    # almost integral: matrix simplicity happens only over the two-element lattice
    if flags.almost_integral and matrix_level:
        is_l2 = is_isomorphic(S, gen_l2())[0]
        agree = (
            matv["simple"] == is_l2
            and matv["simple"] == (base["simple"] and flags.ss_size >= 2)
            and (not base["simple"] or k == 2)
        )
        record(
            "matrix_simplicity_almost_integral",
            True,
            agree,
            {"matrix_simple": matv["simple"], "is_l2": is_l2, "base_simple": base["simple"], "ss_size": flags.ss_size},
        )
    else:
        record("matrix_simplicity_almost_integral", False)

    # almost integral: three-way SI characterization for M_n
    if flags.almost_integral and matrix_level:
        pps, _ = pair_product_separation(S)
        cond_ii = base["si"] and pps
        cond_iii = msi_crit.holds
        agree = matv["si"] == cond_ii == cond_iii
        record(
            "matrix_si_almost_integral",
            True,
            agree,
            {"matrix_si": matv["si"], "base_si_and_product_separation": cond_ii, "criterion": cond_iii},
        )
    else:
        record("matrix_si_almost_integral", False)

    # almost integral: SI of the base itself
    if flags.almost_integral and k >= 2:
        agree = base["si"] == si_crit.holds
        details = {"base_si": base["si"], "criterion": si_crit.holds}
        if agree and base["si"]:
            zero = prof.zero_index
            e = _least_nonzero(S, zero)
            blocks = base["monolith"].partition.nontrivial_blocks()
            form_ok = blocks == [sorted((zero, e))]
            agree = form_ok
            details["monolith_form"] = form_ok
        record("si_criterion_almost_integral", True, agree, details)
    else:
        record("si_criterion_almost_integral", False)

    # almost integral without unity: adjoining one preserves SI both ways
    if flags.almost_integral and prof.unity_index is None and k >= 2:
        extended = adjoin_unity(S)
        agree = base["si"] == is_subdirectly_irreducible(extended)
        record("adjoin_unity_si", True, agree, {"base_si": base["si"]})
    else:
        record("adjoin_unity_si", False)

    # necessary conditions when M_n is simple
    applicable = matrix_level
    no_bi = not any(prof.is_bi_absorbing)
    record(
        "matrix_simple_necessary",
        applicable,
        applicable and ((not matv["simple"]) or (base["simple"] and no_bi and flags.ss_size >= 2)),
        {"matrix_simple": matv["simple"]} if applicable else None,
    )
    record(
        "matrix_si_necessary",
        applicable,
        applicable and ((not matv["si"]) or (base["si"] and no_bi and flags.ss_size >= 2)),
        {"matrix_si": matv["si"]} if applicable else None,
    )
    record(
        "two_sided_separation_necessary",
        applicable,
        applicable and ((not matv["simple"]) or two_sided.holds),
        None,
    )
    applicable = matrix_level and ai
    record(
        "padded_separation_necessary",
        applicable,
        applicable and ((not matv["simple"]) or padded.holds),
        None,
    )
    applicable = matrix_level and ai and prof.greatest_index is not None
    record(
        "greatest_not_absorbing_necessary",
        applicable,
        applicable and ((not matv["simple"]) or omega.holds),
        None,
    )

    # with a multiplicatively absorbing element, matrix simplicity reduces to the base
    mult_abs = next(
        (
            w
            for w in range(k)
            if prof.is_left_mult_absorbing[w] and prof.is_right_mult_absorbing[w]
        ),
        None,
    )
    applicable = matrix_level and mult_abs is not None
    if applicable:
        cond = base["simple"] and no_bi and flags.ss_size >= 2
        agree = matv["simple"] == cond
        if agree and matv["simple"]:
            agree = prof.zero_index == mult_abs
        record(
            "mult_absorbing_matrix_simplicity",
            True,
            agree,
            {"matrix_simple": matv["simple"], "base_conditions": cond, "absorbing": S.elements[mult_abs]},
        )
    else:
        record("mult_absorbing_matrix_simplicity", False)

    # two-element bases with simple M_n are the lattice
    applicable = matrix_level and ai and k == 2
    record(
        "two_element_matrix_simple_is_lattice",
        applicable,
        applicable and ((not matv["simple"]) or two_el.holds),
        None,
    )

    # simple with at least two products: dichotomy
    if k >= 2 and base["simple"] and flags.ss_size >= 2:
        mult_idem = all(S.mul[a][a] == a for a in range(k))
        disj1 = k == 2 and ai and mult_idem and mult_abs is None
        record("simple_dichotomy", True, disj1 or two_sided.holds, {"two_element_case": disj1})
    else:
        record("simple_dichotomy", False)

    mono_blocks = (
        base["monolith"].partition.to_blocks(S.elements) if base["monolith"] is not None else None
    )
    report = CrossCheckReport(
        semiring_name=S.name,
        n=n,
        brute_force={
            "base": {"simple": base["simple"], "si": base["si"], "monolith": mono_blocks},
            "matrix": {"simple": matv["simple"], "si": matv["si"]},
        },
        conditions=conditions,
        agreements=agreements,
        notes=notes,
    )
    if not report.ok:
        bad = [a["theorem"] for a in agreements if a["agree"] is False]
        raise CrossCheckError(
            f"crosscheck discrepancy on {S.name} (n={n}): {', '.join(bad)}",
            report=report,
            counterexample=S.to_dict(),
        )
    return report


def _apply_perm(table, perm, inv):
    k = len(table)
    return tuple(tuple(perm[table[inv[p]][inv[q]]] for q in range(k)) for p in range(k))


def _perms_with_inverses(k):
    out = []
    for perm in itertools.permutations(range(k)):
        inv = [0] * k
        for i, p in enumerate(perm):
            inv[p] = i
        out.append((perm, tuple(inv)))
    return out


def _semilattice_reps(k):
    """Canonical representatives of commutative idempotent associative tables."""
    cells = [(i, j) for i in range(k) for j in range(i + 1, k)]
    perms = _perms_with_inverses(k)
    seen = set()
    reps = []
    for values in itertools.product(range(k), repeat=len(cells)):
        table = [[i if i == j else -1 for j in range(k)] for i in range(k)]
        for (i, j), v in zip(cells, values):
            table[i][j] = table[j][i] = v
        tab = tuple(tuple(row) for row in table)
        ok = all(
            tab[tab[a][b]][c] == tab[a][tab[b][c]]
            for a in range(k)
            for b in range(k)
            for c in range(k)
        )
        if not ok:
            continue
        canon = min(_apply_perm(tab, p, inv) for p, inv in perms)
        if canon not in seen:
            seen.add(canon)
            reps.append(canon)
    return sorted(reps)


def _mul_tables(add, k):
    """All associative multiplications distributing over the given addition.

    Depth-first fill in row-major order; every constraint instance whose
    cells are all assigned is checked after each placement.
    """
    cells = [(i, j) for i in range(k) for j in range(k)]
    table = [[-1] * k for _ in range(k)]

    def consistent():
        for a in range(k):
            for b in range(k):
                ab = table[a][b]
                for c in range(k):
                    if ab != -1:
                        bc = table[b][c]
                        if table[ab][c] != -1 and bc != -1 and table[a][bc] != -1:
                            if table[ab][c] != table[a][bc]:
                                return False
                    # a(b+c) = ab + ac
                    x = table[a][add[b][c]]
                    y = table[a][c]
                    if x != -1 and ab != -1 and y != -1 and x != add[ab][y]:
                        return False
                    # (b+c)a = ba + ca
                    x = table[add[b][c]][a]
                    y = table[b][a]
                    z = table[c][a]
                    if x != -1 and y != -1 and z != -1 and x != add[y][z]:
                        return False
        return True

    out = []

    def fill(pos):
        if pos == len(cells):
            out.append(tuple(tuple(row) for row in table))
            return
        i, j = cells[pos]
        for v in range(k):
            table[i][j] = v
            if consistent():
                fill(pos + 1)
            table[i][j] = -1

    fill(0)
    return out


def enumerate_small(max_size=3):
    """All semirings with idempotent commutative addition, up to isomorphism.

    Additive semilattices are fixed to canonical representatives first; the
    multiplications over each are deduplicated under the automorphisms of the
    addition. Sizes above 3 are allowed up to 4 but are slow by nature.
    """
    if not (1 <= max_size <= 4):
        raise SizeLimitError(f"max_size must be between 1 and 4, got {max_size}")
    labels_all = ("a", "b", "c", "d")
    for k in range(1, max_size + 1):
        labels = labels_all[:k]
        perms = _perms_with_inverses(k)
        count = 0
        for add in _semilattice_reps(k):
            auts = [(p, inv) for p, inv in perms if _apply_perm(add, p, inv) == add]
            for mul in _mul_tables(add, k):
                canon = min(_apply_perm(mul, p, inv) for p, inv in auts)
                if mul != canon:
                    continue
                count += 1
                yield FiniteSemiring(f"S{k}.{count}", labels, add, mul)
