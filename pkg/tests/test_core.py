import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

import semiringlab as sl
from semiringlab.errors import PreconditionError, TableFormatError

from oracles import axioms_ok_naive


def permuted(S, perm):
    inv = [0] * S.size
    for i, p in enumerate(perm):
        inv[p] = i
    k = S.size
    add = [[perm[S.add[inv[i]][inv[j]]] for j in range(k)] for i in range(k)]
    mul = [[perm[S.mul[inv[i]][inv[j]]] for j in range(k)] for i in range(k)]
    return sl.FiniteSemiring(S.name + "_perm", [S.elements[inv[i]] for i in range(k)], add, mul)


def test_verify_axioms_pass(l2, luk3, b2):
    for S in (l2, luk3, b2):
        report = sl.verify_axioms(S)
        assert report.ok and report.failures == ()
        assert axioms_ok_naive(S)


def test_verify_axioms_broken_distributivity():
    # xor multiplication is associative but not distributive over max
    S = sl.FiniteSemiring("broken", ["0", "1"], [[0, 1], [1, 1]], [[0, 1], [1, 0]])
    report = sl.verify_axioms(S)
    assert not report.ok
    axioms = {f.axiom for f in report.failures}
    assert axioms <= {"left_distributive", "right_distributive"}
    a, b, c = report.failures[0].witness
    assert S.mul[a][S.add[b][c]] != S.add[S.mul[a][b]][S.mul[a][c]]
    assert not axioms_ok_naive(S)


def test_verify_axioms_every_failure_witness_reverifies():
    # a grab bag of broken tables; each reported witness must reproduce the violation
    tables = [
        ([[0, 1], [1, 1]], [[0, 1], [1, 0]]),
        ([[0, 0], [0, 1]], [[0, 0], [0, 1]]),  # add not commutative? (it is; exercise pass path)
        ([[0, 1], [0, 1]], [[0, 0], [0, 1]]),  # add not commutative
    ]
    for add, mul in tables:
        S = sl.FiniteSemiring("t", ["0", "1"], add, mul)
        report = sl.verify_axioms(S)
        assert report.ok == axioms_ok_naive(S)
        for f in report.failures:
            if f.axiom == "add_commutative":
                a, b = f.witness
                assert S.add[a][b] != S.add[b][a]


def test_malformed_tables_rejected():
    with pytest.raises(TableFormatError):
        sl.FiniteSemiring("bad", ["0", "1"], [[0, 1]], [[0, 1], [1, 1]])  # non-square
    with pytest.raises(TableFormatError):
        sl.FiniteSemiring("bad", ["0", "1"], [[0, 2], [1, 1]], [[0, 0], [0, 1]])  # out of range
    with pytest.raises(TableFormatError):
        sl.FiniteSemiring("bad", ["0", "0"], [[0, 1], [1, 1]], [[0, 0], [0, 1]])  # dup labels
    with pytest.raises(TableFormatError):
        sl.semiring_from_dict({"name": "x", "elements": ["0"], "add": [[0]]})  # missing mul


def test_element_profile_l2(l2):
    prof = sl.element_profile(l2)
    assert prof.zero_index == 0
    assert prof.unity_index == 1
    assert prof.greatest_index == 1
    assert not any(prof.is_bi_absorbing)


def test_element_profile_luk3(luk3):
    prof = sl.element_profile(luk3)
    assert prof.zero_index == luk3.index("0")
    assert prof.unity_index == luk3.index("u")
    assert prof.greatest_index == luk3.index("u")
    assert not any(prof.is_bi_absorbing)


def test_element_profile_singleton():
    S = sl.FiniteSemiring("triv", ["*"], [[0]], [[0]])
    prof = sl.element_profile(S)
    assert prof.is_zero[0] and prof.is_unity[0] and prof.is_bi_absorbing[0]


def test_natural_order_chains(l2, luk3):
    o2 = sl.natural_order(l2)
    assert o2.le(0, 1) and not o2.le(1, 0)
    o3 = sl.natural_order(luk3)
    assert o3.is_total()
    assert o3.le(0, 1) and o3.le(1, 2) and not o3.le(2, 1)


def test_natural_order_diamond(b2):
    order = sl.natural_order(b2)
    a, b = b2.index("a"), b2.index("b")
    assert not order.le(a, b) and not order.le(b, a)
    assert order.le(b2.index("0"), a) and order.le(a, b2.index("ab"))
    assert not order.is_total()
    assert order.greatest_index() == b2.index("ab")


def test_natural_order_refuses_non_idempotent():
    S = sl.FiniteSemiring("z2", ["0", "1"], [[0, 1], [1, 0]], [[0, 0], [0, 1]])
    with pytest.raises(PreconditionError) as err:
        sl.natural_order(S)
    assert "1" in str(err.value)


def test_classify_examples(l2, luk3, b2, s5):
    f = sl.classify(l2)
    assert f.additively_idempotent and f.commutative and f.integral and f.downward_directed
    assert f.ss_size == 2

    f = sl.classify(luk3)
    assert f.integral and f.commutative and f.ss_size == 3

    f = sl.classify(s5)
    assert f.almost_integral and not f.integral
    assert sl.element_profile(s5).zero_index is not None

    assert sl.classify(b2).integral


def test_almost_integral_minimal_is_zero(luk4, b2, s5):
    # in an almost integral semiring the minimal element, if any, is the zero
    for S in (luk4, b2, s5):
        assert sl.classify(S).almost_integral
        prof = sl.element_profile(S)
        for w, m in enumerate(prof.is_minimal):
            if m:
                assert prof.is_zero[w]


def test_almost_integral_unity_is_greatest(l2, luk3, luk4, b2, s6):
    for S in (l2, luk3, luk4, b2, s6):
        prof = sl.element_profile(S)
        if sl.classify(S).almost_integral and prof.unity_index is not None:
            assert prof.greatest_index == prof.unity_index


def test_is_isomorphic_examples(l2):
    luk2 = sl.gen_lukasiewicz(1)
    ok, mapping = sl.is_isomorphic(l2, luk2)
    assert ok and mapping is not None

    const = sl.FiniteSemiring("const", ["0", "1"], [[0, 1], [1, 1]], [[0, 0], [0, 0]])
    assert sl.is_isomorphic(l2, const) == (False, None)

    ok, mapping = sl.is_isomorphic(l2, l2)
    assert ok and mapping == (0, 1)


def test_isomorphism_witness_is_an_isomorphism(luk3, b2):
    for S in (luk3, b2):
        for perm in itertools.permutations(range(S.size)):
            T = permuted(S, perm)
            ok, mapping = sl.is_isomorphic(S, T)
            assert ok
            for a in range(S.size):
                for b in range(S.size):
                    assert mapping[S.add[a][b]] == T.add[mapping[a]][mapping[b]]
                    assert mapping[S.mul[a][b]] == T.mul[mapping[a]][mapping[b]]


@given(st.permutations(range(3)))
def test_axiom_pass_stable_under_relabeling(perm):
    S = sl.gen_lukasiewicz(2)
    assert sl.verify_axioms(permuted(S, list(perm))).ok


def test_natural_order_join(luk4, b2):
    # a + b is the least upper bound of a and b
    for S in (luk4, b2):
        order = sl.natural_order(S)
        k = S.size
        for a in range(k):
            for b in range(k):
                j = S.add[a][b]
                assert order.le(a, j) and order.le(b, j)
                for c in range(k):
                    if order.le(a, c) and order.le(b, c):
                        assert order.le(j, c)


def test_json_roundtrip(luk3, tmp_path):
    path = tmp_path / "luk3.json"
    sl.dump_semiring(luk3, path)
    back = sl.load_semiring(path)
    assert back == luk3 and back.name == luk3.name

    assert sl.semiring_from_dict(luk3.to_dict()) == luk3
