import pytest
from hypothesis import given
from hypothesis import strategies as st

import semiringlab as sl
from semiringlab.congruence import Partition
from semiringlab.errors import DegenerateInputError, InputError, SizeLimitError

from oracles import monolith_naive, principal_naive, same_partition


def test_partition_basics():
    p = Partition.from_blocks(4, [[0, 2], [1], [3]])
    assert p.same(0, 2) and not p.same(0, 1)
    assert p.blocks() == [[0, 2], [1], [3]]
    assert not p.is_identity and not p.is_full
    assert Partition.identity(3).is_identity
    assert Partition.full(3).is_full
    assert p == Partition.from_pairs(4, [(2, 0)])
    assert p.to_blocks(("w", "x", "y", "z")) == [["w", "y"], ["x"], ["z"]]


def test_partition_meet_and_refines():
    p = Partition.from_blocks(4, [[0, 1, 2], [3]])
    q = Partition.from_blocks(4, [[0, 1], [2, 3]])
    m = p.meet(q)
    assert m.blocks() == [[0, 1], [2], [3]]
    assert m.refines(p) and m.refines(q)
    assert not p.refines(m)


def test_partition_from_blocks_validation():
    with pytest.raises(InputError):
        Partition.from_blocks(3, [[0, 1], [1, 2]])
    with pytest.raises(InputError):
        Partition.from_blocks(3, [[0, 1]])


def test_principal_congruence_trivial_seed(luk3):
    assert sl.principal_congruence(luk3, 1, 1).is_identity


def test_principal_congruence_l2(l2):
    assert sl.principal_congruence(l2, 0, 1).is_full


def test_principal_congruence_luk3_matches_oracle(luk3):
    got = sl.principal_congruence(luk3, 0, 1)
    assert got.to_blocks(luk3.elements) == [["0", "e"], ["u"]]
    assert same_partition(principal_naive(luk3, 0, 1), got)


@pytest.mark.parametrize("fixture", ["luk3", "luk4", "b2", "s5"])
def test_principal_congruences_match_oracle_everywhere(fixture, request):
    S = request.getfixturevalue(fixture)
    for a in range(S.size):
        for b in range(a + 1, S.size):
            got = sl.principal_congruence(S, a, b)
            assert same_partition(principal_naive(S, a, b), got)
            ok, viol = sl.is_congruence(S, got)
            assert ok and viol is None
            assert got.same(a, b)


def test_is_congruence_examples(luk3):
    ok, _ = sl.is_congruence(luk3, Partition.identity(3))
    assert ok
    ok, _ = sl.is_congruence(luk3, Partition.from_blocks(3, [[0, 1], [2]]))
    assert ok
    ok, viol = sl.is_congruence(luk3, Partition.from_blocks(3, [[0, 2], [1]]))
    assert not ok
    kind, c = viol.translation
    assert (kind, c) == ("add", 1)  # adding e forces (e, u) together
    assert set(viol.pair) == {0, 2}


def test_is_congruence_size_mismatch(luk3):
    with pytest.raises(InputError):
        sl.is_congruence(luk3, Partition.identity(4))


def test_simplicity(l2, luk3):
    assert sl.is_congruence_simple(l2)
    assert not sl.is_congruence_simple(luk3)
    mat = sl.matrix_semiring(l2, 2)
    assert sl.is_congruence_simple(mat.semiring)


def test_degenerate_inputs_rejected():
    S = sl.FiniteSemiring("triv", ["*"], [[0]], [[0]])
    with pytest.raises(DegenerateInputError):
        sl.is_congruence_simple(S)
    with pytest.raises(DegenerateInputError):
        sl.monolith(S)


@pytest.mark.parametrize("fixture,expected_si", [("luk3", True), ("b2", False), ("s5", True), ("l2", True)])
def test_monolith_matches_oracle(fixture, expected_si, request):
    S = request.getfixturevalue(fixture)
    mono = sl.monolith(S)
    naive = monolith_naive(S)
    assert (mono is not None) == (naive is not None) == expected_si
    if mono is not None:
        assert same_partition(naive, mono.partition)
        a, b = mono.generating_pair
        assert sl.principal_congruence(S, a, b) == mono.partition


def test_monolith_luk3_form(luk3):
    mono = sl.monolith(luk3)
    assert mono.partition.to_blocks(luk3.elements) == [["0", "e"], ["u"]]


def test_monolith_contained_in_every_principal(luk4, s5):
    for S in (luk4, s5):
        mono = sl.monolith(S)
        assert mono is not None
        for a in range(S.size):
            for b in range(a + 1, S.size):
                assert mono.partition.refines(sl.principal_congruence(S, a, b))


def test_si_monolith_form_for_almost_integral(luk4, s5):
    # SI almost integral: the monolith merges exactly the zero and the least non-zero
    for S in (luk4, s5):
        prof = sl.element_profile(S)
        mono = sl.monolith(S)
        zero = prof.zero_index
        order = sl.natural_order(S)
        e = next(
            x for x in range(S.size)
            if x != zero and all(order.le(x, y) for y in range(S.size) if y != zero)
        )
        assert mono.partition.nontrivial_blocks() == [sorted((zero, e))]


def _intersection_of_all_principals(S):
    """The monolith by its literal definition, with early exit at the identity."""
    inter = Partition.full(S.size)
    for a in range(S.size):
        for b in range(a + 1, S.size):
            inter = inter.meet(sl.principal_congruence(S, a, b))
            if inter.is_identity:
                return inter
    return inter


def test_monolith_equals_intersection_at_matrix_scale(luk3, l2, s5):
    # cross-validate the descent-plus-verification path against the defining
    # intersection at sizes the partition-enumeration oracle cannot reach
    cases = [sl.matrix_semiring(l2, 2).semiring, sl.matrix_semiring(luk3, 2).semiring]
    cases += [
        sl.matrix_semiring(S, 2).semiring
        for S in sl.enumerate_small(2)
        if S.size == 2
    ]
    cases.append(sl.matrix_semiring(s5, 2).semiring)  # 625 elements, not SI
    for T in cases:
        inter = _intersection_of_all_principals(T)
        mono = sl.monolith(T)
        if mono is None:
            assert inter.is_identity
        else:
            assert inter == mono.partition


def test_hat_requires_idempotent_addition():
    S = sl.FiniteSemiring("z2", ["0", "1"], [[0, 1], [1, 0]], [[0, 0], [0, 1]])
    mat = sl.matrix_semiring(S, 2)
    with pytest.raises(sl.PreconditionError):
        sl.hat_congruence(S, 2, Partition.identity(16), matrix=mat)


def test_simple_implies_si_on_enumeration():
    for S in sl.enumerate_small(3):
        if S.size < 2:
            continue
        if sl.is_congruence_simple(S):
            mono = sl.monolith(S)
            assert mono is not None and mono.partition.is_full
        else:
            mono = sl.monolith(S)
            if mono is not None:
                assert not mono.partition.is_full


@given(st.data())
def test_monotonicity_property(data):
    S = sl.gen_lukasiewicz(3)
    k = S.size
    a = data.draw(st.integers(0, k - 1))
    b = data.draw(st.integers(0, k - 1))
    c = data.draw(st.integers(0, k - 1))
    d = data.draw(st.integers(0, k - 1))
    big = sl.principal_congruence(S, c, d)
    if big.same(a, b):
        assert sl.principal_congruence(S, a, b).refines(big)


def test_lambda_rho(l2, s5, luk4, b2):
    lam, rho = sl.lambda_rho(l2)
    assert lam.is_identity and rho.is_identity

    lam, rho = sl.lambda_rho(s5)
    zero, e = s5.index("0"), s5.index("e")
    assert lam.same(zero, e)
    assert rho.same(zero, e)

    for S in (luk4, b2):  # commutative: the two collapses coincide
        lam, rho = sl.lambda_rho(S)
        assert lam == rho


def test_tilde_congruence(luk3):
    mono = sl.monolith(luk3).partition
    lifted = sl.tilde_congruence(luk3, 2, mono)
    assert lifted.size == 81 and not lifted.is_identity and not lifted.is_full
    # entrywise: matrices are related iff all entries are related
    mat = sl.matrix_semiring(luk3, 2)
    for i in (0, 1, 5, 17, 80):
        for j in (0, 2, 8, 44, 80):
            entrywise = all(
                mono.same(x, y)
                for rx, ry in zip(mat.decode(i), mat.decode(j))
                for x, y in zip(rx, ry)
            )
            assert lifted.same(i, j) == entrywise

    assert sl.tilde_congruence(luk3, 2, Partition.identity(3)).is_identity
    assert sl.tilde_congruence(luk3, 2, Partition.full(3)).is_full


def test_tilde_rejects_non_congruence(luk3):
    with pytest.raises(InputError):
        sl.tilde_congruence(luk3, 2, Partition.from_blocks(3, [[0, 2], [1]]))


def test_tilde_size_error(luk3):
    with pytest.raises(SizeLimitError):
        sl.tilde_congruence(luk3, 4, Partition.identity(3))


def test_hat_congruence(luk3):
    mat = sl.matrix_semiring(luk3, 2)
    T = mat.semiring
    assert sl.hat_congruence(luk3, 2, Partition.identity(81), matrix=mat).is_identity
    assert sl.hat_congruence(luk3, 2, Partition.full(81), matrix=mat).is_full

    mono_T = sl.monolith(T).partition
    hat = sl.hat_congruence(luk3, 2, mono_T, matrix=mat)
    assert hat.same(0, 1)  # contains (0, e)


def test_hat_rejects_non_congruence(luk3):
    mat = sl.matrix_semiring(luk3, 2)
    bad = Partition.from_pairs(81, [(0, 80)])
    ok, _ = sl.is_congruence(mat.semiring, bad)
    assert not ok
    with pytest.raises(InputError):
        sl.hat_congruence(luk3, 2, bad, matrix=mat)


def test_hat_of_tilde_contains_original(luk3):
    mat = sl.matrix_semiring(luk3, 2)
    for rho in (Partition.identity(3), sl.monolith(luk3).partition, Partition.full(3)):
        lifted = sl.tilde_congruence(luk3, 2, rho)
        back = sl.hat_congruence(luk3, 2, lifted, matrix=mat)
        assert rho.refines(back)


def test_partition_json(luk3):
    mono = sl.monolith(luk3).partition
    assert mono.to_json(luk3.elements) == '[["0", "e"], ["u"]]'
