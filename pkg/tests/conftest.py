import pytest
from hypothesis import HealthCheck, settings

import semiringlab as sl

settings.register_profile(
    "workbench", deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("workbench")


@pytest.fixture(scope="session", autouse=True)
def warm_kernels():
    """Compile the numba kernels on a trivial instance up front.

    Timing-sensitive tests must measure the algorithms, not the JIT.
    """
    S = sl.gen_l2()
    sl.is_congruence_simple(S)
    sl.monolith(S)
    from semiringlab import _kernels

    _kernels.membership(S.add_np, S.mul_np, 0, 1, 0, 1)
    _kernels.verify_target_all_pairs(S.add_np, S.mul_np, 0, 1)


@pytest.fixture(scope="session")
def l2():
    return sl.gen_l2()


@pytest.fixture(scope="session")
def luk3():
    return sl.gen_lukasiewicz(2)


@pytest.fixture(scope="session")
def luk4():
    return sl.gen_lukasiewicz(3)


@pytest.fixture(scope="session")
def b2():
    return sl.gen_boolean(2)


@pytest.fixture(scope="session")
def s5(b2):
    """The 5-element SI extension of the diamond Boolean semiring."""
    return sl.adjoin_least(b2)


@pytest.fixture(scope="session")
def s6(s5):
    """s5 with a unity adjoined; 6 elements, integral."""
    return sl.adjoin_unity(s5)
