import pytest

from hyperreguli.gf import make_field
from hyperreguli.spread import build_spread


@pytest.fixture(scope="session")
def ctx2():
    return make_field(2)


@pytest.fixture(scope="session")
def ctx3():
    return make_field(3)


@pytest.fixture(scope="session")
def ctx4():
    return make_field(2, 2)


@pytest.fixture(scope="session")
def ctx5():
    return make_field(5)


@pytest.fixture(scope="session")
def ctx_by_q(ctx2, ctx3, ctx4, ctx5):
    return {2: ctx2, 3: ctx3, 4: ctx4, 5: ctx5}


@pytest.fixture(scope="session")
def spread2(ctx2):
    return build_spread(ctx2)


@pytest.fixture(scope="session")
def spread3(ctx3):
    return build_spread(ctx3)


@pytest.fixture(scope="session")
def spread4(ctx4):
    return build_spread(ctx4)


@pytest.fixture(scope="session")
def spread5(ctx5):
    return build_spread(ctx5)


@pytest.fixture(scope="session")
def spread_by_q(spread2, spread3, spread4, spread5):
    return {2: spread2, 3: spread3, 4: spread4, 5: spread5}
