import pytest

from shimony import _kernels
from shimony.catalog import catalog_directions
from shimony.matrices import build_as_matrix


@pytest.fixture(scope="session", autouse=True)
def warm_kernels():
    # The first numba call JIT-compiles (or loads the on-disk cache); keep
    # that cost out of individual tests, some of which assert wall-clock
    # budgets.
    m = build_as_matrix(4)
    _kernels.lhv_max(m)
    _kernels.steering_max(m, catalog_directions(4).bob_directions)
