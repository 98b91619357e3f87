import warnings

import pytest

from torsiongen.polyalg import IntPoly


@pytest.fixture(autouse=True)
def _quiet_alexander_warnings():
    """The non-reciprocal / Delta(1) warnings are contract behavior tested
    explicitly in test_torsion; keep them out of everything else."""
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", UserWarning)
        yield


@pytest.fixture
def trefoil():
    return IntPoly([1, -1, 1])


@pytest.fixture
def figure_eight():
    return IntPoly([1, -3, 1])


@pytest.fixture
def k8_256():
    # Alexander polynomial with roots 2/3 and 3/2
    return IntPoly([6, -13, 6])


@pytest.fixture
def lehmer():
    return IntPoly([1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1])


@pytest.fixture
def golden():
    return IntPoly([-1, -1, 1])
