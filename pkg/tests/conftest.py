import pytest

from exact_linalg import IntMatrix
from surface_model import validate_k

ODD_KS = list(range(3, 26, 2))

TWIST_1_K3 = [
    [1, 0, 1, 1, 1, 0],
    [0, 1, 0, 0, 0, 0],
    [0, 0, 1, 0, 0, 0],
    [0, 0, 0, 1, 0, 0],
    [0, 0, 0, 0, 1, 0],
    [0, 0, 0, 0, 0, 1],
]

ROTATION_K3 = [
    [0, 1, 0, 0, 0, 0],
    [0, 0, 1, 0, 0, 0],
    [0, 0, 0, 1, 0, 0],
    [0, 0, 0, 0, 1, 0],
    [0, 0, 0, 0, 0, 1],
    [1, 0, 0, 0, 0, 0],
]

PHI_K3 = [
    [0, 0, 0, 1, 0, 0],
    [0, 0, 0, 0, 1, 0],
    [0, 0, 0, 0, 0, 1],
    [1, 0, 0, 0, 0, 0],
    [0, 1, 0, 0, 0, 0],
    [1, 0, 1, 0, 1, 1],
]

# Phi_3 after exchanging mu_3 and mu_5
REDUCIBLE_K3 = [
    [0, 0, 0, 1, 0, 0],
    [0, 0, 1, 0, 0, 0],
    [0, 1, 0, 0, 0, 0],
    [1, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 1],
    [1, 0, 1, 0, 1, 1],
]


@pytest.fixture
def k3():
    return validate_k(3)


@pytest.fixture
def k5():
    return validate_k(5)


@pytest.fixture
def pinned_matrices():
    return {
        "twist_1": IntMatrix(TWIST_1_K3),
        "rotation": IntMatrix(ROTATION_K3),
        "phi": IntMatrix(PHI_K3),
        "reducible": IntMatrix(REDUCIBLE_K3),
    }


@pytest.fixture(params=ODD_KS, ids=lambda k: f"k={k}")
def odd_p(request):
    return validate_k(request.param)
