import numpy as np
import pytest

from antifourier import FunctionSpec, Named, Polynomial


def catalog_specs(L=np.pi):
    """One instance of every named catalog entry on [-L, L]."""
    return [
        FunctionSpec(L, Named("identity")),
        FunctionSpec(L, Named("const", (1.5,))),
        FunctionSpec(L, Named("signum")),
        FunctionSpec(L, Named("x-plus-sign")),
        FunctionSpec(L, Named("scaled-square")),
    ]


@pytest.fixture
def identity_pi():
    return FunctionSpec(np.pi, Named("identity"))


@pytest.fixture
def quadratic_unit():
    # (x + 1)^2 = 1 + 2x + x^2 on [-1, 1]
    return FunctionSpec(1.0, Polynomial((1.0, 2.0, 1.0)))
