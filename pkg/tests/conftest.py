import numpy as np
import pytest

from pqbezier import PQCurve, PQParams, PQSurface

# Parameter pairs exercised across suites; all ordered (p >= q).
PARAMS_SET = (
    PQParams(1.0, 1.0),
    PQParams(1.0, 0.5),
    PQParams(0.8, 0.5),
    PQParams(1.2, 1.1),
    PQParams(2.0, 1.0),
)

# Default cubic control polygon used by the shape-control diagnostics.
CUBIC_POLYGON = ((0.0, 0.0), (1.0, 3.0), (3.0, 3.0), (4.0, 0.0))

# Degree-2 polygon for the one-parameter reducibility comparisons.
QUAD_POLYGON = ((0.0, 0.0), (1.0, 2.0), (2.0, 0.0))

# 2x2-degree control net (3x3 points).
SURFACE_NET = (
    ((0.0, 0.0, 0.0), (0.0, 1.0, 1.0), (0.0, 2.0, 0.0)),
    ((1.0, 0.0, 1.0), (1.0, 1.0, 3.0), (1.0, 2.0, 1.0)),
    ((2.0, 0.0, 0.0), (2.0, 1.0, 1.0), (2.0, 2.0, 0.0)),
)

# 3x1-degree control net (4x2 points) for the rectangular algorithms.
RECT_NET = (
    ((0.0, 0.0, 0.0), (0.0, 1.0, 1.0)),
    ((1.0, 0.0, 2.0), (1.0, 1.0, 3.0)),
    ((2.0, 0.0, 2.0), (2.0, 1.0, 1.0)),
    ((3.0, 0.0, 0.0), (3.0, 1.0, 0.0)),
)

SURFACE_PARAMS = (PQParams(1.0, 0.5), PQParams(0.8, 0.5))


@pytest.fixture
def cubic_curve():
    return PQCurve(PQParams(0.8, 0.5), CUBIC_POLYGON)


@pytest.fixture
def quad_curve_q():
    return PQCurve(PQParams(1.0, 0.5), QUAD_POLYGON)


@pytest.fixture
def surface():
    return PQSurface(SURFACE_PARAMS[0], SURFACE_PARAMS[1], SURFACE_NET)


@pytest.fixture
def rect_surface():
    return PQSurface(SURFACE_PARAMS[0], SURFACE_PARAMS[1], RECT_NET)


def grid(count: int = 101) -> np.ndarray:
    return np.linspace(0.0, 1.0, count)
