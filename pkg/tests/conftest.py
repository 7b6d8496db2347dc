import copy

import pytest

from quintic_radicals.config import ConfigurationManager

# x^5 + x + 0.01 = 0; lam = -5e-9 is a negative real, so theta = pi/5
EXAMPLE_1 = {
    "a": 0.01,
    "xi": 5e-9,
    "y_iterates": [
        complex(0.0098512048, -0.0015389435),
        complex(0.0098621666, -0.0015443624),
        complex(0.0098621566, -0.0015443337),
    ],
    "y_errors": [1.22e-5, 3.03e-8],
    "x1": complex(0.7106828395, 0.707685341),
    "x3": complex(0.7095957376, 0.7071176682),
    "x_errors": [1.23e-3, 3.04e-6, 7.53e-9],
    # k -> (y, x)
    "roots": {
        -2: (complex(-0.8090170025, -0.5877852582), complex(-0.0099999999, 0.0)),
        -1: (complex(-0.0015494319, -0.0098971415), complex(-0.704595734, 0.7071179873)),
        0: (complex(0.0098621565, -0.0015443338), complex(0.7095957339, 0.7071176748)),
        1: (complex(0.0015788252, 0.0098566936), complex(0.7095957339, -0.7071176748)),
        2: (complex(-0.0098915418, 0.0015847876), complex(-0.704595734, -0.7071179873)),
    },
}

EXAMPLE_2 = {
    "a": complex(3.08, 1.68),
    "xi": 75.75327872,
    "theta": 0.228841153,
    "y_iterates": [
        complex(2.5575832547, -0.0350982734),
        complex(2.5580208152, -0.0347474236),
        complex(2.5580193271, -0.0347499325),
    ],
    "y_errors": [5.58e-4, 2.90e-6, 1.51e-8],
    "x1": complex(1.0111375519, 0.926807176),
    "x_errors": [2.99e-4, 1.56e-6, 8.09e-9],
    "roots": {
        -2: (complex(-2.4358363319, -1.6419437613), complex(-1.1834415151, -0.1608289168)),
        -1: (complex(0.6487113516, -2.6125840601), complex(-0.607389619, 1.1531182439)),
        0: (complex(2.5580193297, -0.0347499177), complex(1.0110954185, 0.9265109088)),
        1: (complex(0.6697215821, 2.5335199517), complex(1.116784747, -0.7383651957)),
        2: (complex(-2.4145458637, 1.5289087467), complex(-0.3370490315, -1.1804350402)),
    },
}

# printed to 10 decimals
TABLE_TOL = 5e-10


def assert_close(found: complex, expected: complex, tol: float = TABLE_TOL):
    assert abs(found.real - expected.real) <= tol, (found, expected)
    assert abs(found.imag - expected.imag) <= tol, (found, expected)


@pytest.fixture
def example1():
    return EXAMPLE_1


@pytest.fixture
def example2():
    return EXAMPLE_2


@pytest.fixture
def config():
    """Default configuration without timings, so reports are deterministic"""
    cfg = copy.deepcopy(ConfigurationManager.DEFAULT_CONFIG)
    cfg["output"]["include_timing"] = False
    cfg["batch"]["jobs"] = 2
    return cfg
