import cmath
import math

import numpy as np
import pytest
from hypothesis import settings, strategies as st

from symbidisc import bidisc, mobius

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


@pytest.fixture
def rng():
    return np.random.default_rng(20261016)


def disc_points(radius=0.9):
    return st.builds(lambda r, t: radius * math.sqrt(r) * cmath.exp(1j * t),
                     st.floats(0, 1), st.floats(0, 2 * math.pi))


def automorphisms(max_alpha=0.9):
    return st.builds(mobius.chart_m, st.floats(-math.pi, math.pi), disc_points(max_alpha))


def g_points(radius=0.9):
    return st.builds(bidisc.pi, disc_points(radius), disc_points(radius))


def close(a, b, tol):
    return float(np.max(np.abs(np.asarray(a, dtype=complex) - np.asarray(b, dtype=complex)))) < tol
