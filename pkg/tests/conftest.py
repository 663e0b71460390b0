"""Shared fixtures: the catalog geometries used across the test suite."""

from pathlib import Path

import pytest

from ihspoly import load_geometry

GEOM_DIR = Path(__file__).resolve().parents[1] / "geometries"


@pytest.fixture(scope="session")
def hilb2():
    """Rank-2 fourfold model: basis [H, d], q = diag(2, -2), c = 3."""
    return load_geometry(GEOM_DIR / "hilb2.geom")


@pytest.fixture(scope="session")
def k3_elliptic():
    """Rank-3 surface model: elliptic fibration with a section and an
    I2 fiber; basis [f, s, c]."""
    return load_geometry(GEOM_DIR / "k3_rank3.geom")


@pytest.fixture(scope="session")
def hilb2_elliptic():
    """Rank-4 fourfold model extending the elliptic surface lattice."""
    return load_geometry(GEOM_DIR / "hilb2_k3.geom")


@pytest.fixture(scope="session")
def fano_round():
    """Rank-2 fourfold model with a round effective cone (no prime
    catalog on the boundary); thresholds land in quadratic extensions."""
    return load_geometry(GEOM_DIR / "fano_lines.geom")
