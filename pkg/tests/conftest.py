from __future__ import annotations

from fractions import Fraction

import pytest

from qsobolev import HermiteFamily, QContext, Scalar, SobolevFamily, SobolevParams
from qsobolev.verify import FamilyGrid, VerifyConfig


@pytest.fixture(scope="session")
def ctx_half() -> QContext:
    return QContext.exact(Fraction(1, 2))


@pytest.fixture(scope="session")
def fam_half(ctx_half) -> HermiteFamily:
    return HermiteFamily(ctx_half, 12)


@pytest.fixture(scope="session")
def sfam_half(fam_half) -> SobolevFamily:
    params = SobolevParams(alpha=Scalar.exact(2), mass=Scalar.exact(1))
    return SobolevFamily(fam_half, params)


@pytest.fixture(scope="session")
def float_ctx() -> QContext:
    return QContext.inexact(Fraction(1, 2), 256, "1e-30")


@pytest.fixture(scope="session")
def acceptance_grid() -> FamilyGrid:
    """One shared family grid for the whole acceptance battery, so the
    criteria reuse each other's cached connection data."""
    return FamilyGrid(VerifyConfig())
