import pytest

from prelotto.oracle import OracleConfig


@pytest.fixture
def fast_oracle() -> OracleConfig:
    """Coarser oracle for unit tests; acceptance uses the full default."""
    return OracleConfig(split_resolution=501, t_resolution=101, refine_rounds=2)
