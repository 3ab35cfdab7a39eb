import pytest
from hypothesis import given, settings, strategies as st
from pathlib import Path
import tempfile
from quiver_stability.config.config_manager import ConfigurationManager, AppConfig
from quiver_stability.config.exceptions import ConfigValidationError
from quiver_stability.repcore.field import is_prime

# Strategy for generating valid AppConfig objects
@st.composite
def app_config_strategy(draw):
    return AppConfig(
        prime=draw(st.sampled_from([2, 3, 5, 7, 11, 13])),
        brute_force_bound=draw(st.integers(min_value=0, max_value=12)),
        hom_enumeration_limit=draw(st.integers(min_value=1, max_value=2 ** 24)),
        oracle_max_indecomposables=draw(st.integers(min_value=1, max_value=24)),
        seed=draw(st.integers(min_value=0, max_value=2 ** 32)),
        random_theta_samples=draw(st.integers(min_value=0, max_value=10000)),
        verify_uniqueness=draw(st.booleans()),
        max_workers=draw(st.integers(min_value=1, max_value=16)),
        log_dir=draw(st.text(alphabet="abcdefghij/_-", max_size=20)),
        log_level=draw(st.sampled_from(["DEBUG", "INFO", "WARNING", "ERROR"])),
        svg_size=draw(st.integers(min_value=64, max_value=4096)),
        decimal_places=draw(st.integers(min_value=0, max_value=12)),
    )


@pytest.mark.property
@settings(max_examples=50, deadline=None)
@given(config=app_config_strategy())
def test_config_persistence(config):
    """Saved settings come back unchanged from a fresh manager."""
    with tempfile.TemporaryDirectory() as temp_dir:
        manager = ConfigurationManager(config_dir=Path(temp_dir))
        manager.save_config(config)

        # New instance so the values are read from disk
        new_manager = ConfigurationManager(config_dir=Path(temp_dir))
        loaded_config = new_manager.load_config()

        assert loaded_config == config


@pytest.mark.property
@settings(max_examples=50, deadline=None)
@given(config=app_config_strategy())
def test_limits_follow_config(config):
    """Engine limits mirror the corresponding settings."""
    limits = config.to_limits()
    assert limits.brute_force_bound == config.brute_force_bound
    assert limits.hom_enumeration_limit == config.hom_enumeration_limit
    assert limits.oracle_max_indecomposables == config.oracle_max_indecomposables
    assert limits.verify_uniqueness == config.verify_uniqueness


@pytest.mark.property
@settings(max_examples=100, deadline=None)
@given(prime=st.integers(min_value=-5, max_value=200))
def test_prime_check_matches_field(prime):
    """The characteristic setting accepts exactly the primes the field layer accepts."""
    config = AppConfig(prime=prime)
    if is_prime(prime):
        assert config.validate()
    else:
        with pytest.raises(ConfigValidationError):
            config.validate()
