"""Tests for settings loading."""

from unittest.mock import patch


class TestSettings:
    """Tests for Settings and get_settings."""

    def test_defaults(self):
        """Test built-in default values."""
        from twincity.config import Settings

        settings = Settings()
        assert settings.precision_start == 8
        assert settings.precision_cap == 512
        assert settings.oracle_max_length == 4
        assert settings.schema_version == 1

    def test_env_override(self):
        """Test that TWINCITY_ variables win over YAML values."""
        from twincity.config import get_settings

        with patch.dict("os.environ", {"TWINCITY_PRECISION_CAP": "64"}):
            get_settings.cache_clear()
            assert get_settings().precision_cap == 64

    def test_yaml_values_fill_defaults(self, tmp_path):
        """Test that YAML keys apply and unknown keys are dropped."""
        from twincity import config

        path = tmp_path / "settings.yaml"
        path.write_text("check_workers: 3\nnot_a_setting: 1\n")
        with patch.object(config, "load_yaml_config", return_value=config.load_yaml_config(path)):
            settings = config.get_settings()
        assert settings.check_workers == 3
        assert not hasattr(settings, "not_a_setting")

    def test_missing_yaml(self, tmp_path):
        """Test that a missing YAML file yields no overrides."""
        from twincity.config import load_yaml_config

        assert load_yaml_config(tmp_path / "absent.yaml") == {}

    def test_settings_cached(self):
        """Test that get_settings returns one instance until cleared."""
        from twincity.config import get_settings

        assert get_settings() is get_settings()
