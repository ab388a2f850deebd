import pytest

from geo3.config import DEFAULTS, Config, setting, tolerance
from geo3.errors import ConfigError


@pytest.fixture
def config_file_path(tmp_path):
    content = """
        tolerances:
            regularity: 1.0e-6
            checks:
                koszul: 1.0e-5
        integration:
            steps_per_unit: 250
    """

    path = tmp_path / "geo3.yaml"
    path.write_text(content)
    return path


class TestConfig:
    def test_config_can_be_created_from_yaml_file(self, config_file_path) -> None:
        config = Config.from_yaml(config_file_path)

        assert config.data is not None
        assert config.data["tolerances"] is not None
        assert config.data["integration"] is not None
        assert config.data["sweeps"] is not None

    def test_yaml_values_are_merged_over_the_defaults(self, config_file_path) -> None:
        config = Config.from_yaml(config_file_path)

        assert config["tolerances.regularity"] == 1e-6
        assert config["tolerances.checks.koszul"] == 1e-5
        assert config["integration.steps_per_unit"] == 250
        assert config["tolerances.checks.egregium"] == 1e-6
        assert config["sweeps.max_workers"] == DEFAULTS["sweeps"]["max_workers"]

    def test_config_values_can_be_accessed_using_custom_dot_syntax(
        self, config_file_path
    ) -> None:
        config = Config.from_yaml(config_file_path)

        assert config["tolerances.checks.geodesic"] == 1e-6
        assert config["integration.geodesic_min_steps"] == 2000

    def test_config_values_can_be_set_using_custom_dot_syntax(
        self, config_file_path
    ) -> None:
        config = Config.from_yaml(config_file_path)

        config["tolerances.regularity"] = 1e-3

        assert config["tolerances.regularity"] == 1e-3

    def test_missing_keys_raise_key_error(self, config_file_path) -> None:
        config = Config.from_yaml(config_file_path)

        assert config.get("tolerances.unknown") is None
        with pytest.raises(KeyError):
            config["tolerances.unknown"]

    def test_missing_config_file_is_reported(self, tmp_path) -> None:
        with pytest.raises(FileNotFoundError):
            Config.from_yaml(tmp_path / "missing.yaml")

    def test_invalid_yaml_raises_config_error(self, tmp_path) -> None:
        path = tmp_path / "geo3.yaml"
        path.write_text("tolerances: [unclosed")

        with pytest.raises(ConfigError):
            Config.from_yaml(path)

    def test_non_mapping_yaml_raises_config_error(self, tmp_path) -> None:
        path = tmp_path / "geo3.yaml"
        path.write_text("- just\n- a list\n")

        with pytest.raises(ConfigError):
            Config.from_yaml(path)

    def test_load_falls_back_to_defaults(self, tmp_path) -> None:
        Config.load(tmp_path / "missing.yaml")

        assert tolerance("checks.koszul") == DEFAULTS["tolerances"]["checks"]["koszul"]
        assert setting("sweeps.max_workers") == 4

    def test_load_reads_the_given_file(self, config_file_path) -> None:
        Config.load(config_file_path)

        assert tolerance("regularity") == 1e-6


class TestToleranceOverride:
    def test_bare_number_replaces_every_check_tolerance(self, monkeypatch, tmp_path):
        monkeypatch.setenv("GEO3_TOLERANCE", "1e-3")
        Config.load(tmp_path / "missing.yaml")

        for name in DEFAULTS["tolerances"]["checks"]:
            assert tolerance(f"checks.{name}") == 1e-3
        assert tolerance("regularity") == DEFAULTS["tolerances"]["regularity"]

    def test_key_value_pairs_are_relative_to_tolerances(self, monkeypatch, tmp_path):
        monkeypatch.setenv("GEO3_TOLERANCE", "regularity=1e-4, checks.koszul=2e-5")
        Config.load(tmp_path / "missing.yaml")

        assert tolerance("regularity") == 1e-4
        assert tolerance("checks.koszul") == 2e-5

    @pytest.mark.parametrize("raw", ["regularity", "=1e-3", "regularity=abc"])
    def test_malformed_override_raises_config_error(self, raw) -> None:
        with pytest.raises(ConfigError):
            Config.get_instance().apply_tolerance_override(raw)

    def test_reset_forgets_overrides(self) -> None:
        Config.get_instance().apply_tolerance_override("5e-2")
        assert tolerance("checks.koszul") == 5e-2

        Config.reset()

        assert tolerance("checks.koszul") == DEFAULTS["tolerances"]["checks"]["koszul"]
