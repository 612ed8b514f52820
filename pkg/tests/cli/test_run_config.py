"""Test module for command parameter validation."""

import pytest
from pydantic import ValidationError

from polyprod.cli.run_config import COMMAND_PARAMETERS
from polyprod.cli.run_config import RunConfig
from polyprod.errors import ParameterError


def test_build_image_config() -> None:
    """Test a valid image configuration and its parameter echo."""
    config = RunConfig.build(command="image", poly="x^2+1", p=7, threads=2)
    assert config.parameters() == {"poly": "x^2+1", "p": 7}
    assert config.format == "json"
    assert config.output is None


def test_optional_parameters_are_accepted() -> None:
    """Test that optional parameters may be given or omitted."""
    with_n = RunConfig.build(command="image", poly="x", p=5, N=3)
    assert with_n.parameters()["N"] == 3
    fields = RunConfig.build(command="fields", poly="x", N=10, M=4)
    assert fields.parameters() == {"poly": "x", "N": 10, "M": 4}


def test_missing_parameter() -> None:
    """Test that a missing required parameter is named."""
    with pytest.raises(ParameterError, match="image needs p"):
        RunConfig.build(command="image", poly="x^2+1")


def test_unexpected_parameter() -> None:
    """Test that parameters of other commands are refused."""
    with pytest.raises(ParameterError, match="image does not take k"):
        RunConfig.build(command="image", poly="x^2+1", p=7, k=2)


def test_seed_is_required() -> None:
    """Test that the random model never falls back to implicit entropy."""
    with pytest.raises(ParameterError, match="explicit --seed"):
        RunConfig.build(command="random-model", p=11, trials=5)


@pytest.mark.parametrize(
    "values",
    [
        {"command": "plot", "poly": "x"},
        {"command": "image", "poly": "x", "p": "seven"},
        {"command": "image", "poly": "x", "p": 7, "colour": "red"},
        {"command": "image", "poly": "x", "p": 7, "format": "xml"},
    ],
)
def test_invalid_values(values: dict) -> None:
    """Test unknown commands, wrong types, unknown keys and formats."""
    with pytest.raises(ParameterError) as excinfo:
        RunConfig.build(**values)
    assert isinstance(excinfo.value.__cause__, ValidationError)


def test_config_is_frozen() -> None:
    """Test that a validated configuration cannot be changed."""
    config = RunConfig.build(command="chebotarev", poly="x^2+1", z=100)
    with pytest.raises(ValidationError):
        config.z = 10


def test_every_command_has_a_parameter_table() -> None:
    """Test that each command lists at least one required parameter."""
    assert len(COMMAND_PARAMETERS) == 11
    for required, optional in COMMAND_PARAMETERS.values():
        assert required
        assert not required & optional
