"""Validated parameters of one command-line invocation."""

from typing import Any
from typing import Dict
from typing import FrozenSet
from typing import List
from typing import Literal
from typing import Optional
from typing import Tuple

from pydantic import BaseModel
from pydantic import ConfigDict
from pydantic import Field
from pydantic import ValidationError
from pydantic import model_validator

from polyprod.errors import ParameterError


Command = Literal[
    "image",
    "missing-avg",
    "sieve",
    "fields",
    "powers",
    "weil",
    "chebotarev",
    "exceptional",
    "random-model",
    "binomial-check",
    "root-distance",
]

# command -> (required parameters, optional parameters)
COMMAND_PARAMETERS: Dict[str, Tuple[FrozenSet[str], FrozenSet[str]]] = {
    "image": (frozenset({"poly", "p"}), frozenset({"N"})),
    "missing-avg": (frozenset({"poly", "x", "N"}), frozenset()),
    "sieve": (frozenset({"poly", "d", "N"}), frozenset({"M", "H", "z"})),
    "fields": (frozenset({"poly", "N"}), frozenset({"M"})),
    "powers": (frozenset({"poly", "k", "N"}), frozenset()),
    "weil": (frozenset({"poly", "l", "p", "N"}), frozenset({"M"})),
    "chebotarev": (frozenset({"poly", "z"}), frozenset()),
    "exceptional": (frozenset({"poly", "H", "x"}), frozenset()),
    "random-model": (frozenset({"p", "trials", "seed"}), frozenset()),
    "binomial-check": (frozenset({"d", "a", "k_list"}), frozenset()),
    "root-distance": (frozenset({"d", "a", "n"}), frozenset()),
}

OUTPUT_FIELDS = frozenset({"command", "output", "format", "threads"})


class RunConfig(BaseModel):
    """One command and exactly the parameters it accepts."""

    model_config = ConfigDict(extra="forbid", frozen=True)

    command: Command
    poly: Optional[str] = Field(default=None, description="Polynomial text.")
    p: Optional[int] = None
    x: Optional[int] = None
    N: Optional[int] = None
    M: Optional[int] = None
    H: Optional[int] = None
    z: Optional[int] = None
    d: Optional[int] = None
    a: Optional[int] = None
    k: Optional[int] = None
    k_list: Optional[List[int]] = None
    l: Optional[int] = None  # noqa: E741
    n: Optional[int] = None
    trials: Optional[int] = None
    seed: Optional[int] = None
    output: Optional[str] = Field(default=None, description="Path, or stdout.")
    format: Literal["json", "csv"] = "json"
    threads: Optional[int] = None

    @model_validator(mode="after")
    def _check_parameter_subset(self) -> "RunConfig":
        required, optional = COMMAND_PARAMETERS[self.command]
        given = set(self.parameters())
        missing = sorted(required - given)
        if missing:
            if "seed" in missing:
                raise ValueError(
                    f"{self.command} needs an explicit --seed; "
                    "there is no implicit entropy source"
                )
            raise ValueError(f"{self.command} needs {', '.join(missing)}")
        unexpected = sorted(given - required - optional)
        if unexpected:
            raise ValueError(f"{self.command} does not take {', '.join(unexpected)}")
        return self

    def parameters(self) -> Dict[str, Any]:
        """The command parameters that were given, in field order."""
        return {
            name: value
            for name, value in self.model_dump().items()
            if name not in OUTPUT_FIELDS and value is not None
        }

    @classmethod
    def build(cls, **values: Any) -> "RunConfig":
        """Validate values into a RunConfig.

        Raises:
            ParameterError: If a parameter is missing, unknown or mistyped.
        """
        try:
            return cls(**values)
        except ValidationError as e:
            messages = "; ".join(_describe(err) for err in e.errors())
            raise ParameterError(messages) from e


def _describe(error: Dict[str, Any]) -> str:
    location = ".".join(str(part) for part in error.get("loc", ()))
    return f"{location}: {error['msg']}" if location else error["msg"]
