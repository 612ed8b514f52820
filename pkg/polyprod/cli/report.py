"""The envelope written for every command: parameters, results and a manifest."""

import hashlib
import json
import platform
from datetime import datetime
from typing import Any
from typing import Dict
from typing import List

import pytz
from pydantic import BaseModel
from pydantic import Field

from polyprod import __version__
from polyprod.cli.run_config import RunConfig


SCHEMA_VERSION = "1.0.0"


class RunManifest(BaseModel):
    package_version: str
    python_version: str
    threads: int
    parameters_sha256: str = Field(
        description="SHA-256 of the canonical JSON of the parameter echo."
    )


class ExperimentReport(BaseModel):
    """Serializable result of one command."""

    schema_version: str = Field(default=SCHEMA_VERSION)
    command: str
    parameters: Dict[str, Any] = Field(description="The validated parameters.")
    timestamp: str = Field(description="ISO-8601 UTC time the run finished.")
    results: Dict[str, Any] = Field(description="Command-specific payload.")
    warnings: List[str] = Field(default_factory=list)
    manifest: RunManifest


def parameters_digest(parameters: Dict[str, Any]) -> str:
    canonical = json.dumps(parameters, sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(canonical.encode("utf-8")).hexdigest()


def build_report(
    config: RunConfig, results: BaseModel, warnings: List[str], threads: int
) -> ExperimentReport:
    parameters = config.parameters()
    return ExperimentReport(
        command=config.command,
        parameters=parameters,
        timestamp=datetime.now(pytz.UTC).isoformat(),
        results=results.model_dump(),
        warnings=warnings,
        manifest=RunManifest(
            package_version=__version__,
            python_version=platform.python_version(),
            threads=threads,
            parameters_sha256=parameters_digest(parameters),
        ),
    )
