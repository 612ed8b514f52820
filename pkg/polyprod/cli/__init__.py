from polyprod.cli.commands import run
from polyprod.cli.emit import emit
from polyprod.cli.report import ExperimentReport
from polyprod.cli.run_config import RunConfig
from polyprod.polynomials.parser import parse_polynomial


__all__ = ["ExperimentReport", "RunConfig", "emit", "parse_polynomial", "run"]
