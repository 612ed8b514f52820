"""Command-line application for the polynomial product experiments.

Reports go to stdout (or --output); logs go to stderr and, when configured,
to a log file. Failures are written as a JSON error payload with exit code
2 for invalid input and 1 for runtime failures.
"""

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import Any
from typing import Dict
from typing import List
from typing import NoReturn
from typing import Optional
from typing import Sequence
from typing import Tuple

from polyprod import __version__
from polyprod.cli.commands import run
from polyprod.cli.emit import emit
from polyprod.cli.run_config import COMMAND_PARAMETERS
from polyprod.cli.run_config import RunConfig
from polyprod.configuration import Configuration
from polyprod.errors import CommandError
from polyprod.errors import ParameterError
from polyprod.errors import PolyprodError
from polyprod.errors import error_payload


logger = logging.getLogger(__name__)

LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"

EXIT_OK = 0
EXIT_RUNTIME_ERROR = 1
EXIT_PARAMETER_ERROR = 2

# parameter -> (flag, help)
PARAMETER_FLAGS: Dict[str, Tuple[str, str]] = {
    "poly": ("--poly", "polynomial, e.g. 'x^2+1' or 'coeffs:1,0,1'"),
    "p": ("--p", "prime modulus"),
    "x": ("--x", "upper limit for primes"),
    "N": ("--N", "window length or largest shift"),
    "M": ("--M", "window offset (default 0)"),
    "H": ("--H", "largest shift h"),
    "z": ("--z", "primes are taken from [z, 2z]"),
    "d": ("--d", "kernel or binomial degree"),
    "a": ("--a", "binomial constant, P = x^d - a"),
    "k": ("--k", "power exponent"),
    "l": ("--l", "second prime of the Jacobi modulus"),
    "n": ("--n", "shift length of f_n"),
    "trials": ("--trials", "number of random permutations"),
    "seed": ("--seed", "PRNG seed (required for random commands)"),
}

COMMAND_HELP = {
    "image": "orbit image of F_P(n) mod p",
    "missing-avg": "both sides of the averaged missing-value inequality",
    "sieve": "instrumented square sieve for one kernel d",
    "fields": "census of quadratic fields Q(sqrt(F_P(n)))",
    "powers": "n with F_P(n) a perfect k-th power",
    "weil": "character sum of P(n) modulo lp against the Weil bound",
    "chebotarev": "density of primes where P has no root",
    "exceptional": "primes where some F_h is a square polynomial",
    "random-model": "image fraction of random permutation products",
    "binomial-check": "discriminants of shifted binomial products mod q",
    "root-distance": "spread of the complex roots of f_n for x^d - a",
}


class _ArgumentParser(argparse.ArgumentParser):
    """ArgumentParser that raises instead of exiting, so errors become payloads."""

    def error(self, message: str) -> NoReturn:
        raise ParameterError(message)


def configure_logging(level: str = "INFO", log_file: Optional[str] = None) -> None:
    """Send logs to stderr, and to log_file when given."""
    handlers: List[logging.Handler] = [logging.StreamHandler(sys.stderr)]
    if log_file:
        handlers.append(logging.FileHandler(log_file))
    logging.basicConfig(
        level=level.upper(), format=LOG_FORMAT, handlers=handlers, force=True
    )


def _global_flags(parser: argparse.ArgumentParser, suppress: bool) -> None:
    def default(value: Any) -> Any:
        return argparse.SUPPRESS if suppress else value

    parser.add_argument(
        "--threads",
        type=int,
        default=default(None),
        help="worker processes (default: POLYPROD_THREADS or CPU count)",
    )
    parser.add_argument(
        "--output", default=default(None), help="write the report here, not stdout"
    )
    parser.add_argument("--format", choices=["json", "csv"], default=default("json"))
    parser.add_argument("--log-level", default=default(None))


def build_parser() -> argparse.ArgumentParser:
    """The argument parser with one subcommand per experiment."""
    parser = _ArgumentParser(
        prog="polyprod",
        description="Experiments on products of polynomial values modulo primes.",
        allow_abbrev=False,
    )
    parser.add_argument("--version", action="version", version=__version__)
    _global_flags(parser, suppress=False)
    common = _ArgumentParser(add_help=False)
    _global_flags(common, suppress=True)

    subparsers = parser.add_subparsers(dest="command", required=True)
    for command, (required, optional) in COMMAND_PARAMETERS.items():
        sub = subparsers.add_parser(
            command,
            parents=[common],
            help=COMMAND_HELP[command],
            allow_abbrev=False,
        )
        for name in sorted(required | optional):
            if name == "k_list":
                sub.add_argument(
                    "--k",
                    dest="k_list",
                    type=int,
                    nargs="+",
                    required=True,
                    help="values of k to check",
                )
                continue
            flag, text = PARAMETER_FLAGS[name]
            sub.add_argument(
                flag,
                dest=name,
                type=str if name == "poly" else int,
                required=name in required,
                help=text,
            )
    return parser


def _namespace_to_config(namespace: argparse.Namespace) -> RunConfig:
    values = {k: v for k, v in vars(namespace).items() if v is not None}
    values.pop("log_level", None)
    return RunConfig.build(**values)


class PolyprodApp:
    """Parses arguments, runs one command and writes the report."""

    def __init__(self, stdout: Any = None) -> None:
        self.stdout = stdout if stdout is not None else sys.stdout.buffer

    def _write(self, data: bytes, output: Optional[str]) -> None:
        if output:
            Path(output).write_bytes(data)
            logger.info(f"Report written to {output}")
        else:
            self.stdout.write(data)
            self.stdout.flush()

    def _fail(self, error: Exception, command: Optional[str]) -> int:
        payload = json.dumps(error_payload(error, command), sort_keys=True)
        self.stdout.write((payload + "\n").encode("utf-8"))
        self.stdout.flush()
        cause = error.cause if isinstance(error, CommandError) else error
        if isinstance(cause, ValueError):
            return EXIT_PARAMETER_ERROR
        return EXIT_RUNTIME_ERROR

    def run(self, argv: Optional[Sequence[str]] = None) -> int:
        """Run the command line and return the process exit code."""
        command: Optional[str] = None
        try:
            namespace = build_parser().parse_args(argv)
            command = namespace.command
            settings = Configuration.from_environment(
                threads=namespace.threads, log_level=namespace.log_level
            )
            configure_logging(settings.log_level, settings.log_file)
            config = _namespace_to_config(namespace)
            report = run(config, settings)
            self._write(emit(report, config.format), config.output)
        except (PolyprodError, ValueError, OSError) as e:
            logger.error(f"polyprod failed: {e}")
            return self._fail(e, command)
        return EXIT_OK


def main(argv: Optional[Sequence[str]] = None) -> None:
    """Entry point of the polyprod script."""
    raise SystemExit(PolyprodApp().run(argv))


if __name__ == "__main__":
    main()
