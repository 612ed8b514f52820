"""Dispatch from a RunConfig to the library operation behind each command."""

import logging
from contextlib import contextmanager
from typing import Callable
from typing import Dict
from typing import Iterator
from typing import List
from typing import Optional

from pydantic import BaseModel

from polyprod.cli.report import ExperimentReport
from polyprod.cli.report import build_report
from polyprod.cli.run_config import RunConfig
from polyprod.configuration import Configuration
from polyprod.dynamics import collision_witnesses
from polyprod.dynamics import image_stats
from polyprod.dynamics import missing_average
from polyprod.errors import CommandError
from polyprod.errors import PolyprodError
from polyprod.experiments import binomial_shift_check
from polyprod.experiments import chebotarev_census
from polyprod.experiments import exceptional_prime_census
from polyprod.experiments import find_power_solutions
from polyprod.experiments import random_permutation_model
from polyprod.experiments import root_distance_check
from polyprod.experiments import s_d_census
from polyprod.experiments import square_sieve
from polyprod.experiments import weil_ratio
from polyprod.polynomials.intpoly import IntPoly
from polyprod.polynomials.parser import parse_polynomial
from polyprod.products import orbit_mod


logger = logging.getLogger(__name__)

Handler = Callable[[RunConfig, Configuration], BaseModel]


def _poly(config: RunConfig) -> IntPoly:
    assert config.poly is not None
    return parse_polynomial(config.poly)


def _image(config: RunConfig, settings: Configuration) -> BaseModel:
    poly = _poly(config)
    orbit = orbit_mod(poly, config.p)
    stats = image_stats(poly, config.p, orbit=orbit)
    if config.N and stats.good:
        stats.collisions = collision_witnesses(
            poly,
            config.p,
            config.N,
            orbit=orbit,
            brute_threshold=settings.roots_brute_threshold,
        )
    return stats


def _missing_average(config: RunConfig, settings: Configuration) -> BaseModel:
    return missing_average(
        _poly(config),
        config.x,
        config.N,
        threads=settings.threads,
        brute_threshold=settings.roots_brute_threshold,
    )


def _sieve(config: RunConfig, settings: Configuration) -> BaseModel:
    return square_sieve(
        _poly(config),
        config.d,
        config.M or 0,
        config.N,
        config.H,
        config.z,
        threads=settings.threads,
        trial_bound=settings.trial_division_bound,
    )


def _fields(config: RunConfig, settings: Configuration) -> BaseModel:
    return s_d_census(
        _poly(config),
        config.M or 0,
        config.N,
        threads=settings.threads,
        kernel_digits_limit=settings.kernel_digits_limit,
        trial_bound=settings.trial_division_bound,
        rho_restarts=settings.rho_restarts,
        rho_max_steps=settings.rho_max_steps,
    )


def _powers(config: RunConfig, settings: Configuration) -> BaseModel:
    return find_power_solutions(
        _poly(config),
        config.k,
        config.N,
        threads=settings.threads,
        trial_bound=settings.trial_division_bound,
        rho_restarts=settings.rho_restarts,
        rho_max_steps=settings.rho_max_steps,
    )


def _weil(config: RunConfig, settings: Configuration) -> BaseModel:
    return weil_ratio(_poly(config), config.l, config.p, config.M or 0, config.N)


def _chebotarev(config: RunConfig, settings: Configuration) -> BaseModel:
    return chebotarev_census(_poly(config), config.z, threads=settings.threads)


def _exceptional(config: RunConfig, settings: Configuration) -> BaseModel:
    return exceptional_prime_census(_poly(config), config.H, config.x)


def _random_model(config: RunConfig, settings: Configuration) -> BaseModel:
    return random_permutation_model(
        config.p, config.trials, config.seed, threads=settings.threads
    )


def _binomial_check(config: RunConfig, settings: Configuration) -> BaseModel:
    return binomial_shift_check(config.d, config.a, config.k_list or [])


def _root_distance(config: RunConfig, settings: Configuration) -> BaseModel:
    return root_distance_check(
        config.d,
        config.a,
        config.n,
        settings.root_tolerance,
        settings.root_max_iterations,
    )


HANDLERS: Dict[str, Handler] = {
    "image": _image,
    "missing-avg": _missing_average,
    "sieve": _sieve,
    "fields": _fields,
    "powers": _powers,
    "weil": _weil,
    "chebotarev": _chebotarev,
    "exceptional": _exceptional,
    "random-model": _random_model,
    "binomial-check": _binomial_check,
    "root-distance": _root_distance,
}


class WarningCollector(logging.Handler):
    """Keeps the WARNING records emitted under the polyprod logger."""

    def __init__(self) -> None:
        super().__init__(level=logging.WARNING)
        self.messages: List[str] = []

    def emit(self, record: logging.LogRecord) -> None:
        self.messages.append(record.getMessage())


@contextmanager
def collect_warnings() -> Iterator[WarningCollector]:
    collector = WarningCollector()
    root = logging.getLogger("polyprod")
    root.addHandler(collector)
    try:
        yield collector
    finally:
        root.removeHandler(collector)


def run(
    config: RunConfig, settings: Optional[Configuration] = None
) -> ExperimentReport:
    """Execute one command and wrap its result in an ExperimentReport.

    Args:
        config: The validated command and parameters.
        settings: Tunables; read from the environment when omitted. A thread
            count in config wins over the one in settings.

    Returns:
        ExperimentReport: Parameters, results, warnings and run manifest.

    Raises:
        CommandError: Wrapping any library failure with the command name.
    """
    settings = (settings or Configuration.from_environment()).with_threads(
        config.threads
    )
    logger.info(f"Running {config.command} with {config.parameters()}")
    with collect_warnings() as collector:
        try:
            results = HANDLERS[config.command](config, settings)
        except (PolyprodError, ValueError, ArithmeticError) as e:
            logger.error(f"{config.command} failed: {e}")
            raise CommandError(config.command, e) from e
    logger.info(f"Finished {config.command}")
    return build_report(config, results, collector.messages, settings.threads)
