"""Image size of partial products of a random permutation of the units mod p.

This is the random stand-in for n! mod p: the ordered values 1..p-1 are
replaced by a uniform permutation pi and the partial products
pi(1) pi(2) ... pi(n) mod p are collected. The image fraction concentrates
near 1 - 1/e.
"""

import logging
from functools import partial
from math import e

import numpy as np

from polyprod.core.arith import is_prime
from polyprod.experiments.reports import RandomModelReport
from polyprod.parallel import map_ordered


logger = logging.getLogger(__name__)

GENERATOR = "PCG64"
TARGET = 1 - 1 / e


def _trial(seed_sequence: np.random.SeedSequence, p: int) -> float:
    rng = np.random.Generator(np.random.PCG64(seed_sequence))
    perm = rng.permutation(np.arange(1, p, dtype=np.int64))
    seen = np.zeros(p, dtype=bool)
    acc = 1
    for value in perm.tolist():
        acc = acc * value % p
        seen[acc] = True
    return int(seen.sum()) / (p - 1)


def random_permutation_model(
    p: int, trials: int, seed: int, *, threads: int = 1
) -> RandomModelReport:
    """Mean and standard deviation of the image fraction over seeded trials.

    Each trial draws from its own child of SeedSequence(seed), so the report
    does not depend on the thread count.

    Raises:
        ValueError: If p < 5, p is not prime, or trials < 1.
    """
    if p < 5 or not is_prime(p):
        raise ValueError(f"p must be a prime >= 5, got {p}")
    if trials < 1:
        raise ValueError(f"trials must be at least 1, got {trials}")
    children = np.random.SeedSequence(seed).spawn(trials)
    fractions = np.array(map_ordered(partial(_trial, p=p), children, threads))
    mean = float(fractions.mean())
    stddev = float(fractions.std(ddof=1)) if trials > 1 else 0.0
    logger.info(f"Random model p={p}: mean {mean:.4f} over {trials} trials")
    return RandomModelReport(
        p=p,
        trials=trials,
        seed=seed,
        generator=GENERATOR,
        mean_image_fraction=mean,
        stddev=stddev,
        target=TARGET,
    )
