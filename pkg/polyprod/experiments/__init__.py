from polyprod.experiments.binomial import binomial_shift_check
from polyprod.experiments.chebotarev import chebotarev_census
from polyprod.experiments.exceptional import exceptional_prime_census
from polyprod.experiments.powers import find_power_solutions
from polyprod.experiments.powers import s_d_census
from polyprod.experiments.random_model import random_permutation_model
from polyprod.experiments.roots import root_distance_check
from polyprod.experiments.sieve import square_sieve
from polyprod.experiments.weil import weil_grid
from polyprod.experiments.weil import weil_ratio


__all__ = [
    "binomial_shift_check",
    "chebotarev_census",
    "exceptional_prime_census",
    "find_power_solutions",
    "random_permutation_model",
    "root_distance_check",
    "s_d_census",
    "square_sieve",
    "weil_grid",
    "weil_ratio",
]
