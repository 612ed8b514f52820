from polyprod.core.arith import FactorMap
from polyprod.core.arith import factorize
from polyprod.core.arith import is_perfect_kth_power
from polyprod.core.arith import is_prime
from polyprod.core.arith import is_squarefree
from polyprod.core.arith import iter_primes
from polyprod.core.arith import jacobi
from polyprod.core.arith import legendre_table
from polyprod.core.arith import prime_pi
from polyprod.core.arith import primes_in
from polyprod.core.arith import squarefree_kernel


__all__ = [
    "FactorMap",
    "factorize",
    "is_perfect_kth_power",
    "is_prime",
    "is_squarefree",
    "iter_primes",
    "jacobi",
    "legendre_table",
    "prime_pi",
    "primes_in",
    "squarefree_kernel",
]
