"""Order-preserving parallel map over primes or trials."""

import logging
from concurrent.futures import ProcessPoolExecutor
from typing import Callable
from typing import Iterable
from typing import List
from typing import TypeVar


logger = logging.getLogger(__name__)

T = TypeVar("T")
R = TypeVar("R")

# Below this many items the pool start-up costs more than it saves.
MIN_PARALLEL_ITEMS = 64


def map_ordered(fn: Callable[[T], R], items: Iterable[T], threads: int = 1) -> List[R]:
    """Apply fn to every item and return the results in input order.

    Args:
        fn: A picklable (module-level or functools.partial) callable.
        items: The work items, typically primes.
        threads: Worker process count; 1 runs inline.

    Returns:
        List[R]: fn(item) for each item, in the same order as items.
    """
    work = list(items)
    if threads <= 1 or len(work) < MIN_PARALLEL_ITEMS:
        return [fn(item) for item in work]
    chunksize = max(1, len(work) // (threads * 8))
    logger.debug(f"Dispatching {len(work)} items to {threads} workers")
    with ProcessPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(fn, work, chunksize=chunksize))
