import heapq
import logging
from concurrent.futures import ProcessPoolExecutor, as_completed
from typing import Callable, Iterable, Iterator, TypeVar
from trapezoids.core import Trapezoid

logger = logging.getLogger(__name__)

T = TypeVar('T')


def parse_partition(text: str) -> tuple[int, int]:
    """'i/p' -> (i, p) with 0 <= i < p."""
    index, _, parts = text.partition('/')
    try:
        index, parts = int(index), int(parts)
    except ValueError:
        raise ValueError(f'Partition must look like "i/p", got {text!r}') from None
    if parts < 1 or not 0 <= index < parts:
        raise ValueError(f'Partition index must satisfy 0 <= i < p, got {text!r}')
    return index, parts


def run_sharded(func: Callable[..., T], args: tuple, workers: int = 1) -> list[T]:
    """Run ``func(*args, (i, workers))`` for every shard i, in worker processes
    when ``workers > 1``. Results come back in shard order whatever order the
    workers finish in.
    """
    if workers <= 1:
        return [func(*args, (0, 1))]
    results: list = [None] * workers
    with ProcessPoolExecutor(max_workers=workers) as executor:
        futures = {
            executor.submit(func, *args, (index, workers)): index
            for index in range(workers)
        }
        for future in as_completed(futures):
            index = futures[future]
            try:
                results[index] = future.result()
            except Exception as e:
                logger.exception(f'Shard {index}/{workers} of {func.__name__} failed: {e}')
                raise
            logger.debug(f'Shard {index}/{workers} of {func.__name__} done')
    return results


def merge_canonical(streams: Iterable[Iterable[Trapezoid]]) -> Iterator[Trapezoid]:
    """Interleave shard streams back into the family's canonical order."""
    return heapq.merge(*streams, key=lambda trapezoid: trapezoid.sort_key())
