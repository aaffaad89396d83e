"""
`cli.parallel` maps a function over inputs in worker processes and yields the
results in input order, so records are written in the same order for any
worker count.
"""

from multiprocessing import Pool
from typing import Callable,Iterable,Iterator,TypeVar


T = TypeVar("T")
R = TypeVar("R")



def ordered_map(func:Callable[[T], R], items:Iterable[T], processes:int=1, chunksize:int=4) -> Iterator[R]:
    """`map(func, items)` over `processes` workers; runs in-process when `processes == 1`."""
    if processes <= 1:
        yield from map(func, items)
        return
    with Pool(processes) as pool:
        yield from pool.imap(func, items, chunksize=chunksize)
