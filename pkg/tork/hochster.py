"""
`tork.hochster` computes the Betti table of `Q[K]` from Hochster's formula

    β^{-i,2j} = Σ_{W ⊆ [m], |W| = j} dim H̃^{j-i-1}(K_W; Q)

It shares no code with the Koszul engine beyond exact rank computation and is
used as an independent oracle for it.

A ghost vertex `v` contributes `β^{-1,2} = 1` through `K_{{v}} = {∅}` and
`H̃^{-1}({∅}) = Q`.
"""

import logging
from functools import partial
from multiprocessing import Pool

from .config import CONFIG
from .exceptions import OracleMismatchError,RejectedInputError
from .koszul import BettiTable,diff_tables
from .simplicial import SimplicialComplex,mask_to_vertices


LOGGER = logging.getLogger(__name__)

__all__ = (
    "hochster_betti",
    "subsets_in_order",
    "assert_oracle_agrees",
)



def subsets_in_order(m:int) -> list[int]:
    """Vertex subsets of [m] as masks, by increasing size then mask value."""
    return sorted(range(1 << m), key=lambda mask: (mask.bit_count(), mask))


def _subset_contribution(K:SimplicialComplex, W:int) -> list[tuple[int,int,int]]:
    j = W.bit_count()
    dims = K.full_subcomplex(mask_to_vertices(W)).reduced_cohomology_dims()
    return [(j - q - 1, j, dim) for q,dim in dims.items() if dim]


def hochster_betti(K:SimplicialComplex, cap:int|None=None, jobs:int=1) -> BettiTable:
    """Betti table of `Q[K]` summed over all full subcomplexes.

    Raises:
        RejectedInputError: if `K.m` exceeds `cap` (default `hochster_cap`)
    """
    cap = CONFIG["hochster_cap"] if cap is None else cap
    if K.m > cap:
        raise RejectedInputError(f"Hochster oracle is capped at m = {cap} (2^m full subcomplexes), got m = {K.m}")
    task = partial(_subset_contribution, K)
    subsets = subsets_in_order(K.m)
    if jobs > 1:
        with Pool(jobs) as pool:
            contributions = pool.map(task, subsets, chunksize=max(1, len(subsets) // (4*jobs)))
    else:
        contributions = map(task, subsets)

    entries : dict[tuple[int,int], int] = {}
    for cells in contributions:
        for i,j,dim in cells:
            entries[(i, j)] = entries.get((i, j), 0) + dim
    LOGGER.debug("hochster: m=%d, %d subsets, %d nonzero cells", K.m, len(subsets), len(entries))
    return BettiTable(m=K.m, j_max=K.m, entries=entries, origin="stanley_reisner", krull_dim=K.n)


def assert_oracle_agrees(koszul:BettiTable, oracle:BettiTable) -> None:
    """
    Raises:
        OracleMismatchError: if the two tables differ in any cell
    """
    if (cells := diff_tables(koszul, oracle)):
        raise OracleMismatchError(koszul, oracle, cells)
