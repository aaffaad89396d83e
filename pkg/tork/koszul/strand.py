"""
`koszul.strand` builds one strand of the Koszul complex `M ⊗ Λ(u_1, ..., u_m)`.

With `u_i` in bidegree (-1, 2) the differential preserves the second grading,
so the complex splits into strands: strand `j` has `C^{-i} = M_{j-i} ⊗ Λ^i` for
`i = 0..min(j, m)`. The basis of `C^{-i}` is subset-major: the element
`x_b ⊗ u_S` has index `position(S) * dim(M_{j-i}) + b`, subsets `S` of size
`i` in lexicographic order of their sorted tuples.
"""

import itertools
import logging
from functools import cached_property
from math import comb

from pydantic import BaseModel,ConfigDict

from ..config import CONFIG
from ..exactla import SparseRationalMatrix
from ..exceptions import ChainComplexError,RejectedInputError
from ..grmod import GradedModule,validate


LOGGER = logging.getLogger(__name__)



class KoszulStrand(BaseModel):
    """
    Strand `j` of the Koszul complex.

    `dims[i]` is the dimension of `C^{-i}` and `differentials[i-1]` is
    `d_i : C^{-i} -> C^{-(i-1)}` for `i >= 1`.
    """
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    m: int
    j: int
    dims: tuple[int, ...]
    differentials: tuple[SparseRationalMatrix, ...]

    def differential(self, i:int) -> SparseRationalMatrix:
        """`d_i`, the zero map outside `1..len(dims)-1`."""
        if 1 <= i < len(self.dims):
            return self.differentials[i-1]
        source = self.dims[i] if 0 <= i < len(self.dims) else 0
        target = self.dims[i-1] if 0 <= i-1 < len(self.dims) else 0
        return SparseRationalMatrix.zero(target, source)

    @cached_property
    def ranks(self) -> tuple[int, ...]:
        """`rank(d_i)` for `i = 0..len(dims)`, with `d_0` and the last entry zero."""
        return (0,) + tuple(d.rank() for d in self.differentials) + (0,)

    def homology_dims(self) -> tuple[int, ...]:
        """`β^{-i,2j} = nullity(d_i) - rank(d_{i+1})` for `i = 0..len(dims)-1`."""
        return tuple(self.dims[i] - self.ranks[i] - self.ranks[i+1] for i in range(len(self.dims)))

    def euler_characteristic(self) -> int:
        return sum((-1)**i * dim for i,dim in enumerate(self.dims))

    def verify(self) -> None:
        """Asserts `d_i ∘ d_{i+1} = 0` exactly.

        Raises:
            ChainComplexError: on the first nonzero composite
        """
        for i in range(1, len(self.differentials)):
            square = self.differentials[i-1].compose(self.differentials[i])
            if not square.is_zero():
                raise ChainComplexError(
                    f"strand j={self.j}: d_{i}∘d_{i+1} has {square.nnz} nonzero entries"
                )



def _subsets(m:int, size:int) -> list[tuple[int, ...]]:
    return list(itertools.combinations(range(m), size))


def build_strand(M:GradedModule, j:int) -> KoszulStrand:
    """Strand `j` of `M ⊗ Λ`, without validating M."""
    m = M.m
    top = min(j, m)
    dims = tuple(M.dim(j-i) * comb(m, i) for i in range(top+1))
    differentials = []
    for i in range(1, top+1):
        source_dim = M.dim(j-i)
        target_dim = M.dim(j-i+1)
        targets = {S:k for k,S in enumerate(_subsets(m, i-1))}
        entries = []
        if source_dim and target_dim:
            operators = [M.operator(s, j-i) for s in range(m)]
            for position,S in enumerate(_subsets(m, i)):
                for k,s in enumerate(S):
                    sign = -1 if k % 2 else 1
                    offset = targets[S[:k] + S[k+1:]] * target_dim
                    operator = operators[s]
                    for b in range(source_dim):
                        col = position*source_dim + b
                        for r,value in operator.column(b):
                            entries.append((offset + r, col, sign*value))
        differentials.append(SparseRationalMatrix(dims[i-1], dims[i], entries))
    return KoszulStrand(m=m, j=j, dims=dims, differentials=tuple(differentials))


def strand(M:GradedModule, j:int) -> KoszulStrand:
    """Strand `j` of the Koszul complex of M.

    Raises:
        RejectedInputError: if M is invalid or `j` is outside `0..top_level + m`
    """
    if (violations := validate(M)):
        raise RejectedInputError(f"invalid module: {violations[0]}")
    if not 0 <= j <= M.top_level + M.m:
        raise RejectedInputError(f"strand index j={j} is outside 0..{M.top_level + M.m}")
    result = build_strand(M, j)
    if CONFIG["verify_differentials"]:
        result.verify()
    return result
