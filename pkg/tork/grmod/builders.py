"""
`grmod.builders` constructs graded modules:

- `point_module`: the residue field Q
- `monomial_quotient`: degree-truncated `S(m)/I` for a monomial ideal `I`
- `stanley_reisner`: degree-truncated Stanley-Reisner ring `Q[K]`
- `dual_module`: `M* = hom_Q(M, Q)` with reversed levels
- `random_artinian_module`: reproducible random finite-dimensional modules

Monomial bases are graded-lexicographic with the smallest variable first: the
degree-t monomials are listed in the order of
`itertools.combinations_with_replacement(range(m), t)`, so for m = 2 and t = 2
the basis is `v1², v1v2, v2²`.
"""

import itertools
import logging
import random
from fractions import Fraction
from typing import Callable,Sequence

from ..exactla import SparseRationalMatrix
from ..exceptions import RejectedInputError
from ..simplicial import SimplicialComplex
from .module import GradedModule,Origin


LOGGER = logging.getLogger(__name__)

Exponents = tuple[int, ...]



def monomials(m:int, t:int) -> list[Exponents]:
    """Exponent vectors of all degree-t monomials in m variables, in basis order."""
    result = []
    for combo in itertools.combinations_with_replacement(range(m), t):
        exponents = [0] * m
        for i in combo:
            exponents[i] += 1
        result.append(tuple(exponents))
    return result


def _divides(a:Exponents, b:Exponents) -> bool:
    return all(x <= y for x,y in zip(a, b))


def _monomial_module(
        m:int,
        t_max:int,
        survives:Callable[[Exponents], bool],
        origin:Origin,
        krull_dim:int,
        tor_bound:int,
    ) -> GradedModule:
    basis = [[a for a in monomials(m, t) if survives(a)] for t in range(t_max+1)]
    truncated = any(survives(a) for a in monomials(m, t_max+1))
    mult = {}
    for t in range(t_max):
        target = {a:row for row,a in enumerate(basis[t+1])}
        for i in range(m):
            entries = []
            for col,a in enumerate(basis[t]):
                product = a[:i] + (a[i]+1,) + a[i+1:]
                row = target.get(product)
                if row is not None:
                    entries.append((row, col, 1))
            mult[(i, t)] = SparseRationalMatrix(len(basis[t+1]), len(basis[t]), entries)
    return GradedModule(
        m = m,
        levels = tuple(len(b) for b in basis),
        mult = mult,
        basis = tuple(tuple(b) for b in basis),
        origin = origin,
        truncated = truncated,
        krull_dim = krull_dim if truncated else (0 if basis[0] else -1),
        tor_bound = tor_bound if truncated else None,
    )


def _monomial_krull_dim(m:int, generators:Sequence[Exponents]) -> int:
    # largest variable set T such that no generator is supported inside T
    supports = [sum(1 << i for i,e in enumerate(g) if e) for g in generators]
    for size in range(m, -1, -1):
        for combo in itertools.combinations(range(m), size):
            mask = sum(1 << i for i in combo)
            if not any(s & ~mask == 0 for s in supports):
                return size
    return -1


def point_module(m:int) -> GradedModule:
    """The residue field Q: one level of dimension 1, every variable acts as 0."""
    return GradedModule(m=m, levels=(1,), basis=((tuple([0]*m),),))


def monomial_quotient(m:int, generators:Sequence[Sequence[int]], t_max:int) -> GradedModule:
    """Levels `0..t_max` of `S(m)/(generators)`.

    Args:
        m (int): number of variables
        generators (list[list[int]]): nonzero exponent vectors of length m
        t_max (int): last level kept

    Raises:
        RejectedInputError: for a zero or wrongly sized exponent vector
    """
    if m < 0 or t_max < 0:
        raise RejectedInputError(f"m and t_max must be non-negative, got m={m}, t_max={t_max}")
    gens = []
    for g in generators:
        g = tuple(g)
        if len(g) != m or any(e < 0 for e in g) or not any(g):
            raise RejectedInputError(f"`{list(g)}` is not a nonzero exponent vector of length {m}")
        gens.append(g)
    return _monomial_module(
        m, t_max,
        survives = lambda a: not any(_divides(g, a) for g in gens),
        origin = "monomial",
        krull_dim = _monomial_krull_dim(m, gens),
        tor_bound = sum(max((g[i] for g in gens), default=0) for i in range(m)),
    )


def stanley_reisner(K:SimplicialComplex, t_max:int) -> GradedModule:
    """Levels `0..t_max` of `Q[K] = S(m)/I_SR`: monomials whose support is a face of K."""
    if t_max < 1:
        raise RejectedInputError(f"t_max must be at least 1, got {t_max}")
    faces = K.faces

    def survives(a:Exponents) -> bool:
        return sum(1 << i for i,e in enumerate(a) if e) in faces

    # every minimal non-face is squarefree, so the lcm degree is the size of their union
    tor_bound = len(set().union(*K.minimal_non_faces()))
    return _monomial_module(K.m, t_max, survives, origin="stanley_reisner", krull_dim=K.n, tor_bound=tor_bound)


def dual_module(M:GradedModule) -> GradedModule:
    """`M* = hom_Q(M, Q)`, graded so that the top nonzero level of M becomes level 0.

    Level `t'` of M* is the dual of level `T - t'` of M, and multiplication by
    `v_i` on M* is the transpose of multiplication by `v_i` on M. Levels of M
    above its top nonzero level are dropped; `(M*)*` equals M shifted down by
    the lowest nonzero level of M.
    """
    top = M.top_level
    if top < 0:
        return GradedModule(m=M.m, levels=(0,))
    mult = {}
    for t in range(top):
        source = top - t - 1
        for i in range(M.m):
            if (i, source) in M.mult:
                mult[(i, t)] = M.mult[(i, source)].transpose()
    return GradedModule(
        m = M.m,
        levels = tuple(M.levels[top - t] for t in range(top+1)),
        mult = mult,
    )


def quotient_top_level(M:GradedModule, w:Sequence[Fraction]) -> GradedModule:
    """Quotient of M by the span of the vector `w` in its top nonzero level.

    Every subspace of the top level is a submodule since all variables act
    on it as zero. The basis of the quotient level is the old basis without
    the first index `p` with `w[p] != 0`.
    """
    top = M.top_level
    if top < 0 or len(w) != M.levels[top] or not any(w):
        raise RejectedInputError("`w` must be a nonzero vector of the top level")
    d = M.levels[top]
    p = next(k for k,value in enumerate(w) if value)
    keep = [k for k in range(d) if k != p]
    entries = [(row, k, 1) for row,k in enumerate(keep)]
    entries += [(row, p, -Fraction(w[k]) / Fraction(w[p])) for row,k in enumerate(keep)]
    projection = SparseRationalMatrix(d-1, d, entries)
    mult = {(i,t):matrix for (i,t),matrix in M.mult.items() if t < top - 1}
    if top >= 1:
        for i in range(M.m):
            mult[(i, top-1)] = projection.compose(M.operator(i, top-1))
    return GradedModule(
        m = M.m,
        levels = M.levels[:top] + (d-1,),
        mult = mult,
    )


def random_artinian_module(m:int, seed:int, max_level:int) -> GradedModule:
    """Reproducible random finite-dimensional cyclic module with levels `0..max_level`.

    The module is `S(m)/I` where `I` contains every monomial of degree
    `max_level + 1` and a random set of lower-degree monomials. Half of the
    time, when the top level has dimension at least 2, it is further divided by
    a random rational vector of the top level.
    """
    if max_level < 1:
        raise RejectedInputError(f"max_level must be at least 1, got {max_level}")
    if m == 0:
        return point_module(0)
    rng = random.Random(seed)
    density = rng.choice([0.0, 0.1, 0.2, 0.35])
    generators = list(monomials(m, max_level+1))
    for t in range(1, max_level+1):
        generators += [a for a in monomials(m, t) if rng.random() < density]
    M = monomial_quotient(m, generators, max_level)

    top = M.top_level
    if top >= 1 and M.levels[top] >= 2 and rng.random() < 0.5:
        w = [Fraction(rng.randint(-3, 3), rng.randint(1, 3)) for _ in range(M.levels[top])]
        if not any(w):
            w[rng.randrange(len(w))] = Fraction(1)
        M = quotient_top_level(M, w)
        LOGGER.debug("random module (m=%d, seed=%d) divided by a top-level vector", m, seed)
    return M
