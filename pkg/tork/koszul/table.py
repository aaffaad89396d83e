"""
`koszul.table` computes bigraded Betti tables and the numbers derived from them.

An entry `(i, j)` of a `BettiTable` is `β^{-i,2j} = dim Tor^{-i,2j}_{S(m)}(M, Q)`;
its topological degree is `2j - i`. Files carry the even index `2j` as `j2`.
"""

import logging
from fractions import Fraction
from functools import partial
from multiprocessing import Pool

from pydantic import BaseModel,ConfigDict,Field,ValidationError,model_validator

from ..config import CONFIG
from ..exceptions import RejectedInputError,SchemaError
from ..grmod import GradedModule,validate
from ..grmod.module import Origin
from .strand import build_strand


LOGGER = logging.getLogger(__name__)



class BettiTable(BaseModel):
    """
    Bigraded Betti numbers of a module over `S(m)`.

    Only nonzero entries are stored. `origin` and `krull_dim` are copied from
    the module the table was computed from and drive the applicability of the
    inequality suites: `krull_dim == 0` means the module is finite-dimensional.
    `complete` is False when the module was truncated below the last strand
    that can carry Tor, so some entries of the module it stands for are missing.
    """
    model_config = ConfigDict(frozen=True)

    m: int = Field(ge=0)
    j_max: int
    entries: dict[tuple[int,int], int] = {}
    origin: Origin = "module"
    krull_dim: int | None = None
    complete: bool = True

    def beta(self, i:int, j:int) -> int:
        return self.entries.get((i, j), 0)

    def is_zero(self) -> bool:
        return not self.entries

    @property
    def finite(self) -> bool:
        return self.krull_dim == 0 and self.complete

    def to_json(self) -> dict:
        return {
            "m": self.m,
            "j_max": self.j_max,
            "origin": self.origin,
            "krull_dim": self.krull_dim,
            "complete": self.complete,
            "entries": [
                {"i": i, "j2": 2*j, "beta": beta}
                for (i,j),beta in sorted(self.entries.items())
            ],
        }

    @classmethod
    def from_json(cls, data:dict) -> "BettiTable":
        try:
            parsed = _TableFile.model_validate(data)
        except ValidationError as e:
            raise SchemaError(f"invalid Betti table: {e}") from None
        entries = {}
        for cell in parsed.entries:
            if cell.j2 % 2:
                raise SchemaError(f"invalid Betti table: odd internal degree {cell.j2}")
            if cell.beta:
                entries[(cell.i, cell.j2 // 2)] = cell.beta
        j_max = parsed.j_max if parsed.j_max is not None else max((j for _,j in entries), default=0)
        return cls(m=parsed.m, j_max=j_max, entries=entries, origin=parsed.origin, krull_dim=parsed.krull_dim, complete=parsed.complete)

    def to_tsv(self) -> str:
        lines = ["i\t2j\tbeta"]
        lines += [f"{i}\t{2*j}\t{beta}" for (i,j),beta in sorted(self.entries.items())]
        return "\n".join(lines) + "\n"

    def render(self) -> str:
        """Text table: columns are `i`, rows are `j - i`, zeros shown as `.`."""
        if not self.entries:
            return "total: 0\n"
        width = max(len(str(b)) for b in self.entries.values())
        columns = range(max(i for i,_ in self.entries) + 1)
        totals = total_betti(self)
        width = max(width, *(len(str(t)) for t in totals), *(len(str(i)) for i in columns))
        rows = sorted({j - i for i,j in self.entries})
        label = max(6, *(len(f"{r}:") for r in rows))
        lines = [" " * label + " " + " ".join(f"{i:>{width}}" for i in columns)]
        lines.append(f"{'total:':>{label}} " + " ".join(f"{totals[i]:>{width}}" for i in columns))
        for r in range(rows[0], rows[-1] + 1):
            cells = [self.beta(i, i + r) or "." for i in columns]
            lines.append(f"{f'{r}:':>{label}} " + " ".join(f"{c:>{width}}" for c in cells))
        return "\n".join(lines) + "\n"


class _TableCell(BaseModel):
    i: int = Field(ge=0)
    j2: int = Field(ge=0)
    beta: int = Field(ge=0)


class _TableFile(BaseModel):
    m: int = Field(ge=0)
    j_max: int | None = None
    origin: Origin = "module"
    krull_dim: int | None = None
    complete: bool = True
    entries: list[_TableCell]

    @model_validator(mode="after")
    def _check_homological_degrees(self):
        if (wide := [cell.i for cell in self.entries if cell.i > self.m]):
            raise ValueError(f"homological degree {max(wide)} exceeds m = {self.m}")
        return self



def default_j_max(M:GradedModule) -> int:
    """Last strand that can carry homology of the module M stands for.

    A truncated module stands for an infinite one and is exact only up to its
    last level; otherwise every strand above `top_level + m` is exact.
    """
    if M.truncated:
        return M.last_level
    return M.top_level + M.m


def _strand_homology(M:GradedModule, verify:bool, j:int) -> tuple[int, tuple[int, ...]]:
    strand = build_strand(M, j)
    if verify:
        strand.verify()
    homology = strand.homology_dims()
    LOGGER.debug("strand j=%d: dims=%s betti=%s", j, strand.dims, homology)
    return j, homology


def betti_table(
        M:GradedModule,
        j_max:int|None=None,
        jobs:int=1,
        verify:bool|None=None,
        check:bool=True,
    ) -> BettiTable:
    """Betti table of M from Koszul homology, strands `j = 0..j_max`.

    Args:
        M (GradedModule): a valid module
        j_max (int, optional): last strand, defaults to `default_j_max(M)`
        jobs (int): strands are spread over this many worker processes when > 1
        verify (bool, optional): assert `d∘d = 0` on every strand, defaults to
            the `verify_differentials` setting
        check (bool): validate M first; builders already guarantee validity

    Raises:
        RejectedInputError: if M breaks a module invariant
        ChainComplexError: if a strand is not a complex
    """
    if check and (violations := validate(M)):
        raise RejectedInputError(f"invalid module: {violations[0]}")
    if j_max is None:
        j_max = default_j_max(M)
    elif M.truncated and j_max > M.last_level:
        LOGGER.warning(
            "strands above level %d of a truncated module describe the truncation, not %s",
            M.last_level, M.origin,
        )
    verify = CONFIG["verify_differentials"] if verify is None else verify
    task = partial(_strand_homology, M, verify)
    strands = range(j_max + 1)
    if jobs > 1 and j_max > 0:
        with Pool(min(jobs, j_max + 1)) as pool:
            results = pool.map(task, strands)
    else:
        results = map(task, strands)

    entries = {}
    for j,homology in results:
        for i,beta in enumerate(homology):
            if beta:
                entries[(i, j)] = beta
    complete = not M.truncated or (M.tor_bound is not None and M.tor_bound <= j_max <= M.last_level)
    if not complete:
        LOGGER.info("table of %s is incomplete: strands stop at %d, Tor can reach strand %s", M, j_max, M.tor_bound)
    return BettiTable(
        m = M.m,
        j_max = max(j_max, 0),
        entries = entries,
        origin = M.origin,
        krull_dim = M.krull_dim,
        complete = complete,
    )


def diff_tables(a:BettiTable, b:BettiTable) -> list[tuple[int,int,int,int]]:
    """Cells `(i, j, a, b)` where the two tables differ, sorted by `(i, j)`."""
    cells = sorted(set(a.entries) | set(b.entries))
    return [(i, j, a.beta(i, j), b.beta(i, j)) for i,j in cells if a.beta(i, j) != b.beta(i, j)]


def total_betti(B:BettiTable) -> list[int]:
    """`β^{-i} = Σ_j β^{-i,2j}` for `i = 0..m`."""
    totals = [0] * (B.m + 1)
    for (i,_),beta in B.entries.items():
        totals[i] += beta
    return totals


def hrk(B:BettiTable) -> int:
    """Total rank `Σ β^{-i,2j}`, the homological rank of the moment-angle complex for `Q[K]`."""
    return sum(B.entries.values())


def poincare_vector(B:BettiTable) -> list[int]:
    """`dim H^k = Σ_{2j-i=k} β^{-i,2j}` for `k = 0..max degree`."""
    if not B.entries:
        return []
    vector = [0] * (max(2*j - i for i,j in B.entries) + 1)
    for (i,j),beta in B.entries.items():
        vector[2*j - i] += beta
    return vector


def projective_dimension(B:BettiTable) -> int:
    """Top homological degree `i` with `β^{-i} > 0`.

    Raises:
        RejectedInputError: for the zero table
    """
    if B.is_zero():
        raise RejectedInputError("the projective dimension of the zero module is undefined")
    return max(i for i,_ in B.entries)


def euler_characteristic(B:BettiTable) -> int:
    return sum((-1)**i * beta for i,beta in enumerate(total_betti(B)))


def hrk_ratio(B:BettiTable, n:int) -> Fraction:
    """`hrk / 2^{m-n}` as an exact rational."""
    if not 0 <= n <= B.m:
        raise RejectedInputError(f"n must be in 0..{B.m}, got {n}")
    return Fraction(hrk(B), 2 ** (B.m - n))
