"""
`conjectures.suites` checks Betti tables against the lower bounds known or
conjectured for them.

Every check returns a `CheckReport`. A check whose hypothesis does not hold for
the table (a module that is not finite-dimensional, m too small, a module that
is not a monomial quotient, a table cut off by a truncation) still records its
rows but reports "na".

Proved bounds: `corners`, `parity`, `ab`, `eg`, `trk`, `duality`, `euler`.
Conjectural bounds: `horrocks`, `weak`.
"""

import logging
from fractions import Fraction
from math import ceil,comb
from typing import Callable

from ..exceptions import RejectedInputError
from ..grmod import GradedModule,dual_module
from ..koszul import (
    BettiTable,
    betti_table,
    euler_characteristic,
    hrk,
    projective_dimension,
    total_betti,
)
from .report import CheckReport,CheckRow


LOGGER = logging.getLogger(__name__)



def _analogue_rows(B:BettiTable, totals:list[int]) -> list[CheckRow]:
    # Evans-Griffith form with n = pd, the honest analogue when pd < m
    if B.is_zero():
        return []
    pd = projective_dimension(B)
    return [CheckRow.at_least(f"analogue:i={i}", totals[i], comb(pd, i)) for i in range(pd+1)]


def check_horrocks(B:BettiTable) -> CheckReport:
    """`β^{-i} >= C(m, i)` for `i = 0..m`, conjectured for finite-dimensional modules."""
    totals = total_betti(B)
    rows = [CheckRow.at_least(f"i={i}", totals[i], comb(B.m, i)) for i in range(B.m+1)]
    params = {"hypothesis": "dim M < oo"}
    if not B.finite:
        rows += _analogue_rows(B, totals)
    elif B.m <= 4:
        params["expected"] = True
    report = CheckReport(suite="horrocks", proved=False, applicable=B.finite, params=params, rows=rows)
    if report.overall == "fail" and B.m <= 4:
        LOGGER.warning(
            "Horrocks bound fails for m=%d at %s; it is expected to hold for m <= 4",
            B.m, ", ".join(row.id for row in report.failing_rows()),
        )
    return report


def check_weak_horrocks(B:BettiTable) -> CheckReport:
    """`hrk >= 2^m`, conjectured for finite-dimensional modules."""
    rows = [CheckRow.at_least("hrk", hrk(B), 2 ** B.m)]
    if not B.finite and not B.is_zero():
        rows.append(CheckRow.at_least("analogue:hrk", hrk(B), 2 ** projective_dimension(B)))
    return CheckReport(suite="weak", proved=False, applicable=B.finite, params={"hypothesis": "dim M < oo"}, rows=rows)


def check_corner_bounds(B:BettiTable) -> CheckReport:
    """`β^0 >= 1`, `β^{-1} >= m`, `β^{-(m-1)} >= m`, `β^{-m} >= 1` for finite-dimensional modules."""
    m = B.m
    applicable = B.finite and m >= 1
    rows = []
    if m >= 1:
        totals = total_betti(B)
        rows = [
            CheckRow.at_least("i=0", totals[0], 1),
            CheckRow.at_least("i=1", totals[1], m),
            CheckRow.at_least("i=m-1", totals[m-1], m),
            CheckRow.at_least("i=m", totals[m], 1),
        ]
    return CheckReport(suite="corners", proved=True, applicable=applicable, params={"hypothesis": "dim M < oo"}, rows=rows)


def parity_bound(m:int) -> int|None:
    """`5m - 4` for even `m >= 4`, `3m - 1` for odd m, None otherwise."""
    if m % 2:
        return 3*m - 1
    if m >= 4:
        return 5*m - 4
    return None


def check_parity_bounds(B:BettiTable) -> CheckReport:
    bound = parity_bound(B.m)
    rows = [] if bound is None else [CheckRow.at_least("hrk", hrk(B), bound)]
    return CheckReport(
        suite = "parity",
        proved = True,
        applicable = B.finite and bound is not None,
        params = {"hypothesis": "dim M < oo, m odd or even m >= 4"},
        rows = rows,
    )


def avramov_buchweitz_bound(m:int) -> Fraction:
    """`(3/2)(m-1)^2 + 8` as an exact rational."""
    return Fraction(3, 2) * (m-1)**2 + 8


def check_avramov_buchweitz(B:BettiTable) -> CheckReport:
    bound = avramov_buchweitz_bound(B.m)
    return CheckReport(
        suite = "ab",
        proved = True,
        applicable = B.finite and B.m >= 5,
        params = {"hypothesis": "dim M < oo, m >= 5", "ceil": ceil(bound)},
        rows = [CheckRow.at_least("hrk", hrk(B), bound)],
    )


def check_evans_griffith(B:BettiTable, n:int|None=None) -> CheckReport:
    """`β^{-i} >= C(pd, i)` for monomial quotients.

    With `n = dim K + 1` the corollary rows `β^{-i} >= C(m - n, i)` for
    `i <= m - n` are added. They sum over every strand; the range `j = 0..n`
    under which the corollary is usually stated is only recorded in the params.

    Raises:
        RejectedInputError: for the zero table, or `n` outside `0..m`
    """
    if B.is_zero():
        raise RejectedInputError("the Evans-Griffith bound needs a nonzero table")
    pd = projective_dimension(B)
    totals = total_betti(B)
    rows = [CheckRow.at_least(f"i={i}", totals[i], comb(pd, i)) for i in range(pd+1)]
    params = {"hypothesis": "monomial ideal", "pd": pd}
    if n is not None:
        if not 0 <= n <= B.m:
            raise RejectedInputError(f"n must be in 0..{B.m}, got {n}")
        rows += [CheckRow.at_least(f"corollary:i={i}", totals[i], comb(B.m - n, i)) for i in range(B.m - n + 1)]
        params["n"] = n
        params["stated_j_range"] = [0, n]
    return CheckReport(
        suite = "eg",
        proved = True,
        applicable = B.origin in ("monomial", "stanley_reisner") and B.complete,
        params = params,
        rows = rows,
    )


def check_toral_rank_zk(B:BettiTable, n:int) -> CheckReport:
    """`hrk(Z_K) >= 2^{m-n}` for the table of `Q[K]` with `n = dim K + 1`.

    Raises:
        RejectedInputError: if `n` is outside `0..m`
    """
    if not 0 <= n <= B.m:
        raise RejectedInputError(f"n must be in 0..{B.m}, got {n}")
    return CheckReport(
        suite = "trk",
        proved = True,
        applicable = B.origin == "stanley_reisner" and B.complete,
        params = {"hypothesis": "Stanley-Reisner ring", "n": n},
        rows = [CheckRow.at_least("hrk", hrk(B), 2 ** (B.m - n))],
    )


def check_duality(M:GradedModule, jobs:int=1) -> CheckReport:
    """`β^{-i}(M) = β^{-(m-i)}(M*)` for every i, comparing two computed tables."""
    applicable = M.krull_dim == 0 and not M.truncated
    rows = []
    if applicable:
        ours = total_betti(betti_table(M, M.top_level + M.m, jobs=jobs))
        dual = dual_module(M)
        theirs = total_betti(betti_table(dual, dual.top_level + dual.m, jobs=jobs))
        rows = [CheckRow.equal(f"i={i}", ours[i], theirs[M.m - i]) for i in range(M.m + 1)]
    return CheckReport(suite="duality", proved=True, applicable=applicable, params={"hypothesis": "dim M < oo"}, rows=rows)


def check_euler(B:BettiTable) -> CheckReport:
    """`Σ (-1)^i β^{-i} = 0` for torsion modules, in particular finite-dimensional ones."""
    applicable = B.krull_dim is not None and B.krull_dim < B.m and B.complete
    return CheckReport(
        suite = "euler",
        proved = True,
        applicable = applicable,
        params = {"hypothesis": "krull dim < m"},
        rows = [CheckRow.equal("chi", euler_characteristic(B), 0)],
    )



SuiteRunner = Callable[[BettiTable, GradedModule|None, int|None], CheckReport]


def _needs_module(B:BettiTable, M:GradedModule|None, n:int|None) -> CheckReport:
    if M is None:
        return CheckReport(suite="duality", proved=True, applicable=False, params={"hypothesis": "module available"})
    return check_duality(M)


def _toral_rank(B:BettiTable, M:GradedModule|None, n:int|None) -> CheckReport:
    n = B.krull_dim if n is None else n
    if n is None or not 0 <= n <= B.m:
        return CheckReport(suite="trk", proved=True, applicable=False, params={"hypothesis": "Stanley-Reisner ring"})
    return check_toral_rank_zk(B, n)


def _evans_griffith(B:BettiTable, M:GradedModule|None, n:int|None) -> CheckReport:
    if n is None and B.origin == "stanley_reisner":
        n = B.krull_dim
    return check_evans_griffith(B, n)


SUITES : dict[str, SuiteRunner] = {
    "horrocks": lambda B,M,n: check_horrocks(B),
    "weak": lambda B,M,n: check_weak_horrocks(B),
    "corners": lambda B,M,n: check_corner_bounds(B),
    "parity": lambda B,M,n: check_parity_bounds(B),
    "ab": lambda B,M,n: check_avramov_buchweitz(B),
    "eg": _evans_griffith,
    "trk": _toral_rank,
    "duality": _needs_module,
    "euler": lambda B,M,n: check_euler(B),
}
PROVED = frozenset({"corners", "parity", "ab", "eg", "trk", "duality", "euler"})


def parse_suites(value:str) -> list[str]:
    """Suite names from a comma separated list; `all` expands to every suite.

    Raises:
        RejectedInputError: for an unknown name
    """
    names = []
    for name in (part.strip() for part in value.split(",")):
        if name == "all":
            names += [s for s in SUITES if s not in names]
        elif name in SUITES:
            if name not in names:
                names.append(name)
        else:
            raise RejectedInputError(f"unknown suite `{name}`, choose from {', '.join([*SUITES, 'all'])}")
    return names


def run_suites(
        names:list[str],
        B:BettiTable,
        module:GradedModule|None=None,
        n:int|None=None,
    ) -> list[CheckReport]:
    """Runs the named suites in order.

    `module` is needed for `duality`; `n` defaults to the Krull dimension of
    a Stanley-Reisner table. The Evans-Griffith suite is reported "na" on the
    zero table instead of raising.
    """
    reports = []
    for name in names:
        if name == "eg" and B.is_zero():
            reports.append(CheckReport(suite="eg", proved=True, applicable=False, params={"hypothesis": "nonzero table"}))
            continue
        reports.append(SUITES[name](B, module, n))
    return reports
