"""
`tork.conjectures` checks Betti tables against the Horrocks, toral rank,
Evans-Griffith and Avramov-Buchweitz style lower bounds.
"""

from .report import Status,CheckRow,CheckReport
from .suites import (
    SUITES,
    PROVED,
    parse_suites,
    run_suites,
    parity_bound,
    avramov_buchweitz_bound,
    check_horrocks,
    check_weak_horrocks,
    check_corner_bounds,
    check_parity_bounds,
    check_avramov_buchweitz,
    check_evans_griffith,
    check_toral_rank_zk,
    check_duality,
    check_euler,
)
