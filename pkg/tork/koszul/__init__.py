"""
`tork.koszul` computes `Tor^{-i,2j}_{S(m)}(M, Q)` as the homology of the Koszul
complex `[M ⊗ Λ(u_1, ..., u_m), d]`, one strand at a time.
"""

from .strand import KoszulStrand,build_strand,strand
from .table import (
    BettiTable,
    betti_table,
    default_j_max,
    diff_tables,
    total_betti,
    hrk,
    hrk_ratio,
    poincare_vector,
    projective_dimension,
    euler_characteristic,
)
