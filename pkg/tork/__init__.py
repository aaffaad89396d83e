"""
tork computes bigraded Betti numbers `β^{-i,2j} = dim Tor^{-i,2j}_{S(m)}(M, Q)`
exactly, from Koszul complexes of graded modules and Stanley-Reisner rings,
and checks them against the Horrocks, toral rank, Evans-Griffith and
Avramov-Buchweitz lower bounds.
"""

from . import styles
from . import argument_parser

from .exceptions import (
    TorkError,
    RejectedInputError,
    SchemaError,
    ChainComplexError,
    OracleMismatchError,
    OutputError,
)
from .exactla import SparseRationalMatrix,rank,nullity,compose
from .simplicial import (
    SimplicialComplex,
    enumerate_complexes,
    sample_complexes,
    simplex,
    boundary_of_simplex,
    cycle,
    void_complex,
)
from .grmod import (
    GradedModule,
    validate,
    point_module,
    monomial_quotient,
    stanley_reisner,
    dual_module,
    random_artinian_module,
    module_from_json,
    module_to_json,
)
from .koszul import (
    KoszulStrand,
    BettiTable,
    strand,
    betti_table,
    total_betti,
    hrk,
    poincare_vector,
    projective_dimension,
    euler_characteristic,
)
from .hochster import hochster_betti
from .conjectures import CheckReport,CheckRow,run_suites
