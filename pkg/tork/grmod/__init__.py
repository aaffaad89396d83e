"""
`tork.grmod` contains finite-dimensional graded modules over `S(m) = Q[v_1, ..., v_m]`
and everything needed to build, check, dualize and store them.
"""

from .module import GradedModule
from .validation import Violation,validate
from .builders import (
    monomials,
    point_module,
    monomial_quotient,
    stanley_reisner,
    dual_module,
    quotient_top_level,
    random_artinian_module,
)
from .io import ModuleFile,module_from_json,module_to_json
