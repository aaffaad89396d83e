"""
`grmod.module` defines `GradedModule`, a finite-dimensional graded module over
`S(m) = Q[v_1, ..., v_m]` with `deg v_i = 2`.
"""

from typing import Literal

from pydantic import BaseModel,ConfigDict,Field,model_validator

from ..exactla import SparseRationalMatrix


Origin = Literal["module", "monomial", "stanley_reisner"]



class GradedModule(BaseModel):
    """
    Level `t` of the module sits in topological degree `2t`; `levels[t]` is its
    dimension. `mult[(i, t)]` is multiplication by `v_{i+1}` from level `t` to
    level `t+1`, a `levels[t+1] x levels[t]` matrix. Variables are 0-based here
    and 1-based in files and messages.

    A missing `(i, t)` key means the zero map. Shapes and commutativity are not
    enforced on construction; call `grmod.validate` to list violations.

    Args (keyword-only):

        m (int): number of polynomial variables

        levels (tuple[int]): dimension of each level, starting at level 0

        mult (dict[tuple[int,int], SparseRationalMatrix]): multiplication operators

        basis (tuple | None): exponent vector of every basis element per level, for monomial modules

        origin (str): "module", "monomial" or "stanley_reisner"

        truncated (bool): True if the builder cut off nonzero levels above the last one

        krull_dim (int): Krull dimension of the module this one stands for;
            0 for any module that is not truncated (-1 if it is zero)

        tor_bound (int | None): for a truncated monomial module, the last strand
            that can carry Tor of the untruncated quotient (the degree of the lcm
            of the ideal generators)
    """
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    m: int = Field(ge=0)
    levels: tuple[int, ...] = Field(min_length=1)
    mult: dict[tuple[int,int], SparseRationalMatrix] = {}
    basis: tuple[tuple[tuple[int, ...], ...], ...] | None = None
    origin: Origin = "module"
    truncated: bool = False
    krull_dim: int | None = None
    tor_bound: int | None = None

    @model_validator(mode="before")
    @classmethod
    def _default_krull_dim(cls, data):
        if isinstance(data, dict) and data.get("krull_dim") is None and not data.get("truncated", False):
            data = dict(data)
            data["krull_dim"] = 0 if any(data.get("levels", ())) else -1
        return data

    @model_validator(mode="after")
    def _check_levels(self):
        if any(dim < 0 for dim in self.levels):
            raise ValueError("level dimensions must be non-negative")
        if self.basis is not None and tuple(len(b) for b in self.basis) != self.levels:
            raise ValueError("basis labels do not match the level dimensions")
        return self

    def __repr__(self) -> str:
        return f"GradedModule(m={self.m}, levels={list(self.levels)}, origin='{self.origin}')"
    def __str__(self) -> str:
        return repr(self)


    @property
    def last_level(self) -> int:
        return len(self.levels) - 1

    @property
    def top_level(self) -> int:
        """Highest level with nonzero dimension, -1 for the zero module."""
        for t in range(self.last_level, -1, -1):
            if self.levels[t]:
                return t
        return -1

    @property
    def total_dimension(self) -> int:
        return sum(self.levels)

    def is_zero(self) -> bool:
        return self.total_dimension == 0

    def dim(self, t:int) -> int:
        return self.levels[t] if 0 <= t <= self.last_level else 0

    def operator(self, i:int, t:int) -> SparseRationalMatrix:
        """Multiplication by `v_{i+1}` on level `t`, zero when not stored."""
        matrix = self.mult.get((i, t))
        if matrix is None:
            return SparseRationalMatrix.zero(self.dim(t+1), self.dim(t))
        return matrix
