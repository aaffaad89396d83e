"""
`grmod.validation` checks the shape and commutativity invariants of a `GradedModule`.

Contains `Violation` and `validate`
"""

from typing import Literal

from pydantic import BaseModel

from .module import GradedModule



class Violation(BaseModel):
    """One broken invariant. Variables are reported 1-based, levels 0-based."""
    kind: Literal["range", "shape", "commutativity"]
    message: str
    var: int | None = None
    other_var: int | None = None
    level: int | None = None

    def __str__(self) -> str:
        return self.message


def validate(M:GradedModule) -> list[Violation]:
    """Lists every violation of the module invariants; empty iff `M` is valid.

    Checked: operator keys in range, operator shapes, and for all `i < j` and `t`
    the commutativity `V_j[t+1]·V_i[t] = V_i[t+1]·V_j[t]`.
    """
    violations : list[Violation] = []
    for (i,t),matrix in sorted(M.mult.items()):
        if not (0 <= i < M.m and 0 <= t < M.last_level):
            violations.append(Violation(
                kind="range", var=i+1, level=t,
                message=f"operator for v_{i+1} on level {t} is outside m = {M.m}, levels 0..{M.last_level-1}",
            ))
            continue
        expected = (M.dim(t+1), M.dim(t))
        if matrix.shape != expected:
            violations.append(Violation(
                kind="shape", var=i+1, level=t,
                message=f"V_{i+1}[{t}] has shape {matrix.shape[0]}x{matrix.shape[1]}, expected {expected[0]}x{expected[1]}",
            ))
    if violations:
        return violations

    for t in range(M.last_level - 1):
        for i in range(M.m):
            for j in range(i+1, M.m):
                left = M.operator(j, t+1).compose(M.operator(i, t))
                right = M.operator(i, t+1).compose(M.operator(j, t))
                if left != right:
                    violations.append(Violation(
                        kind="commutativity", var=i+1, other_var=j+1, level=t,
                        message=f"({i+1},{j+1},{t}): V_{j+1}[{t+1}]·V_{i+1}[{t}] != V_{i+1}[{t+1}]·V_{j+1}[{t}]",
                    ))
    return violations
