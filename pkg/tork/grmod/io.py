"""
`grmod.io` reads and writes the module file format:

```json
{"m": 2, "levels": [1, 2], "mult": [{"var": 1, "level": 0, "entries": [[0, 0, "1"]]}]}
```

`var` is 1-based, `level` and the `[row, col, value]` indices are 0-based, and
values are rationals written as strings (`"p/q"` or `"p"`).
"""

from pydantic import BaseModel,ConfigDict,Field,ValidationError

from ..exactla import SparseRationalMatrix,format_rational
from ..exceptions import RejectedInputError,SchemaError
from .module import GradedModule
from .validation import validate



class MultEntry(BaseModel):
    model_config = ConfigDict(extra="forbid")

    var: int = Field(ge=1)
    level: int = Field(ge=0)
    entries: list[tuple[int, int, str | int]]


class ModuleFile(BaseModel):
    model_config = ConfigDict(extra="forbid")

    m: int = Field(ge=0)
    levels: list[int] = Field(min_length=1)
    mult: list[MultEntry] = []


def module_from_json(data:dict, check:bool=True) -> GradedModule:
    """Parses a module file object.

    Raises:
        SchemaError: if the object does not follow the schema, or if `check`
            is set and the module breaks a shape or commutativity invariant
    """
    try:
        parsed = ModuleFile.model_validate(data)
    except ValidationError as e:
        raise SchemaError(f"invalid module file: {e}") from None
    if any(dim < 0 for dim in parsed.levels):
        raise SchemaError("invalid module file: level dimensions must be non-negative")
    mult = {}
    for item in parsed.mult:
        key = (item.var - 1, item.level)
        if key in mult:
            raise SchemaError(f"invalid module file: operator for var {item.var} on level {item.level} given twice")
        if item.level + 1 >= len(parsed.levels) or item.var > parsed.m:
            raise SchemaError(f"invalid module file: operator for var {item.var} on level {item.level} is out of range")
        rows = parsed.levels[item.level + 1]
        cols = parsed.levels[item.level]
        try:
            mult[key] = SparseRationalMatrix(rows, cols, item.entries)
        except RejectedInputError as e:
            raise SchemaError(f"invalid module file: var {item.var}, level {item.level}: {e}") from None
    module = GradedModule(m=parsed.m, levels=tuple(parsed.levels), mult=mult)
    if check and (violations := validate(module)):
        details = "; ".join(str(v) for v in violations[:5])
        raise SchemaError(f"invalid module file: {len(violations)} violation(s): {details}")
    return module


def module_to_json(M:GradedModule) -> dict:
    mult = []
    for (i,t),matrix in sorted(M.mult.items()):
        if matrix.is_zero():
            continue
        mult.append({
            "var": i + 1,
            "level": t,
            "entries": [[r, c, format_rational(value)] for r,c,value in matrix.entries()],
        })
    return {"m": M.m, "levels": list(M.levels), "mult": mult}
