"""
`tork.exceptions` holds every error the package raises on purpose.
"""


class TorkError(Exception):
    pass


class RejectedInputError(TorkError, ValueError):
    """An operation was called outside its precondition."""
    pass


class SchemaError(TorkError):
    """A complex, module or record file does not match its schema."""
    pass


class ChainComplexError(TorkError):
    """A computed Koszul strand violates d∘d = 0."""
    pass


class OracleMismatchError(TorkError):
    """Koszul and Hochster Betti tables disagree.

    Attributes:
        koszul (BettiTable): table computed from the Koszul complex
        oracle (BettiTable): table computed by Hochster's formula
        cells (list[tuple[int,int,int,int]]): differing `(i, j, koszul, oracle)` cells
    """
    def __init__(self, koszul, oracle, cells):
        self.koszul = koszul
        self.oracle = oracle
        self.cells = cells
        shown = ", ".join(f"(i={i}, 2j={2*j}): {a} != {b}" for i,j,a,b in cells[:5])
        super().__init__(f"Koszul and Hochster tables differ in {len(cells)} cell(s): {shown}")

    def __reduce__(self):
        return (self.__class__, (self.koszul, self.oracle, self.cells))


class OutputError(TorkError):
    """The output path cannot be written."""
    pass
