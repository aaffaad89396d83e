"""
`styles.out` prints decorated text to terminals and plain text everywhere else.
"""

import builtins as _builtins
import sys
from typing import TextIO

from .attributes import Fore,Style



def supports_color(file:TextIO) -> bool:
    isatty = getattr(file, "isatty", None)
    return bool(isatty and isatty())


def print(*values, color=..., style=..., sep=" ", end='\n', file:TextIO|None=None) -> None:
    """
    prints out the given values decorated with given color and style.

    Decoration is only applied when `file` is a terminal.

    Args:
        color (str, optional): color to use when printing.
        style (str, optional): style of output text.
        sep (str, optional): Separator of values in output. Defaults to " ".
        end (str, optional): last part of print. Defaults to '\\n'.
        file (TextIO, optional): output stream. Defaults to `sys.stdout`.
    """
    file = sys.stdout if file is None else file
    text = sep.join(map(str, values))
    if supports_color(file) and (color is not ... or style is not ...):
        color = "" if color is ... else Fore.as_ansi(color)
        style = "" if style is ... else Style.as_ansi(style)
        text = f"{style}{color}{text}{Style.as_ansi('reset')}"
    _builtins.print(text, end=end, file=file)
