"""
`styles` colors terminal output.

`print` works like the builtin but takes `color` and `style` names, which are
dropped when the output is not a terminal.
"""

from .attributes import Fore,Style
from .out import print,supports_color
