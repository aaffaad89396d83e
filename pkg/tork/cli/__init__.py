"""
`tork.cli` is the command line: `tork betti`, `tork check`, `tork enum` and
`tork report`.
"""

from .main import main
