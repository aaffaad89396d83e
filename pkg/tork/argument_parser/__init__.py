"""
Class-based command line parser.

Declare the arguments of a command as annotated class attributes of an
`ArgumentParser` subclass and call `parse_arguments` to get them validated.
"""

from .parser import ArgumentParser,Option,DefaultConfig
from .exceptions import ValidationError
