"""
`styles.attributes` implements `Fore` and `Style`, which turn color and style
names into ANSI escape codes.
"""



class _Colors:
    BLACK = 0
    MAROON = 1
    GREEN = 2
    OLIVE = 3
    NAVY = 4
    PURPLE = 5
    TEAL = 6
    SILVER = 7
    GREY = 8
    RED = 9
    LIME = 10
    YELLOW = 11
    BLUE = 12
    FUCHSIA = 13
    AQUA = 14
    WHITE = 15


class _attribute:
    _prefix : str = ""

    def _translate(self, code:int) -> str:
        return f"{self._prefix}{code}m"

    def as_ansi(self, value:int|str) -> str:
        """Returns ANSI code of the given attribute

        Args:
            value (int | str): a name such as `"red"`, a code, or an ANSI string

        Raises:
            TypeError: When `value` argument is not `str` and `int`
            AttributeError: for an unknown name
        """
        if isinstance(value, str):
            if value.startswith(self._prefix):
                return value
            return self._translate(getattr(self, value.upper()))
        elif isinstance(value, int):
            return self._translate(value)
        raise TypeError("`value` must be either of type `int` or `str`")



class _Fore(_Colors, _attribute):
    _prefix = "\x1b[38;5;"


class _Style(_attribute):
    _prefix = "\x1b["

    RESET = 0
    BOLD = 1


Fore = _Fore()
Style = _Style()
