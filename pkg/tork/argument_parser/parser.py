import inspect
import sys
from typing import Any,Callable

from ..config import clean_class_dict
from .complex_handlers import find_handler
from .exceptions import ValidationError
from .utils import check_none_default,flag_name,looks_like_number




class Option:
    """
    `Option` validates and cleans the values of one command line argument.

    Every annotated attribute of an `ArgumentParser` becomes an `Option` in its
    constructor. Assign an `Option` to the attribute directly to set its help
    text, default or maximum count; `name` and `validator` are then filled in
    from the attribute.
    """
    def __init__(self,
        name : str = "",
        validator : Callable | None = None,
        abrev : bool = True,
        help : str = "",
        default : Any = ...,
        maximum : int = 1
      ):
        self.name = name
        self.validator = validator
        self.abrev = abrev
        self.help = help
        self.default = default
        self.maximum = maximum

    @property
    def required(self) -> bool:
        return self.default is Ellipsis

    @property
    def is_flag(self) -> bool:
        return self.validator is bool


    def parse(self, *values):
        """
        Receives every value given for this option on the command line, one
        entry per occurrence, and returns the cleaned value.
        """
        if len(values) > self.maximum:
            raise ValidationError(f"You can use `{flag_name(self.name)}` option only `{self.maximum}` times.")

        if self.is_flag:
            return self.default is not True

        if (handler := find_handler(self.validator)) is not None:
            return handler(self.name, self.validator, values)

        if self.validator not in (list,tuple,set):
            for value in values:
                if isinstance(value, (list,set,tuple)):
                    raise ValidationError(f"`{flag_name(self.name)}` option must have single argument")

        try:
            if len(values) == 1:
                return self.validator(values[0])
            return [self.validator(value) for value in values]
        except Exception as e:
            raise ValidationError(f"invalid value for `{flag_name(self.name)}`: {e}") from None


    def __repr__(self):
        return f"{self.name}"



class DefaultConfig:
    name = ""
    description = ""
    abrev = True
    allow_unknown = False



class ArgumentParser:
    """
    Base class of command parsers.

    Arguments are class attributes with type annotations; attributes without a
    default (and not annotated `X | None`) are required. Underscores in the
    attribute name become hyphens on the command line.

    Example:

    ```python
    class BettiArguments(ArgumentParser):
        input : str
        format : Literal["json", "tsv"] = "json"
        oracle : bool = False

    args = BettiArguments().parse_arguments(["--input", "square.json", "--oracle"])
    ```
    """
    Config = DefaultConfig
    def __init__(self):
        self.Config = {
            **clean_class_dict(DefaultConfig),
            **clean_class_dict(self.Config),
        }
        self.args : dict[str,Option] = {}
        for arg_name,arg_type in self._collect_annotations().items():
            attr = getattr(self, arg_name, ...)
            if isinstance(attr, Option):
                option = attr
                option.name = option.name or arg_name
                option.validator = option.validator or arg_type
                if option.default is Ellipsis and check_none_default(arg_type):
                    option.default = None
            else:
                if attr is Ellipsis and check_none_default(arg_type):
                    attr = None
                option = Option(
                    name = arg_name,
                    abrev = self.Config["abrev"],
                    validator = arg_type,
                    default = attr,
                )
            if option.is_flag and option.default is Ellipsis:
                option.default = False
            self.args[arg_name] = option
        self._acceptables = self._get_acceptable_arg_names()

    @classmethod
    def _collect_annotations(cls) -> dict[str,Any]:
        annotations = {}
        for klass in reversed(cls.__mro__):
            if klass in (object, ArgumentParser):
                continue
            annotations.update({
                name:hint for name,hint in inspect.get_annotations(klass).items()
                if name != "Config"
            })
        return annotations

    def validate_args(self, args:dict[str,Any]) -> dict[str,Any]:
        """Hook for checks that involve several arguments.

        Called with the type-checked values; returns them, possibly changed.
        An `AssertionError` raised here reaches the caller of `parse_arguments`
        as a `ValidationError`.
        """
        return args

    def _get_acceptable_arg_names(self) -> dict[str,list[str]]:
        """Every spelling of every argument: the long flag first, then one
        abbreviation not taken by another argument."""
        acceptables : dict[str, list[str]] = {}
        taken = set()
        for arg_name,arg in self.args.items():
            acceptables[arg_name] = [flag_name(arg.name)]
            taken.add(flag_name(arg.name))
        for arg_name,arg in self.args.items():
            if not arg.abrev:
                continue
            letters = arg.name.replace("_", "")
            for size in range(1, len(letters)+1):
                abrv = f"-{letters[:size]}"
                if abrv not in taken:
                    acceptables[arg_name].append(abrv)
                    taken.add(abrv)
                    break
        return acceptables

    def _check_acceptable(self, name:str) -> str|None:
        """Attribute name of the argument spelled `name`, or `None`."""
        for arg_name,abrvs in self._acceptables.items():
            if name in abrvs:
                return arg_name
        return None

    @staticmethod
    def _is_value(token:str) -> bool:
        return not token.startswith("-") or looks_like_number(token)

    def usage(self) -> str:
        name = self.Config["name"]
        lines = [f"usage: {name}" if name else "usage:"]
        if self.Config["description"]:
            lines.append(f"  {self.Config['description']}")
        for arg_name,arg in self.args.items():
            spellings = ", ".join(reversed(self._acceptables[arg_name]))
            suffix = "" if arg.is_flag else (" (required)" if arg.required else f" (default: {arg.default})")
            lines.append(f"  {spellings:<24} {arg.help}{suffix}".rstrip())
        return "\n".join(lines)

    def parse_arguments(self, args:list[str]|None=None) -> dict[str,Any]:
        """Parses `args` (default `sys.argv[1:]`) into `{attribute: value}`.

        Raises:
            ValidationError: on a repeated option, a missing value or required
                argument, an unknown flag (unless `allow_unknown`), a value of
                the wrong type, or a failed `validate_args` assertion
        """
        args = sys.argv[1:] if args is None else args
        i = 0
        results = {}
        arg_counter = {name:arg.maximum for name,arg in self.args.items()}
        to_parse_args = {name:[] for name in self.args.keys()}
        while i < len(args):
            arg = args[i]
            if name:=self._check_acceptable(arg):
                if arg_counter[name] <= 0:
                    raise ValidationError(
                        f"You can use `{arg}` option only `{self.args[name].maximum}` times."
                    )
                arg_counter[name] -= 1
                j = i+1
                if not self.args[name].is_flag:
                    while  j<len(args)  and  self._is_value(args[j]):
                        j += 1
                if i+1 == j:
                    if self.args[name].is_flag:
                        to_send = True
                    else:
                        raise ValidationError(f"`{arg}` option needs an argument")
                elif i+2 == j:
                    to_send = args[i+1]
                else:
                    to_send = args[i+1:j]
                to_parse_args[name].append(to_send)
                i = j
            elif not self.Config["allow_unknown"]:
                raise ValidationError(f"Unknown argument `{arg}` found")
            else:
                j = i+1
                while  j<len(args)  and  self._is_value(args[j]):
                    j += 1
                i = j

        for arg_name,values in to_parse_args.items():
            if not values:
                if not self.args[arg_name].required:
                    results[arg_name] = self.args[arg_name].default
                    continue
                raise ValidationError(f"Argument `{flag_name(arg_name)}` is required")
            results[arg_name] = self.args[arg_name].parse(*values)

        try:
            return self.validate_args(results)
        except AssertionError as e:
            raise ValidationError(str(e)) from None
