from typing import Any,Callable,get_args

from .exceptions import ValidationError
from .utils import is_literal,is_union



def parse_literal(arg_name:str, arg_type, values:tuple) -> Any:
    acceptables = get_args(arg_type)
    results = []
    for value in values:
        if value not in acceptables:
            raise ValidationError(f"argument `{arg_name}` only accepts one of `{', '.join(map(str, acceptables))}`")
        results.append(value)
    return results if len(results) > 1 else results[0]


def parse_union(arg_name:str, arg_type, values:tuple) -> Any:
    for member in get_args(arg_type):
        if member is type(None):
            continue
        handler = find_handler(member)
        try:
            if handler is not None:
                return handler(arg_name, member, values)
            if len(values) == 1:
                return member(values[0])
            return [member(value) for value in values]
        except (ValidationError, TypeError, ValueError):
            pass
    raise ValidationError(f"Invalid value for argument `{arg_name}`") from None


def find_handler(arg_type) -> Callable | None:
    if is_literal(arg_type):
        return parse_literal
    if is_union(arg_type):
        return parse_union
    return None
