from types import NoneType,UnionType
from typing import Literal,Union,get_args,get_origin



def is_union(arg_type) -> bool:
    return isinstance(arg_type, UnionType) or get_origin(arg_type) is Union


def is_literal(arg_type) -> bool:
    return get_origin(arg_type) is Literal


def check_none_default(arg_type) -> bool:
    return is_union(arg_type) and NoneType in get_args(arg_type)


def flag_name(attr_name:str) -> str:
    """`no_timestamp` -> `--no-timestamp`"""
    return "--" + attr_name.replace("_", "-")


def looks_like_number(token:str) -> bool:
    try:
        float(token)
    except ValueError:
        return False
    return True
