"""
`cli.arguments` declares the command line of every `tork` subcommand.
"""

from typing import Literal

from ..argument_parser import ArgumentParser,Option,ValidationError
from ..conjectures import SUITES,parse_suites
from ..exceptions import RejectedInputError


DEFAULT_ENUM_SUITES = ",".join(name for name in SUITES if name != "duality")



class CommonArguments(ArgumentParser):
    jobs : int | None = Option(help="worker processes (default: $TORK_JOBS, then the CPU count)")
    verbose : bool = Option(help="log progress")
    debug : bool = Option(help="log every strand and subset")


def _suites(args:dict) -> dict:
    try:
        args["suite"] = parse_suites(args["suite"])
    except RejectedInputError as e:
        raise ValidationError(str(e)) from None
    return args


class BettiArguments(CommonArguments):
    class Config:
        name = "tork betti"
        description = "Betti table of a complex or module file"

    input : str = Option(help="complex or module JSON file")
    format : Literal["json", "tsv", "text"] = Option(help="output format", default="json")
    oracle : bool = Option(help="compare with Hochster's formula (complex inputs)")
    poincare : bool = Option(help="also print the Poincare vector of Z_K")


class CheckArguments(CommonArguments):
    class Config:
        name = "tork check"
        description = "run inequality suites on a complex or module file"

    input : str = Option(help="complex or module JSON file")
    suite : str = Option(help=f"comma separated subset of {','.join(SUITES)} or all", default="all")
    format : Literal["json", "tsv"] = Option(help="output format", default="json")
    oracle : bool = Option(help="compare with Hochster's formula (complex inputs)")

    def validate_args(self, args):
        return _suites(args)


class EnumArguments(CommonArguments):
    class Config:
        name = "tork enum"
        description = "compute and check every (or a sample of) simplicial complex on [m]"

    m : int = Option(help="number of vertices")
    out : str = Option(help="JSONL output file")
    mode : Literal["exhaustive", "sample"] = Option(help="enumeration mode", default="exhaustive")
    exhaustive : bool = Option(help="same as --mode exhaustive")
    sample : bool = Option(help="same as --mode sample")
    count : int | None = Option(help="number of sampled complexes")
    seed : int = Option(help="sampling seed", default=0)
    suite : str = Option(help="comma separated suites", default=DEFAULT_ENUM_SUITES)
    append : bool = Option(help="append to the output file instead of replacing it")
    oracle : bool = Option(help="compare every table with Hochster's formula")
    no_timestamp : bool = Option(help="omit wall time and timestamps for byte-identical output")

    def validate_args(self, args):
        assert not (args["exhaustive"] and args["sample"]), "`--exhaustive` and `--sample` exclude each other"
        if args["exhaustive"]:
            args["mode"] = "exhaustive"
        elif args["sample"]:
            args["mode"] = "sample"
        assert args["m"] >= 0, "`--m` must be non-negative"
        if args["mode"] == "sample":
            assert args["count"] is not None and args["count"] >= 1, "sampled mode needs `--count` of at least 1"
        return _suites(args)


class ReportArguments(CommonArguments):
    class Config:
        name = "tork report"
        description = "aggregate a JSONL file written by `tork enum`"

    input : str = Option(help="JSONL file")
    format : Literal["json", "tsv"] = Option(help="output format", default="json")
