import logging
import sys
from typing import TextIO

from .. import styles
from ..argument_parser import ValidationError
from ..exceptions import (
    ChainComplexError,
    OracleMismatchError,
    OutputError,
    RejectedInputError,
    SchemaError,
)
from .arguments import BettiArguments,CheckArguments,EnumArguments,ReportArguments
from .commands import cmd_betti,cmd_check,cmd_enum,cmd_report


LOGGER = logging.getLogger("tork")
LOG_FORMAT = "%(asctime)s %(levelname)s %(name)s: %(message)s"

EXIT_OK = 0
EXIT_PROVED_FAILURE = 1
EXIT_USAGE = 2
EXIT_SCHEMA = 3
EXIT_ORACLE = 4
EXIT_OUTPUT = 5

COMMANDS = {
    "betti": (BettiArguments, cmd_betti),
    "check": (CheckArguments, cmd_check),
    "enum": (EnumArguments, cmd_enum),
    "report": (ReportArguments, cmd_report),
}

USAGE = f"usage: tork {{{','.join(COMMANDS)}}} [options]   (tork <command> --help for options)"



def configure_logging(args:dict, stream:TextIO) -> None:
    level = logging.DEBUG if args.get("debug") else logging.INFO if args.get("verbose") else logging.WARNING
    logging.basicConfig(level=level, format=LOG_FORMAT, stream=stream, force=True)


def main(argv:list[str]|None=None, stdout:TextIO|None=None, stderr:TextIO|None=None) -> int:
    """Runs one `tork` subcommand and returns its exit code.

    Results go to `stdout`; messages and logs go to `stderr`.
    """
    argv = sys.argv[1:] if argv is None else argv
    out = sys.stdout if stdout is None else stdout
    err = sys.stderr if stderr is None else stderr

    if not argv or argv[0] in ("-h", "--help"):
        styles.print(USAGE, file=out if argv else err)
        return EXIT_OK if argv else EXIT_USAGE
    command, *rest = argv
    if command not in COMMANDS:
        styles.print(f"error: unknown command `{command}`", color="red", file=err)
        styles.print(USAGE, file=err)
        return EXIT_USAGE

    parser_class, handler = COMMANDS[command]
    parser = parser_class()
    if "-h" in rest or "--help" in rest:
        styles.print(parser.usage(), file=out)
        return EXIT_OK
    try:
        args = parser.parse_arguments(rest)
    except ValidationError as e:
        styles.print(f"error: {e}", color="red", file=err)
        styles.print(parser.usage(), file=err)
        return EXIT_USAGE

    configure_logging(args, err)
    try:
        return handler(args, out, err)
    except RejectedInputError as e:
        styles.print(f"error: {e}", color="red", file=err)
        return EXIT_USAGE
    except SchemaError as e:
        styles.print(f"schema error: {e}", color="red", file=err)
        return EXIT_SCHEMA
    except OracleMismatchError as e:
        styles.print(f"oracle mismatch: {e}", color="red", file=err)
        return EXIT_ORACLE
    except OutputError as e:
        styles.print(f"error: {e}", color="red", file=err)
        return EXIT_OUTPUT
    except ChainComplexError as e:
        LOGGER.critical("engine bug: %s", e)
        return EXIT_PROVED_FAILURE
