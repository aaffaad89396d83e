"""
`cli.commands` implements the `tork` subcommands. Each one takes the parsed
arguments and the two output streams and returns the process exit code;
errors are raised and mapped to exit codes by `cli.main`.
"""

import json
import logging
import time
from datetime import datetime,timezone
from functools import partial
from typing import TextIO

from more_itertools import peekable
from pydantic import ValidationError as PydanticValidationError

from .. import styles
from ..config import resolve_jobs
from ..conjectures import CheckReport,run_suites
from ..exactla import format_rational
from ..exceptions import OutputError,RejectedInputError,SchemaError
from ..grmod import GradedModule,module_from_json,stanley_reisner
from ..hochster import assert_oracle_agrees,hochster_betti
from ..koszul import BettiTable,betti_table,poincare_vector
from ..simplicial import SimplicialComplex,enumerate_complexes,sample_complexes
from .parallel import ordered_map
from .records import RunRecord,Summary,input_hash


LOGGER = logging.getLogger(__name__)

STATUS_COLORS = {"pass": "green", "fail": "red", "na": "yellow"}



def read_json(path:str) -> dict:
    """
    Raises:
        SchemaError: if the file cannot be read or is not a JSON object
    """
    try:
        with open(path, encoding="utf-8") as file:
            data = json.load(file)
    except OSError as e:
        raise SchemaError(f"cannot read `{path}`: {e.strerror}") from None
    except json.JSONDecodeError as e:
        raise SchemaError(f"`{path}` is not valid JSON: {e}") from None
    if not isinstance(data, dict):
        raise SchemaError(f"`{path}` must contain a JSON object")
    return data


def load_input(data:dict) -> SimplicialComplex | GradedModule:
    """A complex file has `facets`, a module file has `levels`."""
    if "facets" in data:
        return SimplicialComplex.from_json(data)
    if "levels" in data:
        return module_from_json(data)
    raise SchemaError("input is neither a complex file (`facets`) nor a module file (`levels`)")


def complex_table(K:SimplicialComplex, jobs:int=1) -> tuple[BettiTable, GradedModule]:
    """Betti table of `Q[K]`; levels above m never carry new homology."""
    M = stanley_reisner(K, max(K.m, 1))
    return betti_table(M, j_max=K.m, jobs=jobs, check=False), M


def compute(source:SimplicialComplex|GradedModule, jobs:int, oracle:bool) -> tuple[BettiTable, GradedModule, int|None]:
    """Betti table, the module it was computed from and `n = dim K + 1` for complexes."""
    if isinstance(source, SimplicialComplex):
        B, M = complex_table(source, jobs)
        if oracle:
            assert_oracle_agrees(B, hochster_betti(source, jobs=jobs))
            LOGGER.info("Hochster oracle agrees on %d cells", len(B.entries))
        return B, M, source.n
    if oracle:
        raise RejectedInputError("`--oracle` needs a complex input")
    return betti_table(source, jobs=jobs), source, None


def _dump(value) -> str:
    return json.dumps(value, indent=2, sort_keys=True) + "\n"



def cmd_betti(args:dict, out:TextIO, err:TextIO) -> int:
    source = load_input(read_json(args["input"]))
    B, _, _ = compute(source, resolve_jobs(args["jobs"]), args["oracle"])
    if args["format"] == "json":
        data = B.to_json()
        if args["poincare"]:
            data["poincare"] = poincare_vector(B)
        out.write(_dump(data))
    elif args["format"] == "tsv":
        out.write(B.to_tsv())
        if args["poincare"]:
            out.write("\nk\tdim\n")
            out.write("".join(f"{k}\t{dim}\n" for k,dim in enumerate(poincare_vector(B))))
    else:
        out.write(B.render())
        if args["poincare"]:
            out.write(f"poincare: {poincare_vector(B)}\n")
    return 0


def print_reports(reports:list[CheckReport], err:TextIO) -> None:
    for report in reports:
        kind = "proved" if report.proved else "conjectural"
        styles.print(f"{report.suite:<9} {kind:<12}", end="", file=err)
        styles.print(report.overall, color=STATUS_COLORS[report.overall], style="bold", file=err)
        for row in report.failing_rows():
            styles.print(f"    {row.id}: {row.lhs} < {row.rhs}", color="red", file=err)


def cmd_check(args:dict, out:TextIO, err:TextIO) -> int:
    data = read_json(args["input"])
    source = load_input(data)
    B, M, n = compute(source, resolve_jobs(args["jobs"]), args["oracle"])
    reports = run_suites(args["suite"], B, module=M, n=n)
    failures = [report.suite for report in reports if report.is_bug()]
    if args["format"] == "json":
        out.write(_dump({
            "input_hash": input_hash(data),
            "reports": [report.to_json() for report in reports],
            "proved_failures": failures,
        }))
    else:
        out.write("suite\tid\tlhs\trhs\tstatus\n")
        for report in reports:
            for row in (r.to_json() for r in report.rows):
                out.write(f"{report.suite}\t{row['id']}\t{row['lhs']}\t{row['rhs']}\t{row['status']}\n")
            out.write(f"{report.suite}\toverall\t\t\t{report.overall}\n")
    print_reports(reports, err)
    if failures:
        LOGGER.error("proved bound(s) failed: %s", ", ".join(failures))
        return 1
    return 0



def _evaluate_complex(
        suites:list[str],
        oracle:bool,
        timestamp:bool,
        seed:int|None,
        item:tuple[int, SimplicialComplex],
    ) -> RunRecord:
    index, K = item
    start = time.perf_counter()
    B, M, n = compute(K, 1, oracle)
    reports = run_suites(suites, B, module=M, n=n)
    descriptor = {"index": index, "seed": seed}
    if timestamp:
        descriptor["wall_ms"] = round((time.perf_counter() - start) * 1000)
        descriptor["timestamp"] = datetime.now(timezone.utc).isoformat(timespec="seconds")
    return RunRecord.build("complex", K.to_json(), B, reports, n=n, **descriptor)


def cmd_enum(args:dict, out:TextIO, err:TextIO) -> int:
    m = args["m"]
    if args["mode"] == "exhaustive":
        complexes = peekable(enumerate_complexes(m))
        seed = None
    else:
        complexes = peekable(sample_complexes(m, args["count"], args["seed"]))
        seed = args["seed"]
    complexes.peek(None)
    jobs = resolve_jobs(args["jobs"])
    timestamp = not args["no_timestamp"]

    try:
        handle = open(args["out"], "a" if args["append"] else "w", encoding="utf-8")
    except OSError as e:
        raise OutputError(f"cannot write `{args['out']}`: {e.strerror}") from None

    summary = Summary()
    task = partial(_evaluate_complex, args["suite"], args["oracle"], timestamp, seed)
    with handle:
        for record in ordered_map(task, enumerate(complexes), jobs):
            handle.write(record.to_line(timestamp))
            summary.add(record)
            if (failed := record.proved_failures()):
                LOGGER.error("record %d (%s): proved bound(s) failed: %s", record.index, record.input_hash[:12], ", ".join(failed))
            if summary.records % 1000 == 0:
                LOGGER.info("%d records written", summary.records)
        handle.write(summary.to_line())

    LOGGER.info("enum m=%d (%s): %d records", m, args["mode"], summary.records)
    color = "red" if summary.proved_failures else "green"
    styles.print(f"{summary.records} records, {summary.proved_failures} proved-bound failure(s)", color=color, file=err)
    if summary.min_ratio is not None:
        styles.print(f"min hrk / 2^(m-n): {format_rational(summary.min_ratio)} ({len(summary.extremal)} record(s))", file=err)
    return 1 if summary.proved_failures else 0



def read_records(path:str) -> tuple[list[RunRecord], int]:
    """Records of a JSONL file and the number of corrupt lines skipped.

    Summary lines are ignored.
    """
    records = []
    skipped = 0
    try:
        file = open(path, encoding="utf-8")
    except OSError as e:
        raise SchemaError(f"cannot read `{path}`: {e.strerror}") from None
    with file:
        for number,line in enumerate(file, start=1):
            if not line.strip():
                continue
            try:
                data = json.loads(line)
                if isinstance(data, dict) and "summary" in data:
                    continue
                records.append(RunRecord.model_validate(data))
            except (json.JSONDecodeError, PydanticValidationError):
                skipped += 1
                LOGGER.debug("skipping corrupt record on line %d", number)
    if skipped:
        LOGGER.warning("%d corrupt record(s) skipped in `%s`", skipped, path)
    return records, skipped


def cmd_report(args:dict, out:TextIO, err:TextIO) -> int:
    records, skipped = read_records(args["input"])
    summary = Summary()
    for record in records:
        summary.add(record)
    summary.skipped = skipped
    if args["format"] == "json":
        out.write(_dump(summary.to_json()))
    else:
        out.write(summary.to_tsv())
    return 0
