"""
Weylham - Command-Line Front End
Purpose: The `weylham` command
Version: 1.0.0
Date: 2026-10-19

Subcommands:
- validate   axiom report for a root system
- graph      build the Cayley graph and export it (dot or json)
- find       search a Hamiltonian cycle, print the word as JSON
- verify     check a cycle word against a root system
- spectrum   adjacency eigenvalues, lambda_2 and the Ramanujan flag
- quotient   classes of the smallest or largest equivalence
- alt        Alt(n) Cayley graphs: build, verify, find, reconcile
- families   family grammar and embedded dataset ids
- survey     verify every embedded cycle word that has root data
- run        the full pipeline, JSON summary

Exit codes: 0 success, 1 rejected or nothing found, 2 usage or input error,
3 invariant violation. Diagnostics go to stderr, results to stdout.
"""

from pathlib import Path
from typing import Any, Callable, Optional, Sequence
import argparse
import json
import logging
import sys

from src import __version__
from src.core.families import FAMILY_GRAMMAR
from src.core.groupoid_graph import build_graph, export_graph, quotient_classes
from src.core.hamilton import find, find_on_graph, lift_search, verify_cycle
from src.core.perm_cayley import (
    Permutation,
    alt_generators,
    build_perm_graph,
    reconcile_hamiltonian_map,
    verify_perm_cycle,
)
from src.core.root_core import validate_fgrs
from src.core.spectral import compare_lambda2, lambda2_table, spectrum_of_graph, spectrum_report
from src.errors import DatasetNotFound, WeylhamError
from src.knowledge.datasets import alt4_listing, embedded_datasets, list_datasets, resolve
from src.nodes.s01_ingestion import load_system
from src.nodes.s04_cycle import search_config
from src.parsers.parser_factory import format_cycle_json, parse_alt_word, parse_cycle, parse_roots
from src.pipeline import run_pipeline
from src.state.schemas import ExportFormat, QuotientMode, SearchMethod
from src.utils.dataframe_utils import (
    export_frame_to_csv,
    export_frame_to_json,
    survey_frame,
    validate_survey_frame,
)
from src.utils.logging_config import setup_logging
from src.utils.settings import get_settings

logger = logging.getLogger(__name__)

Handler = Callable[[argparse.Namespace], int]


def _emit(payload: Any) -> None:
    if isinstance(payload, str):
        sys.stdout.write(payload if payload.endswith("\n") else payload + "\n")
    else:
        sys.stdout.write(json.dumps(payload, default=str) + "\n")


def _state(args: argparse.Namespace) -> dict[str, Any]:
    return {
        "roots": args.roots,
        "family": args.family,
        "super": getattr(args, "super_datum", None),
        "method": getattr(args, "method", None),
        "time_budget": getattr(args, "time_budget", None),
        "seed": getattr(args, "seed", None),
        "threads": getattr(args, "threads", None),
        "deterministic": getattr(args, "deterministic", None),
    }


# ============================================================================
# ROOT SYSTEM COMMANDS
# ============================================================================

def cmd_validate(args: argparse.Namespace) -> int:
    report = validate_fgrs(load_system(_state(args)))
    _emit(report.model_dump(mode="json"))
    return 0 if report.passed else 1


def cmd_graph(args: argparse.Namespace) -> int:
    graph = build_graph(load_system(_state(args)))
    text = export_graph(graph, ExportFormat(args.format))
    if args.output:
        Path(args.output).write_text(text, encoding="utf-8")
        logger.info(f"Wrote {graph.order} vertices to {args.output}")
    else:
        _emit(text)
    return 0


def cmd_find(args: argparse.Namespace) -> int:
    state = _state(args)
    system = load_system(state)
    word = find(system, build_graph(system), search_config(state))
    _emit(format_cycle_json(word))
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    system = load_system(_state(args))
    word = parse_cycle(resolve(args.cycle, kind="cycle").payload)
    report = verify_cycle(build_graph(system), word)
    _emit(report.model_dump(mode="json"))
    return 0 if report.accepted else 1


def cmd_spectrum(args: argparse.Namespace) -> int:
    spectrum = spectrum_of_graph(build_graph(load_system(_state(args))))
    _emit(spectrum_report(spectrum, args.top))
    return 0


def cmd_quotient(args: argparse.Namespace) -> int:
    system = load_system(_state(args))
    classes = quotient_classes(system, build_graph(system), QuotientMode(args.mode))
    _emit({"mode": args.mode, "classes": len(classes), "sizes": [len(c) for c in classes]})
    return 0


# ============================================================================
# ALT(N)
# ============================================================================

def _alt_word(args: argparse.Namespace) -> list[str]:
    if args.word_file:
        return parse_alt_word(Path(args.word_file).read_text(encoding="utf-8"))
    return parse_alt_word(resolve(args.word or f"alt{args.n}-word", kind="alt-word").payload)


def cmd_alt(args: argparse.Namespace) -> int:
    graph = build_perm_graph(alt_generators(args.n))
    if args.action == "build":
        _emit({"n": args.n, "order": graph.order, "degree": graph.degree, "edges": len(graph.edges)})
        return 0

    if args.action == "verify":
        report = verify_perm_cycle(graph, _alt_word(args))
        _emit(report.model_dump(mode="json"))
        return 0 if report.accepted else 1

    if args.action == "reconcile":
        if args.n != 4:
            logger.error("reconcile needs the 12-vertex listing, use --n 4")
            return 2
        labels, printed = alt4_listing()
        perms = {name: Permutation.from_cycles(text, 4) for name, text in labels.items()}
        report = reconcile_hamiltonian_map(graph, _alt_word(args), printed, perms)
        _emit(report.model_dump(mode="json"))
        return 0 if report.passed else 1

    cfg = search_config(_state(args))
    if args.lift:
        word = lift_search(graph, graph.label_of(args.lift), cfg)
        if word is None:
            logger.error(f"Lifting along {args.lift} found no cycle")
            return 1
    else:
        word = find_on_graph(graph, cfg)
    _emit({"n": args.n, "word": [graph.generators[i - 1] for i in word.word]})
    return 0


# ============================================================================
# CATALOGUE AND SURVEY
# ============================================================================

def cmd_families(args: argparse.Namespace) -> int:
    _emit({
        "grammar": FAMILY_GRAMMAR,
        "datasets": {kind: list_datasets(kind) for kind in ("roots", "cycle", "alt-word")},
    })
    return 0


def survey_rows(spectra: bool = True) -> list[dict[str, Any]]:
    """One row per embedded cycle word; words without root data are marked skipped."""
    rows = []
    graphs: dict[str, Any] = {}
    for dataset in embedded_datasets().values():
        if dataset.kind != "cycle":
            continue
        rank, number = dataset.metadata["rank"], dataset.metadata["number"]
        row: dict[str, Any] = {
            "id": dataset.id, "rank": rank, "number": number,
            "length": dataset.metadata["length"], "status": "skipped",
        }
        data_id = f"ch-rank{rank}-nr{number}"
        try:
            roots = resolve(data_id, kind="roots")
        except DatasetNotFound:
            rows.append(row)
            continue

        if data_id not in graphs:
            graphs[data_id] = build_graph(parse_roots(roots.payload, name=data_id))
        graph = graphs[data_id]
        report = verify_cycle(graph, parse_cycle(dataset.payload))
        row.update(status="verified" if report.accepted else "rejected",
                   vertices=graph.order, accepted=report.accepted)
        if spectra and rank == 3:
            spectrum = spectrum_of_graph(graph)
            row.update(
                lambda2=round(spectrum.lambda2, 7),
                lambda2_matches=compare_lambda2(number, spectrum.lambda2),
                ramanujan=spectrum_report(spectrum)["ramanujan"],
            )
        rows.append(row)
    return rows


def cmd_survey(args: argparse.Namespace) -> int:
    rows = survey_rows(spectra=not args.no_spectra)
    table = lambda2_table()
    for row in rows:
        if row["rank"] == 3:
            row["table_lambda2"] = table.get(row["number"])
    df = survey_frame(rows)
    quality = validate_survey_frame(df)
    for warning in quality["warnings"]:
        logger.warning(warning)
    for error in quality["errors"]:
        logger.error(error)

    if args.output:
        out = Path(args.output)
        if out.suffix == ".csv":
            export_frame_to_csv(df, out)
        else:
            export_frame_to_json(df, out)
        logger.info(f"Wrote {len(df)} survey rows to {out}")
    else:
        _emit(json.dumps(df.to_dicts(), default=str))
    return 0 if quality["passed"] else 1


def cmd_run(args: argparse.Namespace) -> int:
    state = _state(args)
    state.update(cycle=args.cycle, top=args.top)
    result = run_pipeline(state)
    _emit(result["summary"])
    return 0 if result["summary"]["passed"] else 1


# ============================================================================
# ARGUMENT PARSING
# ============================================================================

def _add_source(p: argparse.ArgumentParser, with_super: bool = True) -> None:
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--roots", help="Root file, embedded id (ch-rank3-nr1) or name under WEYLHAM_DATA_DIR")
    group.add_argument("--family", help="Family specifier, see `weylham families`")
    if with_super:
        group.add_argument("--super", dest="super_datum", help="Super datum JSON file")


def _add_search(p: argparse.ArgumentParser) -> None:
    p.add_argument("--method", choices=[m.value for m in SearchMethod], default=SearchMethod.AUTO.value)
    p.add_argument("--time-budget", type=float, default=None, help="Seconds (default: settings)")
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--threads", type=int, default=None)
    p.add_argument("--deterministic", action=argparse.BooleanOptionalAction, default=None)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="weylham",
        description="Weyl groupoid Cayley graphs: validation, Hamiltonian cycles and spectra",
    )
    ap.add_argument("--version", action="version", version=f"weylham {__version__}")
    ap.add_argument("--log-level", default=None, help="DEBUG, INFO, WARNING or ERROR")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="Check the root system axioms")
    _add_source(p)
    p.set_defaults(handler=cmd_validate)

    p = sub.add_parser("graph", help="Build and export the Cayley graph")
    _add_source(p)
    p.add_argument("--format", choices=[f.value for f in ExportFormat], default=ExportFormat.JSON.value)
    p.add_argument("--output", default=None)
    p.set_defaults(handler=cmd_graph)

    p = sub.add_parser("find", help="Search a Hamiltonian cycle")
    _add_source(p)
    _add_search(p)
    p.set_defaults(handler=cmd_find)

    p = sub.add_parser("verify", help="Verify a cycle word")
    _add_source(p)
    p.add_argument("--cycle", required=True, help="Cycle file or embedded id (cycle-nr1)")
    p.set_defaults(handler=cmd_verify)

    p = sub.add_parser("spectrum", help="Adjacency spectrum")
    _add_source(p)
    p.add_argument("--top", type=int, default=None)
    p.set_defaults(handler=cmd_spectrum)

    p = sub.add_parser("quotient", help="Equivalence classes of bases")
    _add_source(p)
    p.add_argument("--mode", choices=[m.value for m in QuotientMode], default=QuotientMode.SMALLEST.value)
    p.set_defaults(handler=cmd_quotient)

    p = sub.add_parser("alt", help="Cayley graphs of Alt(n)")
    p.add_argument("action", nargs="?", default="build", choices=["build", "verify", "find", "reconcile"])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--word", default=None, help="Embedded word id (default alt<n>-word)")
    p.add_argument("--word-file", default=None)
    p.add_argument("--lift", default=None, help="Generator name to split along, e.g. x4")
    _add_search(p)
    p.set_defaults(handler=cmd_alt, roots=None, family=None)

    p = sub.add_parser("families", help="List family specifiers and embedded datasets")
    p.set_defaults(handler=cmd_families)

    p = sub.add_parser("survey", help="Verify all embedded cycle words that have root data")
    p.add_argument("--output", default=None, help="Write .csv or .json instead of printing")
    p.add_argument("--no-spectra", action="store_true")
    p.set_defaults(handler=cmd_survey)

    p = sub.add_parser("run", help="Full pipeline with a JSON summary")
    _add_source(p)
    _add_search(p)
    p.add_argument("--cycle", default=None)
    p.add_argument("--top", type=int, default=2)
    p.set_defaults(handler=cmd_run)

    return ap


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    setup_logging(args.log_level or get_settings().log_level, stream=sys.stderr)
    handler: Handler = args.handler
    try:
        return handler(args)
    except WeylhamError as e:
        logger.error(f"{type(e).__name__}: {e}")
        return e.exit_code
    except ValueError as e:
        logger.error(str(e))
        return 2


if __name__ == "__main__":
    sys.exit(main())
