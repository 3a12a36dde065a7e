"""Argument parsing and verb dispatch for the gradedlie command line."""

import argparse
import logging
import sys
from pathlib import Path
from typing import Callable, Dict, List, Optional

from pydantic import BaseModel, ValidationError

from ...config import get_settings
from ...errors import ClosureCheckError
from ...models.algebra import AlgebraFamily, AlgebraSpec, GeneratorSetDocument
from ...models.relations import RelationReport, RelationSet
from ..catalog import AlgebraBasis, build, desk_scale_specs
from ..exact import same_span
from ..grading import DegreePartition
from ..parastat import (
    GeneratorFamily,
    build_parabosons,
    build_parafermions,
    relation_template,
    verify_relations,
)
from ..structure import generate_closure, structure_constants
from ..verification import AlgebraVerifier, verify_sweep
from .documents import (
    algebra_document,
    closure_document,
    constants_document,
    dump_document,
    export_structure_constants,
    read_generators,
    root_table_document,
    write_text,
)
from .tables import render_table

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2

PARAMETER_FLAGS = ("n", "q", "p", "r", "s", "m1", "m2", "n1", "n2")
GENERATOR_FAMILIES = ("parafermion", "paraboson")
RELATION_CHOICES = [r.value for r in RelationSet] + ["rel_pf", "rel_pb"]
DEFAULT_RELATION = {"parafermion": RelationSet.PF_SAME, "paraboson": RelationSet.PB_SAME}


class UsageError(ValueError):
    """Arguments parsed but do not describe a valid request."""


def _common_options() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--family", help="Algebra or generator family")
    for name in PARAMETER_FLAGS:
        common.add_argument(f"--{name}", type=int, default=None)
    common.add_argument("--partition", help="Comma-separated index degrees for a general osp")
    common.add_argument("--output", choices=["json", "table"], default=None)
    common.add_argument("--out", type=Path, default=None, help="Write to this file instead of stdout")
    common.add_argument("--verbose", action="store_true", help="Log at DEBUG on stderr")
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common_options()
    parser = argparse.ArgumentParser(
        prog="gradedlie",
        description="Build and verify Z2xZ2-graded Lie algebras and superalgebras exactly.",
    )
    verbs = parser.add_subparsers(dest="verb", required=True)

    build_cmd = verbs.add_parser("build", parents=[common], help="Build an algebra basis")
    build_cmd.add_argument("--no-check", action="store_true", help="Skip the self-check")

    verify_cmd = verbs.add_parser("verify", parents=[common], help="Run the invariant suites")
    verify_cmd.add_argument("--sweep", action="store_true", help="Verify every desk-scale algebra")
    verify_cmd.add_argument("--max-total", type=int, default=6, help="Largest block total in the sweep")

    verbs.add_parser("roots", parents=[common], help="Root decomposition of so_q or osp")

    generate_cmd = verbs.add_parser("generate", parents=[common], help="Bracket closure of generators")
    generate_cmd.add_argument("--from-file", type=Path, default=None, help="Generator set document")

    relations_cmd = verbs.add_parser("relations", parents=[common], help="Check triple relations")
    relations_cmd.add_argument("--set", dest="relation", choices=RELATION_CHOICES, default=None)

    verbs.add_parser("export", parents=[common], help="Export structure constants")
    return parser


def spec_from_args(args: argparse.Namespace) -> AlgebraSpec:
    """Assemble an AlgebraSpec from --family and the parameter flags."""
    if args.family is None:
        raise UsageError("--family is required")
    try:
        family = AlgebraFamily(args.family)
    except ValueError:
        choices = ", ".join(f.value for f in AlgebraFamily)
        raise UsageError(f"Unknown family {args.family!r}; choose one of {choices}") from None

    params: List[int] = []
    for name in family.param_names:
        value = getattr(args, name)
        if value is None and name in ("m1", "m2") and family is AlgebraFamily.OSP:
            value = 0
        if value is None:
            raise UsageError(f"{family.value} needs --{name}")
        params.append(value)
    partition = args.partition.split(",") if args.partition else None
    return AlgebraSpec(family=family, params=params, partition=partition)


def family_from_args(args: argparse.Namespace) -> GeneratorFamily:
    """Parafermion or paraboson generators from the parameter flags."""
    if args.family not in GENERATOR_FAMILIES:
        raise UsageError(f"--family must be one of {', '.join(GENERATOR_FAMILIES)}")
    if args.family == "parafermion":
        if args.n is None or args.q is None:
            raise UsageError("parafermion needs --n and --q")
        return build_parafermions(args.n, args.q)
    if args.n1 is None or args.n2 is None:
        raise UsageError("paraboson needs --n1 and --n2")
    return build_parabosons(args.n1, args.n2)


def _output(args: argparse.Namespace) -> str:
    return args.output or get_settings().default_output


def emit(doc: BaseModel, args: argparse.Namespace) -> None:
    """Write ``doc`` as JSON or as a table to --out or stdout."""
    text = dump_document(doc) if _output(args) == "json" else render_table(doc)
    if args.out is not None:
        write_text(args.out, text)
    else:
        sys.stdout.write(text)


def cmd_build(args: argparse.Namespace) -> int:
    basis = build(spec_from_args(args), verify=not args.no_check)
    emit(algebra_document(basis), args)
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    if args.sweep:
        report = verify_sweep(desk_scale_specs(args.max_total))
    else:
        report = AlgebraVerifier(build(spec_from_args(args), verify=False)).verify()
    emit(report, args)
    return EXIT_OK if report.is_valid else EXIT_FAILED


def cmd_roots(args: argparse.Namespace) -> int:
    doc = root_table_document(build(spec_from_args(args)))
    emit(doc, args)
    return EXIT_FAILED if doc.matches_expected is False else EXIT_OK


def _matches(closure: AlgebraBasis, built: AlgebraBasis) -> bool:
    if closure.dims_by_degree != built.dims_by_degree:
        return False
    return all(
        same_span([x.mat for x in closure.component(d)], [x.mat for x in built.component(d)])
        for d in built.dims_by_degree
    )


def cmd_generate(args: argparse.Namespace) -> int:
    if args.from_file is not None:
        doc = GeneratorSetDocument.model_validate_json(args.from_file.read_text(encoding="utf-8"))
        generators = read_generators(doc)
        partition = DegreePartition.from_strings(doc.partition)
        closure = generate_closure(generators, doc.convention, partition)
        emit(closure_document(str(args.from_file), len(generators), closure, None), args)
        return EXIT_OK

    fam = family_from_args(args)
    generators = fam.generators()
    closure = generate_closure(generators, fam.convention)
    matches = _matches(closure, build(fam.spec, verify=False))
    source = f"{fam.kind.value} generators of {fam.spec.label}"
    emit(closure_document(source, len(generators), closure, matches), args)
    return EXIT_OK if matches else EXIT_FAILED


def cmd_relations(args: argparse.Namespace) -> int:
    if args.relation in ("rel_pf", "rel_pb"):
        relation_template(args.relation).verify()
    fam = family_from_args(args)
    relation = RelationSet(args.relation) if args.relation else DEFAULT_RELATION[args.family]
    report: RelationReport = verify_relations(fam, relation)
    emit(report, args)
    return EXIT_OK if report.passed else EXIT_FAILED


def cmd_export(args: argparse.Namespace) -> int:
    basis = build(spec_from_args(args))
    if _output(args) == "table":
        emit(constants_document(basis, structure_constants(basis)), args)
        return EXIT_OK
    text = export_structure_constants(basis, args.out)
    if args.out is None:
        sys.stdout.write(text)
    return EXIT_OK


COMMANDS: Dict[str, Callable[[argparse.Namespace], int]] = {
    "build": cmd_build,
    "verify": cmd_verify,
    "roots": cmd_roots,
    "generate": cmd_generate,
    "relations": cmd_relations,
    "export": cmd_export,
}


def configure_logging(verbose: bool) -> None:
    level = logging.DEBUG if verbose else get_settings().log_level
    logging.basicConfig(
        level=level,
        stream=sys.stderr,
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
    )


def run(argv: Optional[List[str]] = None) -> int:
    """Parse ``argv`` and dispatch the verb; return the process exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code == 0 else EXIT_USAGE

    configure_logging(args.verbose)
    try:
        return COMMANDS[args.verb](args)
    except ClosureCheckError as e:
        logger.debug(f"{args.verb} self-check failed", exc_info=True)
        print(f"gradedlie {args.verb}: {e}", file=sys.stderr)
        return EXIT_FAILED
    except (ValueError, ValidationError, OSError) as e:
        logger.debug(f"{args.verb} failed", exc_info=True)
        message = e.errors()[0]["msg"] if isinstance(e, ValidationError) else str(e)
        print(f"gradedlie {args.verb}: {message}", file=sys.stderr)
        return EXIT_USAGE
