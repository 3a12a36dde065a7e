"""Aligned text renderings of the CLI documents."""

from typing import Any, Callable, Dict, List

import pandas as pd
from pydantic import BaseModel

from ...models.algebra import AlgebraDocument, ClosureDocument, MatrixEntry
from ...models.relations import RelationReport
from ...models.structure import RootTableDocument, StructureConstantsDocument
from ...models.validation import VerificationReport


def _entries_text(entries: List[MatrixEntry]) -> str:
    return " + ".join(f"({e.value.to_scalar()})e{e.row},{e.col}" for e in entries) or "0"


def _frame_text(frame: pd.DataFrame) -> str:
    if frame.empty:
        return "(empty)\n"
    return frame.to_string(index=False) + "\n"


def _dims_frame(dims: Dict[str, int]) -> pd.DataFrame:
    return pd.DataFrame({"degree": list(dims), "dim": list(dims.values())})


def algebra_table(doc: AlgebraDocument) -> str:
    header = f"{doc.spec.label}  size {doc.size}  dimension {doc.dimension}\n"
    basis = pd.DataFrame(
        [(x.index, x.degree, _entries_text(x.entries)) for x in doc.basis],
        columns=["index", "degree", "element"],
    )
    return header + _frame_text(_dims_frame(doc.dims)) + "\n" + _frame_text(basis)


def closure_table(doc: ClosureDocument) -> str:
    header = (
        f"closure of {doc.generators} generator(s) from {doc.source}: "
        f"dimension {doc.dimension}, matches build: {doc.matches_build}\n"
    )
    return header + _frame_text(_dims_frame(doc.dims))


def root_table(doc: RootTableDocument) -> str:
    simple = {row.label for row in doc.simple}
    frame = pd.DataFrame(
        [(row.label, row.degree, row.label in simple, _entries_text(row.vector)) for row in doc.roots],
        columns=["root", "degree", "simple", "vector"],
    )
    header = f"{doc.spec.label}  rank {doc.rank}  matches expected: {doc.matches_expected}\n"
    return header + _frame_text(frame)


def constants_table(doc: StructureConstantsDocument) -> str:
    frame = pd.DataFrame(
        [(r.alpha, r.beta, r.gamma, str(r.value.to_scalar())) for r in doc.records],
        columns=["alpha", "beta", "gamma", "c"],
    )
    return _frame_text(frame)


def relation_table(report: RelationReport) -> str:
    header = f"{report.relation.value}: {report.checked} checked, {len(report.failures)} failed\n"
    if not report.failures:
        return header
    frame = pd.DataFrame(
        [
            (tuple(f.indices), tuple(f.signs), _entries_text(f.expected), _entries_text(f.got))
            for f in report.failures
        ],
        columns=["indices", "signs", "expected", "got"],
    )
    return header + _frame_text(frame)


def report_table(report: VerificationReport) -> str:
    frame = pd.DataFrame(
        [(s.target, s.name, s.checked, len(s.failures), len(s.warnings)) for s in report.suites],
        columns=["target", "suite", "checked", "failures", "warnings"],
    )
    lines = [_frame_text(frame)]
    for suite in report.suites:
        lines.extend(f"{f.code}: {f.message}\n" for f in suite.failures)
    lines.extend(f"warning {w.code}: {w.message}\n" for w in report.warnings)
    lines.append(f"valid: {report.is_valid}\n")
    return "".join(lines)


RENDERERS: Dict[type, Callable[[Any], str]] = {
    AlgebraDocument: algebra_table,
    ClosureDocument: closure_table,
    RootTableDocument: root_table,
    StructureConstantsDocument: constants_table,
    RelationReport: relation_table,
    VerificationReport: report_table,
}


def render_table(doc: BaseModel) -> str:
    return RENDERERS[type(doc)](doc)
