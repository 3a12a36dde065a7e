"""Conversion of computed objects into wire documents."""

import json
import logging
from pathlib import Path
from typing import List, Optional, Tuple

from pydantic import BaseModel

from ...config import get_settings
from ...models.algebra import (
    AlgebraDocument,
    BasisElementModel,
    ClosureDocument,
    GeneratorSetDocument,
    MatrixEntry,
    ScalarModel,
)
from ...models.structure import (
    RootRow,
    RootTableDocument,
    StructureConstantRecord,
    StructureConstantsDocument,
)
from ..algebra import GradedMatrix
from ..catalog import AlgebraBasis
from ..exact import Matrix
from ..grading import Degree, DegreePartition
from ..structure import (
    RootDatum,
    StructureConstants,
    compare_root_tables,
    constants_from_records,
    coordinate_name,
    expected_root_table,
    flatten_constants,
    positive_and_simple_roots,
    root_decomposition,
    root_label,
    structure_constants,
)

logger = logging.getLogger(__name__)


def matrix_entries(mat: Matrix) -> List[MatrixEntry]:
    """Nonzero entries in row-major order, 1-based."""
    return [
        MatrixEntry(row=i + 1, col=j + 1, value=ScalarModel.from_scalar(value))
        for (i, j), value in sorted(mat.entries.items())
    ]


def entries_to_matrix(n: int, entries: List[MatrixEntry]) -> Matrix:
    return Matrix(n, {(e.row - 1, e.col - 1): e.value.to_scalar() for e in entries})


def basis_elements(basis: List[GradedMatrix]) -> List[BasisElementModel]:
    return [
        BasisElementModel(index=index, degree=str(x.degree), entries=matrix_entries(x.mat))
        for index, x in enumerate(basis, start=1)
    ]


def algebra_document(a: AlgebraBasis) -> AlgebraDocument:
    assert a.spec is not None
    return AlgebraDocument(
        spec=a.spec,
        size=a.size,
        partition=a.partition.to_strings(),
        dimension=a.dimension,
        dims=a.dims_as_strings(),
        basis=basis_elements(a.basis),
    )


def _root_row(datum: RootDatum, name: str) -> RootRow:
    return RootRow(
        root=list(datum.root),
        label=root_label(datum.root, name),
        degree=str(datum.degree),
        vector=matrix_entries(datum.vector.mat),
    )


def root_table_document(a: AlgebraBasis) -> RootTableDocument:
    """Roots, positive roots by degree and simple roots of ``a``.

    ``matches_expected`` is left unset for families without a known table.
    """
    assert a.spec is not None
    name = coordinate_name(a.spec)
    data = [d for d in root_decomposition(a) if not d.is_zero]
    system = positive_and_simple_roots(a)
    try:
        matches: Optional[bool] = not compare_root_tables(data, expected_root_table(a))
    except ValueError:
        matches = None
    return RootTableDocument(
        spec=a.spec,
        coordinates=name,
        rank=len(data[0].root) if data else 0,
        roots=[_root_row(d, name) for d in data],
        positive={
            str(degree): [root_label(r, name) for r in roots]
            for degree, roots in system.positive_by_degree.items()
        },
        simple=[_root_row(d, name) for d in system.simple],
        matches_expected=matches,
    )


def closure_document(
    source: str, generators: int, closure: AlgebraBasis, matches_build: Optional[bool]
) -> ClosureDocument:
    return ClosureDocument(
        source=source,
        generators=generators,
        convention=closure.convention,
        partition=closure.partition.to_strings(),
        dimension=closure.dimension,
        dims=closure.dims_as_strings(),
        matches_build=matches_build,
        basis=basis_elements(closure.basis),
    )


def read_generators(doc: GeneratorSetDocument) -> List[GradedMatrix]:
    partition = DegreePartition.from_strings(doc.partition)
    return [
        GradedMatrix(entries_to_matrix(len(partition), entries), partition)
        for entries in doc.generators
    ]


def constants_document(a: AlgebraBasis, constants: StructureConstants) -> StructureConstantsDocument:
    records = [
        StructureConstantRecord(
            alpha=alpha + 1, beta=beta + 1, gamma=gamma + 1, value=ScalarModel.from_scalar(value)
        )
        for alpha, beta, gamma, value in flatten_constants(constants)
    ]
    return StructureConstantsDocument(
        spec=a.spec,
        convention=a.convention,
        dimension=a.dimension,
        degrees=[str(d) for d in a.degrees()],
        records=records,
    )


def export_structure_constants(a: AlgebraBasis, path: Optional[Path] = None) -> str:
    """Serialize the structure constants of ``a``; also write them to ``path`` if given."""
    text = dump_document(constants_document(a, structure_constants(a)))
    if path is not None:
        write_text(path, text)
    return text


def load_structure_constants(path: Path) -> Tuple[StructureConstantsDocument, StructureConstants]:
    """Read an exported file back into 0-based structure constants."""
    doc = StructureConstantsDocument.model_validate_json(Path(path).read_text(encoding="utf-8"))
    constants = constants_from_records(
        [(r.alpha - 1, r.beta - 1, r.gamma - 1, r.value.to_scalar()) for r in doc.records]
    )
    return doc, constants


def document_degrees(doc: StructureConstantsDocument) -> List[Degree]:
    return [Degree.parse(d) for d in doc.degrees]


def dump_document(doc: BaseModel) -> str:
    """JSON in model field order with the configured indent."""
    return json.dumps(doc.model_dump(mode="json"), indent=get_settings().json_indent) + "\n"


def write_text(path: Path, text: str) -> None:
    Path(path).write_text(text, encoding="utf-8")
    logger.info(f"Wrote {path}")
