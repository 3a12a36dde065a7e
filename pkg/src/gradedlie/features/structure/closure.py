"""Bracket closure of a generating set."""

import logging
from typing import Dict, List, Optional, Sequence

from ..algebra import GradedMatrix, graded_bracket, homogeneous_components
from ..catalog import AlgebraBasis, sort_key
from ..exact import EchelonSpan, Matrix, rref
from ..grading import Degree, DegreePartition, SignConvention, all_degrees

logger = logging.getLogger(__name__)


def canonical_basis(elements: Sequence[GradedMatrix]) -> List[GradedMatrix]:
    """Reduced echelon basis of each homogeneous component of the span.

    The result depends only on the span, not on the order of ``elements``.
    """
    if not elements:
        return []
    partition = elements[0].partition
    n = len(partition)
    by_degree: Dict[Degree, List[Matrix]] = {}
    for x in elements:
        for degree, part in homogeneous_components(x).items():
            by_degree.setdefault(degree, []).append(part.mat)

    result: List[GradedMatrix] = []
    for degree in all_degrees():
        rows = [{i * n + j: v for (i, j), v in mat.entries.items()} for mat in by_degree.get(degree, [])]
        for _, row in rref(rows):
            entries = {divmod(column, n): value for column, value in row.items()}
            result.append(GradedMatrix(Matrix(n, entries), partition, degree))
    result.sort(key=sort_key)
    return result


def generate_closure(
    generators: Sequence[GradedMatrix],
    conv: SignConvention,
    partition: Optional[DegreePartition] = None,
) -> AlgebraBasis:
    """Smallest bracket-closed subspace containing ``generators``.

    Generators are split into homogeneous components first. Each round
    brackets the newly found elements with everything found so far and keeps
    the brackets that enlarge the span; the loop stops at the fixpoint.
    An empty generating set gives the zero subalgebra over ``partition``.
    """
    if partition is None:
        partition = generators[0].partition if generators else DegreePartition(())
    span = EchelonSpan(len(partition))
    found: List[GradedMatrix] = []
    fresh: List[GradedMatrix] = []
    for g in generators:
        for part in homogeneous_components(g).values():
            if span.add(part.mat):
                found.append(part)
                fresh.append(part)

    rounds = 0
    while fresh:
        rounds += 1
        produced: List[GradedMatrix] = []
        for x in fresh:
            for y in list(found):
                z = graded_bracket(x, y, conv)
                if span.add(z.mat):
                    found.append(z)
                    produced.append(z)
        logger.debug(f"Closure round {rounds}: {len(produced)} new, dimension {len(found)}")
        fresh = produced

    basis = canonical_basis(found)
    logger.info(f"Closure of {len(generators)} generators has dimension {len(basis)}")
    return AlgebraBasis(None, partition, conv, basis)

