"""Structure constants of an algebra in its ordered basis."""

import itertools
import logging
from typing import Dict, List, Sequence, Tuple

from ..catalog import AlgebraBasis
from ..exact import Matrix, Scalar, linear_combination
from ..exact.scalar import ZERO
from ..grading import Degree, SignConvention

logger = logging.getLogger(__name__)

# (alpha, beta) -> {gamma: c}, 0-based, zero constants omitted
StructureConstants = Dict[Tuple[int, int], Dict[int, Scalar]]


def structure_constants(a: AlgebraBasis) -> StructureConstants:
    """c with [[e_alpha, e_beta]] = sum_gamma c[alpha, beta][gamma] e_gamma.

    Raises SpanEscapeError if some bracket leaves the span of the basis.
    """
    constants: StructureConstants = {}
    for alpha, beta in itertools.product(range(a.dimension), repeat=2):
        bracket = a.bracket(alpha, beta)
        if bracket.is_zero:
            continue
        coordinates = a.coordinates(bracket)
        constants[(alpha, beta)] = {g: c for g, c in enumerate(coordinates) if c}
    logger.debug(f"{a.label}: {len(constants)} nonzero brackets")
    return constants


def flatten_constants(constants: StructureConstants) -> List[Tuple[int, int, int, Scalar]]:
    """Sorted (alpha, beta, gamma, value) records."""
    return sorted(
        (alpha, beta, gamma, value)
        for (alpha, beta), row in constants.items()
        for gamma, value in row.items()
    )


def constants_from_records(records: Sequence[Tuple[int, int, int, Scalar]]) -> StructureConstants:
    constants: StructureConstants = {}
    for alpha, beta, gamma, value in records:
        if value:
            constants.setdefault((alpha, beta), {})[gamma] = value
    return constants


def rebuild_bracket_from_constants(
    a: AlgebraBasis, constants: StructureConstants, alpha: int, beta: int
) -> Matrix:
    """sum_gamma c[alpha, beta][gamma] e_gamma as a matrix."""
    row = constants.get((alpha, beta), {})
    return linear_combination(((value, a.basis[gamma].mat) for gamma, value in row.items()), a.size)


def antisymmetry_failures(
    constants: StructureConstants, degrees: Sequence[Degree], conv: SignConvention
) -> List[Tuple[int, int]]:
    """Pairs violating c[alpha, beta] = -(-1)^{a.b} c[beta, alpha]."""
    failures = []
    for alpha, beta in itertools.product(range(len(degrees)), repeat=2):
        if beta < alpha:
            continue
        sign = -conv.sign(degrees[alpha], degrees[beta])
        forward = constants.get((alpha, beta), {})
        backward = constants.get((beta, alpha), {})
        if forward != {g: v * sign for g, v in backward.items()}:
            failures.append((alpha, beta))
    return failures


def _compose(
    constants: StructureConstants, alpha: int, row: Dict[int, Scalar], left: bool
) -> Dict[int, Scalar]:
    # [[e_alpha, v]] for left, [[v, e_alpha]] otherwise, with v given by coordinates
    total: Dict[int, Scalar] = {}
    for delta, value in row.items():
        key = (alpha, delta) if left else (delta, alpha)
        for epsilon, c in constants.get(key, {}).items():
            total[epsilon] = total.get(epsilon, ZERO) + value * c
    return {k: v for k, v in total.items() if v}


def jacobi_failures_from_constants(
    constants: StructureConstants, degrees: Sequence[Degree], conv: SignConvention
) -> List[Tuple[int, int, int]]:
    """Triples violating the graded Jacobi identity written in structure constants."""
    failures = []
    for alpha, beta, gamma in itertools.product(range(len(degrees)), repeat=3):
        left = _compose(constants, alpha, constants.get((beta, gamma), {}), left=True)
        first = _compose(constants, gamma, constants.get((alpha, beta), {}), left=False)
        second = _compose(constants, beta, constants.get((alpha, gamma), {}), left=True)
        sign = conv.sign(degrees[alpha], degrees[beta])
        right = dict(first)
        for epsilon, value in second.items():
            right[epsilon] = right.get(epsilon, ZERO) + value * sign
        right = {k: v for k, v in right.items() if v}
        if left != right:
            failures.append((alpha, beta, gamma))
    return failures
