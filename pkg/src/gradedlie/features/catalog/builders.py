"""Constructors for every algebra family of the catalog."""

import itertools
import logging
from typing import Callable, Dict, List, Optional, Sequence

from ...config import get_settings
from ...errors import ClosureCheckError, UnsupportedFamilyError
from ...models.algebra import AlgebraFamily, AlgebraSpec
from ..algebra import (
    FormCondition,
    GradedMatrix,
    TransposeKind,
    block_matrix,
    form_membership,
    jacobi_check,
    supertrace_weight,
)
from ..exact import Matrix, matrix_unit, nullspace, same_span
from ..exact.scalar import ZERO, Scalar
from ..grading import (
    D01,
    D10,
    D11,
    ZERO as ZERO_DEGREE,
    Degree,
    DegreePartition,
    SignConvention,
    all_degrees,
)
from .basis import AlgebraBasis, sort_key
from .blocks import SO_Q_FLIPPED_BLOCKS, flip_blocks, osp_form, so_q_form

logger = logging.getLogger(__name__)

PQRS_FAMILIES = (AlgebraFamily.GL_PQRS, AlgebraFamily.SL_PQRS, AlgebraFamily.SO_PQRS)
SUPER_FAMILIES = (AlgebraFamily.GL_SUPER, AlgebraFamily.SL_SUPER)


def canonical_partition(spec: AlgebraSpec) -> DegreePartition:
    """Index degrees used to build ``spec``."""
    if spec.family in PQRS_FAMILIES:
        return DegreePartition.gl_pqrs(*spec.params)
    if spec.family is AlgebraFamily.SO_Q:
        return DegreePartition.so_q(*spec.params)
    if spec.family in SUPER_FAMILIES:
        return DegreePartition.gl_super(*spec.params)
    if spec.partition is not None:
        return DegreePartition.from_strings(spec.partition)
    return DegreePartition.osp(*spec.params)


def is_canonical_osp(spec: AlgebraSpec) -> bool:
    """Whether ``spec`` is osp(1,0|2n1,2n2) with the displayed block form."""
    return (
        spec.family is AlgebraFamily.OSP
        and spec.params[0] == 0
        and spec.params[1] == 0
        and spec.partition is None
    )


def form_condition(spec: AlgebraSpec) -> Optional[FormCondition]:
    """The defining form condition of the family, if it has one."""
    if spec.family is AlgebraFamily.SO_Q:
        return FormCondition.so_q(*spec.params)
    if spec.family is AlgebraFamily.OSP:
        return FormCondition.osp(*spec.params)
    if spec.family is AlgebraFamily.SO_PQRS:
        return FormCondition(Matrix.identity(spec.size), TransposeKind.GRADED_TRANSPOSE)
    return None


def trace_constraint(
    partition: DegreePartition, conv: SignConvention
) -> Callable[[Matrix], Scalar]:
    """tr (LA) or Str (LSA) as a linear functional on matrices."""
    if conv is SignConvention.LIE_ALGEBRA:
        return lambda mat: mat.trace()
    weights = [supertrace_weight(d) for d in partition.index_degrees]

    def supertrace(mat: Matrix) -> Scalar:
        total = ZERO
        for (i, j), value in mat.entries.items():
            if i == j:
                total = total + value * weights[i]
        return total

    return supertrace


def graded_nullspace(
    partition: DegreePartition, constraints: Sequence[Callable]
) -> List[GradedMatrix]:
    """Solutions of linear constraints, solved one degree at a time."""
    n = len(partition)
    result: List[GradedMatrix] = []
    for degree in all_degrees():
        positions = [
            (i, j) for i in range(n) for j in range(n) if partition.degree_at(i, j) == degree
        ]
        if not positions:
            continue
        for mat in nullspace(n, constraints, positions=positions):
            result.append(GradedMatrix(mat, partition, degree))
    return result


def diagonal_difference(partition: DegreePartition, conv: SignConvention, i: int) -> GradedMatrix:
    """e_ii - c e_{i+1,i+1} with c chosen so the (super)trace vanishes; i is 1-based."""
    n = len(partition)
    factor = 1
    if conv is SignConvention.LIE_SUPERALGEBRA:
        degrees = partition.index_degrees
        factor = supertrace_weight(degrees[i - 1]) * supertrace_weight(degrees[i])
    mat = matrix_unit(n, i, i) - matrix_unit(n, i + 1, i + 1).scale(factor)
    return GradedMatrix(mat, partition, ZERO_DEGREE)


def _gl_elements(partition: DegreePartition) -> List[GradedMatrix]:
    n = len(partition)
    return [GradedMatrix.unit(partition, i, j) for i in range(1, n + 1) for j in range(1, n + 1)]


def _sl_elements(partition: DegreePartition, conv: SignConvention) -> List[GradedMatrix]:
    n = len(partition)
    off_diagonal = [
        GradedMatrix.unit(partition, i, j)
        for i in range(1, n + 1)
        for j in range(1, n + 1)
        if i != j
    ]
    diagonal = [diagonal_difference(partition, conv, i) for i in range(1, n)]
    return off_diagonal + diagonal


def _explicit_elements(matrices: List[Matrix], partition: DegreePartition) -> List[GradedMatrix]:
    # degrees are inferred; AlgebraBasis rejects mixed elements
    return [GradedMatrix(mat, partition) for mat in matrices]


def build(spec: AlgebraSpec, verify: bool = True) -> AlgebraBasis:
    """Build the ordered homogeneous basis of ``spec``.

    GL/SL families, so_q(2n+1) and osp(1,0|2n1,2n2) come from explicit block
    forms; so_{p,q,r,s}(n) and osp with even part come from the nullspace of
    the defining condition. With ``verify`` the basis is checked for
    independence, form membership and bracket closure, and the extrapolated
    osp construction also for the graded Jacobi identity.
    """
    settings = get_settings()
    if spec.size > settings.max_matrix_size:
        raise ValueError(
            f"{spec.label} needs {spec.size}x{spec.size} matrices; "
            f"the limit is {settings.max_matrix_size}"
        )

    partition = canonical_partition(spec)
    conv = spec.convention or spec.family.convention
    cond = form_condition(spec)
    extrapolated = False

    if spec.family in (AlgebraFamily.GL_PQRS, AlgebraFamily.GL_SUPER):
        elements = _gl_elements(partition)
    elif spec.family in (AlgebraFamily.SL_PQRS, AlgebraFamily.SL_SUPER):
        elements = _sl_elements(partition, conv)
    elif spec.family is AlgebraFamily.SO_Q:
        elements = _explicit_elements(so_q_form(*spec.params).elements(), partition)
    elif is_canonical_osp(spec):
        _, _, n1, n2 = spec.params
        elements = _explicit_elements(osp_form(n1, n2).elements(), partition)
    else:
        assert cond is not None
        constraints: List[Callable] = [cond.constraint(partition)]
        if spec.family is AlgebraFamily.OSP:
            constraints.append(trace_constraint(partition, conv))
            extrapolated = True
        elements = graded_nullspace(partition, constraints)

    elements.sort(key=sort_key)
    basis = AlgebraBasis(spec, partition, conv, elements)
    if verify:
        self_check(basis, cond, jacobi=extrapolated)
    logger.info(f"Built {spec.label}: dimension {basis.dimension}")
    return basis


def self_check(basis: AlgebraBasis, cond: Optional[FormCondition], jacobi: bool = False) -> None:
    """Raise ClosureCheckError unless the basis is a valid bracket-closed basis."""
    if not basis.is_independent():
        raise ClosureCheckError(f"{basis.label}: basis is linearly dependent")
    if cond is not None:
        for index, x in enumerate(basis.basis, start=1):
            if not form_membership(x, cond):
                raise ClosureCheckError(f"{basis.label}: element {index} violates the form")
    failures = basis.closure_failures()
    if failures:
        alpha, beta = failures[0]
        raise ClosureCheckError(
            f"{basis.label}: bracket of elements {alpha + 1} and {beta + 1} leaves the span"
        )
    if jacobi:
        for x, y, z in itertools.product(basis.basis, repeat=3):
            if not jacobi_check(x, y, z, basis.convention):
                raise ClosureCheckError(f"{basis.label}: Jacobi identity fails")


def dims_formula_so_q(n: int, q: int) -> Dict[Degree, int]:
    """Closed-form component dimensions of so_q(2n+1).

    The (0,0) entry is the complement against the total n(2n+1).
    """
    if not 1 <= q <= n - 1:
        raise ValueError(f"so_q(2n+1) requires 1 <= q <= n-1, got n={n}, q={q}")
    odd = {D01: 2 * q, D10: 2 * (n - q), D11: 4 * q * (n - q)}
    return {ZERO_DEGREE: n * (2 * n + 1) - sum(odd.values()), **odd}


def printed_dim_00_so_q(n: int, q: int) -> int:
    """The (0,0) dimension as printed in the literature, 2n^2 - n - 4q(n-q)^2."""
    return 2 * n * n - n - 4 * q * (n - q) ** 2


def cartan_basis(a: AlgebraBasis) -> List[GradedMatrix]:
    """The diagonal Cartan elements of ``a``, all of degree (0,0)."""
    spec = a.spec
    if spec is None:
        raise UnsupportedFamilyError("A generated closure has no designated Cartan subalgebra")
    p = a.partition
    n = len(p)
    family = spec.family
    if family is AlgebraFamily.SO_Q:
        rank = spec.params[0]
        return [_diagonal(p, i, rank + i) for i in range(1, rank + 1)]
    if family is AlgebraFamily.OSP:
        if not is_canonical_osp(spec):
            raise UnsupportedFamilyError(f"No diagonal Cartan listed for {spec.label}")
        rank = spec.params[2] + spec.params[3]
        return [_diagonal(p, i + 1, rank + i + 1) for i in range(1, rank + 1)]
    if family in (AlgebraFamily.GL_PQRS, AlgebraFamily.GL_SUPER):
        return [GradedMatrix.unit(p, i, i) for i in range(1, n + 1)]
    if family in (AlgebraFamily.SL_PQRS, AlgebraFamily.SL_SUPER):
        return [diagonal_difference(p, a.convention, i) for i in range(1, n)]
    raise UnsupportedFamilyError(
        f"{spec.label} has no diagonal Cartan subalgebra inside the algebra"
    )


def _diagonal(partition: DegreePartition, i: int, j: int) -> GradedMatrix:
    n = len(partition)
    return GradedMatrix(matrix_unit(n, i, i) - matrix_unit(n, j, j), partition, ZERO_DEGREE)


def classical_so_odd(n: int) -> List[Matrix]:
    """Classical so(2n+1) for K0 = [[0,I,0],[I,0,0],[0,0,1]] and the ordinary transpose."""
    form = block_matrix([n, n, 1], {(0, 1): 1, (1, 0): 1, (2, 2): 1})
    return nullspace(2 * n + 1, [lambda a: a.transpose() @ form + form @ a])


def matches_classical_after_flip(n: int, q: int) -> bool:
    """Whether negating the flipped blocks maps so_q(2n+1) onto classical so(2n+1)."""
    sizes = (q, n - q, q, n - q, 1)
    basis = build(AlgebraSpec.so_q(n, q), verify=False)
    flipped = [flip_blocks(x.mat, sizes, SO_Q_FLIPPED_BLOCKS) for x in basis.basis]
    return same_span(flipped, classical_so_odd(n))


def desk_scale_specs(max_total: int = 6) -> List[AlgebraSpec]:
    """Algebras covered by the exhaustive sweep.

    Block orders that only permute equivalent degrees are listed once:
    q >= r >= s for the pqrs families and n1 >= n2 for the super families.
    """
    specs: List[AlgebraSpec] = []
    for p, q, r, s in itertools.product(range(max_total + 1), repeat=4):
        total = p + q + r + s
        if not 1 <= total <= max_total or not q >= r >= s:
            continue
        for family in PQRS_FAMILIES:
            specs.append(AlgebraSpec(family=family, params=[p, q, r, s]))
    for n in range(2, 5):
        for q in range(1, n):
            specs.append(AlgebraSpec.so_q(n, q))
    for m1, m2, n1, n2 in itertools.product(range(max_total + 1), repeat=4):
        total = m1 + m2 + n1 + n2
        if not 1 <= total <= max_total or n1 < n2:
            continue
        for family in SUPER_FAMILIES:
            specs.append(AlgebraSpec(family=family, params=[m1, m2, n1, n2]))
    for n1 in range(1, 3):
        for n2 in range(1, 4 - n1):
            specs.append(AlgebraSpec.osp(n1, n2))
    return specs
