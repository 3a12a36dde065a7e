"""Root decomposition relative to a diagonal Cartan subalgebra.

Weights of matrix units under diagonal Cartan elements are differences of
diagonal entries, so every basis element splits into weight components
without solving eigenproblems. Positive roots are those whose first nonzero
coordinate is positive; simple roots are positive roots that are not the sum
of two positive roots, listed in descending lexicographic order.
"""

import logging
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from ...errors import NotAnEigenvectorError, UnsupportedFamilyError
from ...models.algebra import AlgebraFamily, AlgebraSpec
from ..algebra import GradedMatrix, graded_bracket
from ..catalog import AlgebraBasis, cartan_basis, is_canonical_osp
from ..exact import Matrix, Scalar, normalize_leading, rref, span_basis
from ..exact.matrix import Position
from ..grading import D01, D10, D11, ZERO, Degree, DegreePartition, SignConvention

logger = logging.getLogger(__name__)

Root = Tuple[int, ...]


@dataclass(frozen=True)
class RootDatum:
    """A root, the degree of its root space and a root vector."""

    root: Root
    degree: Degree
    vector: GradedMatrix

    @property
    def is_zero(self) -> bool:
        return not any(self.root)

    @property
    def is_positive(self) -> bool:
        return is_positive(self.root)


@dataclass(frozen=True)
class RootSystem:
    """Positive roots grouped by degree and the ordered simple roots."""

    positive_by_degree: Dict[Degree, List[Root]]
    simple: List[RootDatum]

    @property
    def positive(self) -> List[Root]:
        roots = [r for group in self.positive_by_degree.values() for r in group]
        return sorted(roots, reverse=True)


def is_positive(root: Root) -> bool:
    for value in root:
        if value:
            return value > 0
    return False


def coordinate_name(spec: Optional[AlgebraSpec]) -> str:
    """Dual basis name used in labels: delta for osp, eps otherwise."""
    if spec is not None and spec.family is AlgebraFamily.OSP:
        return "delta"
    return "eps"


def root_label(root: Root, name: str = "eps") -> str:
    """Readable form such as eps1-eps2 or 2delta1."""
    terms = []
    for index, value in enumerate(root, start=1):
        if not value:
            continue
        magnitude = "" if abs(value) == 1 else str(abs(value))
        sign = "-" if value < 0 else "+"
        terms.append(f"{sign}{magnitude}{name}{index}")
    if not terms:
        return "0"
    text = "".join(terms)
    return text[1:] if text.startswith("+") else text


def _diagonals(cartan: Sequence[GradedMatrix]) -> List[List[Scalar]]:
    for h in cartan:
        if any(i != j for i, j in h.mat.entries):
            raise UnsupportedFamilyError("Weights are only computed for diagonal Cartan elements")
    return [[h.mat[(i, i)] for i in range(h.n)] for h in cartan]


def _unit_weight(diagonals: List[List[Scalar]], position: Position) -> Root:
    i, j = position
    weight = []
    for diagonal in diagonals:
        value = diagonal[i] - diagonal[j]
        if not value.is_integer:
            raise NotAnEigenvectorError(f"Non-integral eigenvalue {value}")
        weight.append(int(value.r))
    return tuple(weight)


def weight_of(x: GradedMatrix, cartan: Sequence[GradedMatrix]) -> Root:
    """Eigenvalues of ad(h_i) on x for every Cartan element h_i.

    Raises NotAnEigenvectorError unless [[h_i, x]] = lambda_i x exactly for
    all i with integer lambda_i.
    """
    if x.is_zero:
        raise NotAnEigenvectorError("The zero matrix has no weight")
    conv = SignConvention.LIE_ALGEBRA
    position, value = x.mat.leading()
    weight = []
    for h in cartan:
        image = graded_bracket(h, x, conv).mat
        eigenvalue = image[position] / value
        if image != x.mat.scale(eigenvalue):
            raise NotAnEigenvectorError(f"{x!r} is not an eigenvector of ad {h!r}")
        if not eigenvalue.is_integer:
            raise NotAnEigenvectorError(f"Non-integral eigenvalue {eigenvalue}")
        weight.append(int(eigenvalue.r))
    return tuple(weight)


def root_decomposition(a: AlgebraBasis) -> List[RootDatum]:
    """All root spaces of ``a`` plus the zero-weight space.

    Nonzero roots come first in descending lexicographic order, each with a
    normalized root vector; the zero-weight vectors follow. Raises
    NotAnEigenvectorError if a nonzero root has multiplicity above one.
    """
    cartan = cartan_basis(a)
    diagonals = _diagonals(cartan)
    pieces: Dict[Tuple[Root, Degree], List[Matrix]] = {}
    for x in a.basis:
        split: Dict[Root, Dict[Position, Scalar]] = {}
        for position, value in x.mat.entries.items():
            split.setdefault(_unit_weight(diagonals, position), {})[position] = value
        for weight, entries in split.items():
            pieces.setdefault((weight, x.degree), []).append(Matrix(a.size, entries))

    nonzero: List[RootDatum] = []
    zero: List[RootDatum] = []
    multiplicity: Dict[Root, int] = {}
    for (weight, degree), mats in pieces.items():
        for mat in span_basis(mats):
            datum = RootDatum(weight, degree, GradedMatrix(normalize_leading(mat), a.partition, degree))
            if any(weight):
                multiplicity[weight] = multiplicity.get(weight, 0) + 1
                nonzero.append(datum)
            else:
                zero.append(datum)
    repeated = [w for w, count in multiplicity.items() if count > 1]
    if repeated:
        raise NotAnEigenvectorError(f"Roots with multiplicity above one: {sorted(repeated)}")

    nonzero.sort(key=lambda d: d.root, reverse=True)
    zero.sort(key=lambda d: d.vector.mat.leading()[0])
    logger.debug(f"{a.label}: {len(nonzero)} roots, zero-weight dimension {len(zero)}")
    return nonzero + zero


def positive_and_simple_roots(a: AlgebraBasis) -> RootSystem:
    """Positive roots by degree and simple roots with their root data."""
    data = [d for d in root_decomposition(a) if not d.is_zero]
    positive = [d for d in data if d.is_positive]
    roots = {d.root for d in positive}
    sums = {tuple(x + y for x, y in zip(r, s)) for r in roots for s in roots}
    simple = sorted((d for d in positive if d.root not in sums), key=lambda d: d.root, reverse=True)

    by_degree: Dict[Degree, List[Root]] = {ZERO: [], D01: [], D10: [], D11: []}
    for d in sorted(positive, key=lambda d: d.root, reverse=True):
        by_degree[d.degree].append(d.root)
    return RootSystem(positive_by_degree=by_degree, simple=simple)


def simple_root_coefficients(root: Root, simple: Sequence[Root]) -> List[int]:
    """Integer coefficients of ``root`` over the simple roots.

    Raises ValueError if the root is not an integral combination.
    """
    rhs = len(simple)
    rows = []
    for t in range(len(root)):
        row = {k: Scalar(s[t]) for k, s in enumerate(simple) if s[t]}
        if root[t]:
            row[rhs] = Scalar(root[t])
        rows.append(row)
    coefficients = [Scalar(0)] * rhs
    for pivot, row in rref(rows):
        if pivot == rhs:
            raise ValueError(f"{root} is not in the span of the simple roots")
        coefficients[pivot] = row.get(rhs, Scalar(0))
    if not all(c.is_integer for c in coefficients):
        raise ValueError(f"{root} has non-integral coefficients")
    return [int(c.r) for c in coefficients]


def _vector(partition: DegreePartition, terms: Sequence[Tuple[int, int, int]]) -> GradedMatrix:
    n = len(partition)
    entries: Dict[Position, Scalar] = {}
    for sign, i, j in terms:
        entries[(i - 1, j - 1)] = entries.get((i - 1, j - 1), Scalar(0)) + sign
    return GradedMatrix(normalize_leading(Matrix(n, entries)), partition)


def _unit_root(size: int, index: int, factor: int = 1) -> List[int]:
    root = [0] * size
    root[index - 1] += factor
    return root


def _pair_root(size: int, j: int, k: int, sj: int, sk: int) -> Root:
    root = _unit_root(size, j, sj)
    root[k - 1] += sk
    return tuple(root)


def _so_q_table(n: int, q: int, partition: DegreePartition) -> List[RootDatum]:
    def same(j: int, k: int) -> bool:
        return (j <= q) == (k <= q)

    last = 2 * n + 1
    rows: List[RootDatum] = []
    for j in range(1, n + 1):
        degree = D01 if j <= q else D10
        rows.append(RootDatum(tuple(_unit_root(n, j)), degree,
                              _vector(partition, [(1, j, last), (-1, last, j + n)])))
        rows.append(RootDatum(tuple(_unit_root(n, j, -1)), degree,
                              _vector(partition, [(1, n + j, last), (-1, last, j)])))
    for j in range(1, n + 1):
        for k in range(1, n + 1):
            if j == k:
                continue
            s = -1 if same(j, k) else 1
            degree = ZERO if same(j, k) else D11
            rows.append(RootDatum(_pair_root(n, j, k, 1, -1), degree,
                                  _vector(partition, [(1, j, k), (s, k + n, j + n)])))
            if j < k:
                rows.append(RootDatum(_pair_root(n, j, k, 1, 1), degree,
                                      _vector(partition, [(1, j, k + n), (s, k, j + n)])))
                rows.append(RootDatum(_pair_root(n, j, k, -1, -1), degree,
                                      _vector(partition, [(1, j + n, k), (s, k + n, j)])))
    return rows


def _osp_table(n1: int, n2: int, partition: DegreePartition) -> List[RootDatum]:
    big_n = n1 + n2

    def same(j: int, k: int) -> bool:
        return (j <= n1) == (k <= n1)

    rows: List[RootDatum] = []
    for j in range(1, big_n + 1):
        degree = D10 if j <= n1 else D01
        rows.append(RootDatum(tuple(_unit_root(big_n, j, -1)), degree,
                              _vector(partition, [(1, 1, j + 1), (-1, big_n + j + 1, 1)])))
        rows.append(RootDatum(tuple(_unit_root(big_n, j)), degree,
                              _vector(partition, [(1, 1, big_n + j + 1), (1, j + 1, 1)])))
    for j in range(1, big_n + 1):
        for k in range(1, big_n + 1):
            s = 1 if same(j, k) else -1
            degree = ZERO if same(j, k) else D11
            if j != k:
                rows.append(RootDatum(_pair_root(big_n, j, k, 1, -1), degree,
                                      _vector(partition, [(1, j + 1, k + 1),
                                                          (-s, big_n + k + 1, big_n + j + 1)])))
            if j <= k:
                rows.append(RootDatum(_pair_root(big_n, j, k, 1, 1), degree,
                                      _vector(partition, [(1, j + 1, big_n + k + 1),
                                                          (s, k + 1, big_n + j + 1)])))
                rows.append(RootDatum(_pair_root(big_n, j, k, -1, -1), degree,
                                      _vector(partition, [(1, big_n + j + 1, k + 1),
                                                          (s, big_n + k + 1, j + 1)])))
    return rows


def expected_root_table(a: AlgebraBasis) -> List[RootDatum]:
    """The known root table of so_q(2n+1) or osp(1,0|2n1,2n2), vectors normalized."""
    spec = a.spec
    if spec is not None and spec.family is AlgebraFamily.SO_Q:
        rows = _so_q_table(*spec.params, a.partition)
    elif spec is not None and is_canonical_osp(spec):
        rows = _osp_table(spec.params[2], spec.params[3], a.partition)
    else:
        raise UnsupportedFamilyError("Known root tables exist for so_q and osp(1,0|2n1,2n2) only")
    return sorted(rows, key=lambda d: d.root, reverse=True)


def compare_root_tables(computed: Sequence[RootDatum], expected: Sequence[RootDatum]) -> List[str]:
    """Differences between two root tables; empty when they agree.

    Zero-weight rows are ignored and root vectors are compared up to scalar.
    """
    def index(rows: Sequence[RootDatum]) -> Dict[Root, RootDatum]:
        return {d.root: d for d in rows if not d.is_zero}

    got, want = index(computed), index(expected)
    problems = []
    for root in sorted(set(got) | set(want), reverse=True):
        if root not in got:
            problems.append(f"missing root {root}")
        elif root not in want:
            problems.append(f"unexpected root {root}")
        elif got[root].degree != want[root].degree:
            problems.append(f"root {root} has degree {got[root].degree}, expected {want[root].degree}")
        elif normalize_leading(got[root].vector.mat) != normalize_leading(want[root].vector.mat):
            problems.append(f"root {root} has a different root vector")
    return problems
