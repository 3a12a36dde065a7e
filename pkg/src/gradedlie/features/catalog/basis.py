"""Homogeneous bases of graded matrix algebras."""

import itertools
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from ...errors import HomogeneityError, PartitionMismatchError
from ...models.algebra import AlgebraSpec
from ..algebra import GradedMatrix, graded_bracket
from ..exact import EchelonSpan, Scalar
from ..grading import Degree, DegreePartition, SignConvention, all_degrees


def sort_key(x: GradedMatrix) -> Tuple[Degree, Tuple[int, int]]:
    """Degree in canonical order, then the leading matrix-unit position."""
    leading = x.mat.leading()
    return (x.degree or Degree(0, 0), leading[0] if leading else (0, 0))


@dataclass
class AlgebraBasis:
    """An ordered homogeneous basis of a graded matrix algebra."""

    spec: Optional[AlgebraSpec]
    partition: DegreePartition
    convention: SignConvention
    basis: List[GradedMatrix]
    dims_by_degree: Dict[Degree, int] = field(default_factory=dict)
    _span: Optional[EchelonSpan] = field(default=None, init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        for x in self.basis:
            if x.degree is None:
                raise HomogeneityError(f"Basis element {x!r} is not homogeneous")
            if x.partition != self.partition:
                raise PartitionMismatchError("Basis element over a different partition")
        if not self.dims_by_degree:
            self.dims_by_degree = {d: 0 for d in all_degrees()}
            for x in self.basis:
                self.dims_by_degree[x.degree] += 1

    def __len__(self) -> int:
        return len(self.basis)

    @property
    def dimension(self) -> int:
        return len(self.basis)

    @property
    def size(self) -> int:
        return len(self.partition)

    @property
    def label(self) -> str:
        return self.spec.label if self.spec is not None else f"closure[{self.partition}]"

    @property
    def span(self) -> EchelonSpan:
        if self._span is None:
            span = EchelonSpan(self.size)
            for x in self.basis:
                span.add(x.mat)
            self._span = span
        return self._span

    def component(self, degree: Degree) -> List[GradedMatrix]:
        """Basis elements of the given degree, in basis order."""
        return [x for x in self.basis if x.degree == degree]

    def degrees(self) -> List[Degree]:
        return [x.degree for x in self.basis]

    def contains(self, x: GradedMatrix) -> bool:
        return self.span.contains(x.mat)

    def coordinates(self, x: GradedMatrix) -> List[Scalar]:
        """Exact coefficients of x in this basis; raises SpanEscapeError outside the span."""
        return self.span.coordinates(x.mat)

    def is_independent(self) -> bool:
        return len(self.span) == len(self.basis)

    def bracket(self, alpha: int, beta: int) -> GradedMatrix:
        """Bracket of two basis elements by 0-based index."""
        return graded_bracket(self.basis[alpha], self.basis[beta], self.convention)

    def closure_failures(self) -> List[Tuple[int, int]]:
        """0-based pairs whose bracket leaves the span."""
        failures = []
        for alpha, beta in itertools.product(range(len(self.basis)), repeat=2):
            if not self.span.contains(self.bracket(alpha, beta).mat):
                failures.append((alpha, beta))
        return failures

    def check_closure(self) -> bool:
        return not self.closure_failures()

    def dims_as_strings(self) -> Dict[str, int]:
        return {str(d): self.dims_by_degree.get(d, 0) for d in all_degrees()}
