"""Parafermion and paraboson generators realized as short root vectors."""

import logging
from dataclasses import dataclass
from enum import Enum
from typing import List, Tuple

from ...models.algebra import AlgebraSpec
from ..algebra import GradedMatrix
from ..exact import SQRT2, linear_combination, matrix_unit
from ..grading import DegreePartition, SignConvention

logger = logging.getLogger(__name__)

CREATION = 1
ANNIHILATION = -1


class GeneratorKind(str, Enum):
    PARAFERMION = "parafermion"
    PARABOSON = "paraboson"


@dataclass(frozen=True)
class GeneratorFamily:
    """Creation and annihilation operators of two ensembles.

    Generators are numbered from 1; those up to ``split`` form the first
    ensemble and the rest the second.
    """

    kind: GeneratorKind
    params: Tuple[int, int]
    creation: Tuple[GradedMatrix, ...]
    annihilation: Tuple[GradedMatrix, ...]
    split: int

    @property
    def count(self) -> int:
        return len(self.creation)

    @property
    def partition(self) -> DegreePartition:
        return self.creation[0].partition

    @property
    def spec(self) -> AlgebraSpec:
        if self.kind is GeneratorKind.PARAFERMION:
            n, q = self.params
            return AlgebraSpec.so_q(n, q)
        return AlgebraSpec.osp(*self.params)

    @property
    def convention(self) -> SignConvention:
        return self.spec.family.convention

    def generator(self, k: int, sign: int) -> GradedMatrix:
        """g_k^+ for sign +1 and g_k^- for sign -1, with 1-based k."""
        if not 1 <= k <= self.count:
            raise IndexError(f"Generator index {k} outside 1..{self.count}")
        return self.creation[k - 1] if sign == CREATION else self.annihilation[k - 1]

    def ensemble(self, k: int) -> int:
        return 1 if k <= self.split else 2

    def generators(self) -> List[GradedMatrix]:
        return [g for pair in zip(self.annihilation, self.creation) for g in pair]


def _root_vector(n: int, partition: DegreePartition, terms: List[Tuple[int, int, int]]) -> GradedMatrix:
    mat = linear_combination(((sign, matrix_unit(n, i, j)) for sign, i, j in terms), n)
    return GradedMatrix(mat.scale(SQRT2), partition)


def build_parafermions(n: int, q: int) -> GeneratorFamily:
    """f_k^- = sqrt2 (e_{k,2n+1} - e_{2n+1,n+k}) and f_k^+ = sqrt2 (e_{2n+1,k} - e_{n+k,2n+1}) in so_q(2n+1)."""
    spec = AlgebraSpec.so_q(n, q)
    partition = DegreePartition.so_q(n, q)
    size, last = spec.size, 2 * n + 1
    annihilation = tuple(
        _root_vector(size, partition, [(1, k, last), (-1, last, n + k)]) for k in range(1, n + 1)
    )
    creation = tuple(
        _root_vector(size, partition, [(1, last, k), (-1, n + k, last)]) for k in range(1, n + 1)
    )
    logger.debug(f"Built {2 * n} parafermion generators in {spec.label}")
    return GeneratorFamily(GeneratorKind.PARAFERMION, (n, q), creation, annihilation, split=q)


def build_parabosons(n1: int, n2: int) -> GeneratorFamily:
    """b_k^- = sqrt2 (e_{1,k+1} - e_{N+k+1,1}) and b_k^+ = sqrt2 (e_{1,N+k+1} + e_{k+1,1}), N = n1 + n2."""
    spec = AlgebraSpec.osp(n1, n2)
    partition = DegreePartition.osp(0, 0, n1, n2)
    size, big_n = spec.size, n1 + n2
    annihilation = tuple(
        _root_vector(size, partition, [(1, 1, k + 1), (-1, big_n + k + 1, 1)])
        for k in range(1, big_n + 1)
    )
    creation = tuple(
        _root_vector(size, partition, [(1, 1, big_n + k + 1), (1, k + 1, 1)])
        for k in range(1, big_n + 1)
    )
    logger.debug(f"Built {2 * big_n} paraboson generators in {spec.label}")
    return GeneratorFamily(GeneratorKind.PARABOSON, (n1, n2), creation, annihilation, split=n1)
