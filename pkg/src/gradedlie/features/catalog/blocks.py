"""Explicit block forms of so_q(2n+1) and osp(1,0|2n1,2n2).

Blocks are numbered from 1 in the order of the defining form. A free block
contributes one basis element per entry; when it is tied, the same element
also carries sign * (entry transposed) in the tied block. A paired block is
sign * its own transpose (sign -1 antisymmetric, +1 symmetric).
"""

from dataclasses import dataclass, field
from typing import Dict, List, Sequence, Tuple

from ..exact import Matrix
from ..exact.matrix import Position
from ..exact.scalar import Scalar

Block = Tuple[int, int]


@dataclass(frozen=True)
class BlockForm:
    """Which blocks of a block matrix are free, tied or self-paired."""

    sizes: Tuple[int, ...]
    free: Tuple[Block, ...]
    ties: Dict[Block, Tuple[Block, int]] = field(default_factory=dict)
    paired: Dict[Block, int] = field(default_factory=dict)

    @property
    def offsets(self) -> List[int]:
        return [sum(self.sizes[:k]) for k in range(len(self.sizes))]

    @property
    def n(self) -> int:
        return sum(self.sizes)

    def _position(self, block: Block, a: int, b: int) -> Position:
        offsets = self.offsets
        return (offsets[block[0] - 1] + a, offsets[block[1] - 1] + b)

    def elements(self) -> List[Matrix]:
        """One matrix per free entry plus one per independent paired entry."""
        result: List[Matrix] = []
        for block in self.free:
            rows, cols = self.sizes[block[0] - 1], self.sizes[block[1] - 1]
            tie = self.ties.get(block)
            for a in range(rows):
                for b in range(cols):
                    entries: Dict[Position, Scalar] = {self._position(block, a, b): Scalar(1)}
                    if tie is not None:
                        target, sign = tie
                        entries[self._position(target, b, a)] = Scalar(sign)
                    result.append(Matrix(self.n, entries))
        for block, sign in self.paired.items():
            size = self.sizes[block[0] - 1]
            for a in range(size):
                for b in range(a, size):
                    if a == b and sign < 0:
                        continue
                    entries = {self._position(block, a, b): Scalar(1)}
                    if a != b:
                        entries[self._position(block, b, a)] = Scalar(sign)
                    result.append(Matrix(self.n, entries))
        return result


def so_q_form(n: int, q: int) -> BlockForm:
    """so_q(2n+1) on blocks of sizes (q, n-q, q, n-q, 1)."""
    return BlockForm(
        sizes=(q, n - q, q, n - q, 1),
        free=((1, 1), (1, 2), (1, 4), (1, 5), (2, 1), (2, 2), (2, 5), (3, 2), (3, 5), (4, 5)),
        ties={
            (1, 4): ((2, 3), 1),
            (1, 1): ((3, 3), -1),
            (2, 1): ((3, 4), 1),
            (3, 2): ((4, 1), 1),
            (1, 2): ((4, 3), 1),
            (2, 2): ((4, 4), -1),
            (3, 5): ((5, 1), -1),
            (4, 5): ((5, 2), -1),
            (1, 5): ((5, 3), -1),
            (2, 5): ((5, 4), -1),
        },
        paired={(1, 3): -1, (2, 4): -1, (3, 1): -1, (4, 2): -1},
    )


def osp_form(n1: int, n2: int) -> BlockForm:
    """osp(1,0|2n1,2n2) on blocks of sizes (1, n1, n2, n1, n2)."""
    return BlockForm(
        sizes=(1, n1, n2, n1, n2),
        free=((1, 2), (1, 3), (1, 4), (1, 5), (2, 2), (2, 3), (2, 5), (3, 2), (3, 3), (4, 3)),
        ties={
            (1, 4): ((2, 1), 1),
            (1, 5): ((3, 1), 1),
            (2, 5): ((3, 4), -1),
            (1, 2): ((4, 1), -1),
            (2, 2): ((4, 4), -1),
            (3, 2): ((4, 5), 1),
            (1, 3): ((5, 1), -1),
            (4, 3): ((5, 2), -1),
            (2, 3): ((5, 4), 1),
            (3, 3): ((5, 5), -1),
        },
        paired={(2, 4): 1, (3, 5): 1, (4, 2): 1, (5, 3): 1},
    )


# Blocks of so_q(2n+1) whose sign differs from classical so(2n+1) in the same index order.
SO_Q_FLIPPED_BLOCKS: Tuple[Block, ...] = ((4, 3), (3, 4), (2, 3), (4, 1))


def flip_blocks(mat: Matrix, sizes: Sequence[int], blocks: Sequence[Block]) -> Matrix:
    """Negate the listed 1-based blocks of ``mat``."""
    offsets = [sum(sizes[:k]) for k in range(len(sizes))]
    bounds = [(offsets[k], offsets[k] + sizes[k]) for k in range(len(sizes))]
    flipped = set()
    for row, col in blocks:
        r0, r1 = bounds[row - 1]
        c0, c1 = bounds[col - 1]
        flipped.update((i, j) for i in range(r0, r1) for j in range(c0, c1))
    return Matrix(mat.n, {p: (-v if p in flipped else v) for p, v in mat.entries.items()})
