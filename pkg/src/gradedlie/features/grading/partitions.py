"""Index partitions assigning a degree to every row/column of a matrix.

The degree of the matrix unit e_ij is d_i + d_j. The canonical partitions below
reproduce the block labels of the displayed matrix forms of each family.
"""

from dataclasses import dataclass
from typing import Iterable, List, Sequence, Tuple

from .degrees import D01, D10, D11, ZERO, Degree


@dataclass(frozen=True, slots=True)
class DegreePartition:
    """Ordered degrees of the n basis vectors of the graded space V."""

    index_degrees: Tuple[Degree, ...]

    def __post_init__(self) -> None:
        if not all(isinstance(d, Degree) for d in self.index_degrees):
            raise TypeError("index_degrees must contain Degree values")

    def __len__(self) -> int:
        return len(self.index_degrees)

    def __str__(self) -> str:
        return ",".join(str(d) for d in self.index_degrees)

    def degree_at(self, i: int, j: int) -> Degree:
        """Degree of e_ij with 0-based indices."""
        return self.index_degrees[i] + self.index_degrees[j]

    def to_strings(self) -> List[str]:
        return [str(d) for d in self.index_degrees]

    @classmethod
    def from_degrees(cls, degrees: Iterable[Degree]) -> "DegreePartition":
        return cls(tuple(degrees))

    @classmethod
    def from_strings(cls, labels: Iterable[str]) -> "DegreePartition":
        return cls(tuple(Degree.parse(label) for label in labels))

    @classmethod
    def parse(cls, text: str) -> "DegreePartition":
        """Parse a comma separated list such as "00,10,01,10,01"."""
        labels = [part for part in text.split(",") if part.strip()]
        if not labels:
            raise ValueError("Partition string is empty")
        return cls.from_strings(labels)

    @classmethod
    def gl_pqrs(cls, p: int, q: int, r: int, s: int) -> "DegreePartition":
        """((0,0)^p, (0,1)^q, (1,0)^r, (1,1)^s) for gl_{p,q,r,s}(n)."""
        _check_counts(p=p, q=q, r=r, s=s)
        return cls((ZERO,) * p + (D01,) * q + (D10,) * r + (D11,) * s)

    @classmethod
    def so_q(cls, n: int, q: int) -> "DegreePartition":
        """Partition of sl_{2q,1,0,2n-2q}(2n+1) in the so_q(2n+1) index order.

        Indices 1..q and n+1..n+q carry (0,0), q+1..n and n+q+1..2n carry
        (1,1), and 2n+1 carries (0,1).
        """
        if not 1 <= q <= n - 1:
            raise ValueError(f"so_q(2n+1) requires 1 <= q <= n-1, got n={n}, q={q}")
        half = (ZERO,) * q + (D11,) * (n - q)
        return cls(half + half + (D01,))

    @classmethod
    def gl_super(cls, m1: int, m2: int, n1: int, n2: int) -> "DegreePartition":
        """((0,0)^m1, (1,1)^m2, (1,0)^n1, (0,1)^n2) for gl(m1,m2|n1,n2)."""
        _check_counts(m1=m1, m2=m2, n1=n1, n2=n2)
        return cls((ZERO,) * m1 + (D11,) * m2 + (D10,) * n1 + (D01,) * n2)

    @classmethod
    def osp(cls, m1: int, m2: int, n1: int, n2: int) -> "DegreePartition":
        """Partition of osp(2m1+1,2m2|2n1,2n2) in the order of the J form.

        For m1 = m2 = 0 this is the displayed osp(1,0|2n1,2n2) partition
        ((0,0), (1,0)^n1, (0,1)^n2, (1,0)^n1, (0,1)^n2).
        """
        _check_counts(m1=m1, m2=m2, n1=n1, n2=n2)
        even = (ZERO,) * m1 + (D11,) * m2
        odd = (D10,) * n1 + (D01,) * n2
        return cls(even + even + (ZERO,) + odd + odd)


def entry_degree(partition: DegreePartition, i: int, j: int) -> Degree:
    """Degree of e_ij with 1-based indices as in matrix-unit notation."""
    n = len(partition)
    if not (1 <= i <= n and 1 <= j <= n):
        raise IndexError(f"Position ({i}, {j}) outside a partition of length {n}")
    return partition.degree_at(i - 1, j - 1)


def block_degrees(
    partition: DegreePartition, sizes: Sequence[int]
) -> List[List[Degree]]:
    """Degree label of every block for the given block sizes.

    Raises ValueError if some block is not uniform, i.e. the sizes do not
    follow the partition's runs. Empty blocks are skipped.
    """
    if sum(sizes) != len(partition):
        raise ValueError(f"Block sizes {list(sizes)} do not cover {len(partition)} indices")
    starts = []
    offset = 0
    for size in sizes:
        starts.append((offset, size))
        offset += size
    starts = [(start, size) for start, size in starts if size > 0]

    labels: List[List[Degree]] = []
    for row_start, row_size in starts:
        row: List[Degree] = []
        for col_start, col_size in starts:
            found = {
                partition.degree_at(i, j)
                for i in range(row_start, row_start + row_size)
                for j in range(col_start, col_start + col_size)
            }
            if len(found) != 1:
                raise ValueError(
                    f"Block at ({row_start}, {col_start}) mixes degrees {sorted(found)}"
                )
            row.append(found.pop())
        labels.append(row)
    return labels


def _check_counts(**counts: int) -> None:
    for name, value in counts.items():
        if value < 0:
            raise ValueError(f"{name} must be non-negative, got {value}")
    if sum(counts.values()) == 0:
        raise ValueError("The graded space must have positive dimension")
