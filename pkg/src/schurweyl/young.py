"""Exact combinatorics of partitions, Young diagrams and standard tableaux.

Bound and dimension computations run in arbitrary-precision integer and
rational arithmetic; floating point enters only when taking logarithms.
"""

from __future__ import annotations

import ast
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterator, NamedTuple


class Box(NamedTuple):
    """Cell of a Young diagram, addressed by 1-based (row, col)."""

    row: int
    col: int

    def __str__(self) -> str:
        return f"({self.row},{self.col})"


@dataclass(frozen=True)
class YoungDiagram:
    """Partition drawn as left-justified rows of boxes.

    ``rows`` holds the weakly decreasing positive row lengths; column
    lengths (the conjugate partition) are derived from them.
    """

    rows: tuple[int, ...]

    def __post_init__(self) -> None:
        rows = tuple(int(r) for r in self.rows)
        object.__setattr__(self, "rows", rows)
        if any(r <= 0 for r in rows):
            raise ValueError(f"row lengths must be positive, got {rows}")
        if any(rows[i] < rows[i + 1] for i in range(len(rows) - 1)):
            raise ValueError(f"row lengths must be weakly decreasing, got {rows}")

    @classmethod
    def from_string(cls, text: str) -> YoungDiagram:
        """Parse a comma-separated partition such as ``"3,2,1"``."""
        parts = [p.strip() for p in text.split(",") if p.strip()]
        if not parts:
            raise ValueError(f"empty partition string: {text!r}")
        try:
            rows = tuple(int(p) for p in parts)
        except ValueError as exc:
            raise ValueError(f"malformed partition string: {text!r}") from exc
        return cls(rows)

    def __str__(self) -> str:
        return ",".join(str(r) for r in self.rows)

    @property
    def n_boxes(self) -> int:
        return sum(self.rows)

    @property
    def n_rows(self) -> int:
        return len(self.rows)

    @property
    def n_cols(self) -> int:
        return self.rows[0] if self.rows else 0

    @property
    def columns(self) -> tuple[int, ...]:
        return tuple(
            sum(1 for r in self.rows if r >= j) for j in range(1, self.n_cols + 1)
        )

    def conjugate(self) -> YoungDiagram:
        return YoungDiagram(self.columns)

    def contains(self, box: Box) -> bool:
        return 1 <= box.row <= self.n_rows and 1 <= box.col <= self.rows[box.row - 1]

    def boxes(self) -> Iterator[Box]:
        for i, r in enumerate(self.rows, start=1):
            for j in range(1, r + 1):
                yield Box(i, j)

    def remove(self, box: Box) -> YoungDiagram:
        """Diagram with a removable corner box deleted."""
        if box not in removable_boxes(self):
            raise ValueError(f"box {box} is not removable from {self}")
        rows = list(self.rows)
        rows[box.row - 1] -= 1
        return YoungDiagram(tuple(r for r in rows if r > 0))


def hook_length(diagram: YoungDiagram, box: Box) -> int:
    """Arm plus leg plus one of a box: r_i - j + c_j - i + 1."""
    if not diagram.contains(box):
        raise ValueError(f"box outside diagram: {box} not in ({diagram})")
    i, j = box
    return diagram.rows[i - 1] - j + diagram.columns[j - 1] - i + 1


def removable_boxes(diagram: YoungDiagram) -> list[Box]:
    """Corner boxes whose removal leaves a valid diagram, by increasing column.

    These are exactly the boxes at the end of both their row and their
    column, i.e. the boxes with hook length 1.
    """
    if diagram.n_boxes == 0:
        raise ValueError("empty diagram has no removable boxes")
    cols = diagram.columns
    out = []
    for l in range(1, diagram.n_cols + 1):
        box = Box(cols[l - 1], l)
        if hook_length(diagram, box) == 1:
            out.append(box)
    return out


def bound_for_box(diagram: YoungDiagram, box: Box) -> Fraction:
    """Exact product of (1 - 1/h) over the boxes above a removable box.

    The empty product (a removable box in a height-1 column) is 1.
    """
    if box not in removable_boxes(diagram):
        raise ValueError(f"box {box} is not removable from ({diagram})")
    out = Fraction(1)
    for i in range(1, diagram.columns[box.col - 1]):
        h = hook_length(diagram, Box(i, box.col))
        out *= Fraction(h - 1, h)
    return out


def max_schmidt_bound(diagram: YoungDiagram) -> tuple[Fraction, Box]:
    """Largest squared Schmidt coefficient attainable in the diagram's block.

    Returns the maximum of :func:`bound_for_box` over removable boxes and a
    witnessing box; ties are broken by the smallest column index.
    """
    if diagram.n_boxes < 2:
        raise ValueError("bound requires a diagram with at least 2 boxes")
    best: tuple[Fraction, Box] | None = None
    for box in removable_boxes(diagram):
        value = bound_for_box(diagram, box)
        if best is None or value > best[0]:
            best = (value, box)
    assert best is not None
    return best


def entropy_lower_bound(diagram: YoungDiagram) -> float:
    """Lower bound on entanglement entropy for states in the block: -ln(bound)."""
    value, _ = max_schmidt_bound(diagram)
    out = -math.log(value)
    return 0.0 if out == 0 else out


def dim_symmetric_group_irrep(diagram: YoungDiagram) -> int:
    """Number of standard tableaux: N! over the product of all hook lengths."""
    prod = 1
    for box in diagram.boxes():
        prod *= hook_length(diagram, box)
    q, r = divmod(math.factorial(diagram.n_boxes), prod)
    if r:
        raise ArithmeticError(f"hook product does not divide N! for ({diagram})")
    return q


def dim_unitary_group_irrep(diagram: YoungDiagram, d: int) -> int:
    """Product over boxes of (d + col - row) / hook, evaluated exactly.

    Zero whenever the diagram has more than ``d`` rows.
    """
    if d < 1:
        raise ValueError("local dimension must be at least 1")
    if diagram.n_boxes == 0:
        return 1
    if d < diagram.n_rows:
        return 0
    num = 1
    den = 1
    for box in diagram.boxes():
        num *= d + box.col - box.row
        den *= hook_length(diagram, box)
    q, r = divmod(num, den)
    if r:
        raise ArithmeticError(f"content product does not divide hooks for ({diagram})")
    return q


@lru_cache(maxsize=None)
def _partition_tuples(n: int, max_part: int) -> tuple[tuple[int, ...], ...]:
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, max_part), 0, -1):
        for rest in _partition_tuples(n - first, first):
            out.append((first, *rest))
    return tuple(out)


def partitions_of(n: int) -> list[YoungDiagram]:
    """All partitions of n, in descending lexicographic order."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return [YoungDiagram(p) for p in _partition_tuples(n, max(n, 1))]


def dominates(a: tuple[int, ...], b: tuple[int, ...]) -> bool:
    """Dominance order on partitions of equal weight: prefix sums of a >= those of b."""
    total_a, total_b = sum(a), sum(b)
    if total_a != total_b:
        raise ValueError("dominance compares partitions of the same integer")
    running_a = running_b = 0
    for i in range(max(len(a), len(b))):
        running_a += a[i] if i < len(a) else 0
        running_b += b[i] if i < len(b) else 0
        if running_a < running_b:
            return False
    return True


@dataclass(frozen=True)
class StandardTableau:
    """Filling of a Young diagram with 1..N increasing along rows and columns."""

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        rows = tuple(tuple(int(v) for v in row) for row in self.rows)
        object.__setattr__(self, "rows", rows)
        shape = tuple(len(r) for r in rows)
        YoungDiagram(shape)  # validates the shape
        n = sum(shape)
        if sorted(v for row in rows for v in row) != list(range(1, n + 1)):
            raise ValueError(f"entries must be a bijection onto 1..{n}")
        for row in rows:
            if any(row[i] >= row[i + 1] for i in range(len(row) - 1)):
                raise ValueError(f"entries must increase along rows: {rows}")
        for i in range(len(rows) - 1):
            for j in range(len(rows[i + 1])):
                if rows[i][j] >= rows[i + 1][j]:
                    raise ValueError(f"entries must increase down columns: {rows}")
        positions = {}
        for i, row in enumerate(rows, start=1):
            for j, v in enumerate(row, start=1):
                positions[v] = Box(i, j)
        object.__setattr__(self, "_positions", positions)

    @classmethod
    def from_string(cls, text: str) -> StandardTableau:
        """Parse bracketed rows such as ``"[[1,3],[2]]"``."""
        try:
            data = ast.literal_eval(text.strip())
        except (SyntaxError, ValueError) as exc:
            raise ValueError(f"malformed tableau string: {text!r}") from exc
        if not isinstance(data, (list, tuple)) or not all(
            isinstance(row, (list, tuple)) for row in data
        ):
            raise ValueError(f"malformed tableau string: {text!r}")
        return cls(tuple(tuple(int(v) for v in row) for row in data))

    def __str__(self) -> str:
        return "[" + ",".join(
            "[" + ",".join(str(v) for v in row) + "]" for row in self.rows
        ) + "]"

    @property
    def diagram(self) -> YoungDiagram:
        return YoungDiagram(tuple(len(r) for r in self.rows))

    @property
    def n(self) -> int:
        return sum(len(r) for r in self.rows)

    def entry(self, box: Box) -> int:
        if not (1 <= box.row <= len(self.rows) and 1 <= box.col <= len(self.rows[box.row - 1])):
            raise ValueError(f"box outside tableau: {box}")
        return self.rows[box.row - 1][box.col - 1]

    def position(self, value: int) -> Box:
        try:
            return self._positions[value]  # type: ignore[attr-defined]
        except KeyError:
            raise ValueError(f"value {value} not in tableau") from None

    def row_word(self) -> tuple[int, ...]:
        """Concatenation of the rows, top to bottom: the canonical sort key."""
        return tuple(v for row in self.rows for v in row)

    def is_row_ordered(self) -> bool:
        expect = 1
        for row in self.rows:
            for v in row:
                if v != expect:
                    return False
                expect += 1
        return True

    def is_column_ordered(self) -> bool:
        expect = 1
        for j, height in enumerate(self.diagram.columns, start=1):
            for i in range(1, height + 1):
                if self.rows[i - 1][j - 1] != expect:
                    return False
                expect += 1
        return True

    def with_swap(self, k: int) -> StandardTableau:
        """Tableau with entries k and k+1 interchanged (must stay standard)."""
        if not 1 <= k <= self.n - 1:
            raise ValueError(f"k must be in 1..{self.n - 1}")
        swap = {k: k + 1, k + 1: k}
        return StandardTableau(
            tuple(tuple(swap.get(v, v) for v in row) for row in self.rows)
        )


def _insert_value(t: StandardTableau, box: Box, value: int) -> StandardTableau:
    rows = [list(r) for r in t.rows]
    if box.row == len(rows) + 1:
        rows.append([value])
    else:
        rows[box.row - 1].append(value)
    return StandardTableau(tuple(tuple(r) for r in rows))


@lru_cache(maxsize=None)
def _standard_tableaux(diagram: YoungDiagram) -> tuple[StandardTableau, ...]:
    n = diagram.n_boxes
    if n == 0:
        return (StandardTableau(()),)
    out = []
    for box in removable_boxes(diagram):
        for sub in _standard_tableaux(diagram.remove(box)):
            out.append(_insert_value(sub, box, n))
    return tuple(sorted(out, key=StandardTableau.row_word))


def enumerate_standard_tableaux(diagram: YoungDiagram) -> list[StandardTableau]:
    """All standard tableaux of a shape, sorted by row-reading word."""
    return list(_standard_tableaux(diagram))


def row_ordered_tableau(diagram: YoungDiagram) -> StandardTableau:
    """Fill 1..N consecutively along the rows, top to bottom."""
    rows = []
    value = 1
    for r in diagram.rows:
        rows.append(tuple(range(value, value + r)))
        value += r
    return StandardTableau(tuple(rows))


def column_ordered_tableau(diagram: YoungDiagram) -> StandardTableau:
    """Fill 1..N consecutively down the columns, left to right."""
    grid: dict[Box, int] = {}
    value = 1
    for j, height in enumerate(diagram.columns, start=1):
        for i in range(1, height + 1):
            grid[Box(i, j)] = value
            value += 1
    return StandardTableau(
        tuple(tuple(grid[Box(i, j)] for j in range(1, r + 1))
              for i, r in enumerate(diagram.rows, start=1))
    )


def tableau_with_largest_in(diagram: YoungDiagram, box: Box) -> StandardTableau:
    """Tableau with N in the given removable box and 1..N-1 in column order."""
    sub = column_ordered_tableau(diagram.remove(box))
    return _insert_value(sub, box, diagram.n_boxes)


def remove_largest(t: StandardTableau) -> StandardTableau:
    """Tableau with the box containing the largest entry erased."""
    if t.n == 0:
        raise ValueError("cannot remove from an empty tableau")
    box = t.position(t.n)
    rows = [list(r) for r in t.rows]
    rows[box.row - 1].pop()
    if rows and not rows[-1]:
        rows.pop()
    return StandardTableau(tuple(tuple(r) for r in rows))


def split_tableau(
    t: StandardTableau, k: int
) -> tuple[StandardTableau, StandardTableau | None]:
    """Split a tableau into the parts holding 1..k and k+1..N.

    The first part is always a standard tableau.  The second exists only when
    the boxes holding k+1..N form a translate of a left-justified diagram; it
    is then returned anchored at the top left with k subtracted from every
    entry, and is ``None`` otherwise.
    """
    if not 1 <= k <= t.n - 1:
        raise ValueError(f"k must be in 1..{t.n - 1}")
    a_rows = tuple(
        tuple(v for v in row if v <= k) for row in t.rows if row[0] <= k
    )
    t_a = StandardTableau(a_rows)

    b_cells: dict[int, list[tuple[int, int]]] = {}
    for i, row in enumerate(t.rows, start=1):
        cells = [(j, v) for j, v in enumerate(row, start=1) if v > k]
        if cells:
            b_cells[i] = cells
    rows_present = sorted(b_cells)
    if rows_present != list(range(rows_present[0], rows_present[0] + len(rows_present))):
        return t_a, None
    start_cols = {cells[0][0] for cells in b_cells.values()}
    if len(start_cols) != 1:
        return t_a, None
    lengths = [len(b_cells[i]) for i in rows_present]
    if any(lengths[i] < lengths[i + 1] for i in range(len(lengths) - 1)):
        return t_a, None
    b_rows = tuple(tuple(v - k for _, v in b_cells[i]) for i in rows_present)
    return t_a, StandardTableau(b_rows)


def axial_distance(t: StandardTableau, k: int) -> int:
    """Content difference (col - row) between the boxes of k+1 and k.

    Equals +1 when they share a row, -1 when they share a column, and has
    absolute value at least 2 otherwise.
    """
    if not 1 <= k <= t.n - 1:
        raise ValueError(f"k must be in 1..{t.n - 1}")
    i, j = t.position(k)
    i2, j2 = t.position(k + 1)
    return (j2 - i2) - (j - i)
