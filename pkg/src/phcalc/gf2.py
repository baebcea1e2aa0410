"""Dense exact linear algebra over the two-element field.

Every matrix is immutable after construction and safe to share across
threads.  Rows are stored as Python int bitsets (bit ``j`` holds the entry
in column ``j``), so a row operation is a single XOR regardless of width.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence


@dataclass(frozen=True)
class Gf2Matrix:
    """A ``rows x cols`` matrix with entries in {0, 1}, arithmetic mod 2.

    Either dimension may be zero; empty matrices behave as the usual
    degenerate cases (rank 0, stacking identities, zero products).
    Values are compared and hashed structurally.
    """

    rows: int
    cols: int
    row_bits: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.rows < 0 or self.cols < 0:
            raise ValueError(f"negative dimensions: {self.rows}x{self.cols}")
        if len(self.row_bits) != self.rows:
            raise ValueError(
                f"expected {self.rows} row bitsets, got {len(self.row_bits)}"
            )
        limit = 1 << self.cols
        if any(bits < 0 or bits >= limit for bits in self.row_bits):
            raise ValueError(f"row bitset out of range for {self.cols} columns")

    # ------------------------------------------------------------------
    # Constructors

    @classmethod
    def zero(cls, rows: int, cols: int) -> Gf2Matrix:
        """All-zero matrix of the given shape."""
        return cls(rows, cols, (0,) * rows)

    @classmethod
    def identity(cls, n: int) -> Gf2Matrix:
        """n x n matrix with 1s exactly on the diagonal."""
        return cls(n, n, tuple(1 << i for i in range(n)))

    @classmethod
    def from_rows(
        cls, entries: Sequence[Sequence[int]], cols: int | None = None
    ) -> Gf2Matrix:
        """Build a matrix from nested 0/1 sequences.

        ``cols`` is required when ``entries`` is empty and must otherwise
        match the (uniform) row length.
        """
        if not entries:
            if cols is None:
                raise ValueError("cols is required for a matrix with no rows")
            return cls(0, cols, ())
        width = len(entries[0])
        if cols is not None and cols != width:
            raise ValueError(f"cols={cols} does not match row length {width}")
        bits = []
        for row in entries:
            if len(row) != width:
                raise ValueError("ragged rows")
            acc = 0
            for j, value in enumerate(row):
                if value not in (0, 1):
                    raise ValueError(f"entry {value!r} is not 0 or 1")
                acc |= value << j
            bits.append(acc)
        return cls(len(entries), width, tuple(bits))

    # ------------------------------------------------------------------
    # Element access

    def __getitem__(self, key: tuple[int, int]) -> int:
        i, j = key
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(f"({i}, {j}) out of range for {self.rows}x{self.cols}")
        return (self.row_bits[i] >> j) & 1

    def to_rows(self) -> list[list[int]]:
        """Entries as nested lists, row major."""
        return [
            [(bits >> j) & 1 for j in range(self.cols)] for bits in self.row_bits
        ]

    def column_bits(self) -> list[int]:
        """Column bitsets (bit ``i`` of entry ``k`` = entry at row i, col k)."""
        cols = [0] * self.cols
        for i, bits in enumerate(self.row_bits):
            rem = bits
            while rem:
                low = rem & -rem
                cols[low.bit_length() - 1] |= 1 << i
                rem ^= low
        return cols

    def is_zero(self) -> bool:
        return not any(self.row_bits)

    # ------------------------------------------------------------------
    # Arithmetic

    def multiply(self, other: Gf2Matrix) -> Gf2Matrix:
        """Matrix product mod 2; requires ``self.cols == other.rows``."""
        if self.cols != other.rows:
            raise ValueError(
                f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}"
            )
        out = []
        for bits in self.row_bits:
            acc = 0
            rem = bits
            while rem:
                low = rem & -rem
                acc ^= other.row_bits[low.bit_length() - 1]
                rem ^= low
            out.append(acc)
        return Gf2Matrix(self.rows, other.cols, tuple(out))

    def __matmul__(self, other: Gf2Matrix) -> Gf2Matrix:
        return self.multiply(other)

    def hstack(self, other: Gf2Matrix) -> Gf2Matrix:
        """Adjoin the columns of ``other`` to the right of ``self``."""
        if self.rows != other.rows:
            raise ValueError(
                f"cannot stack {self.rows}x{self.cols} beside {other.rows}x{other.cols}"
            )
        merged = tuple(
            a | (b << self.cols) for a, b in zip(self.row_bits, other.row_bits)
        )
        return Gf2Matrix(self.rows, self.cols + other.cols, merged)

    def rank(self) -> int:
        """Dimension of the row space (= column space) over GF(2).

        Gaussian elimination, rows processed top to bottom; each row's
        pivot is its first nonzero column after reduction against the
        pivots found so far.  The input is never modified.
        """
        pivots: dict[int, int] = {}
        for bits in self.row_bits:
            cur = bits
            while cur:
                lead = (cur & -cur).bit_length() - 1
                row = pivots.get(lead)
                if row is None:
                    pivots[lead] = cur
                    break
                cur ^= row
        return len(pivots)

    def kernel_basis(self) -> Gf2Matrix:
        """Basis of the null space {x : self @ x = 0}, as matrix columns.

        Returns:
            A ``cols x z`` matrix with ``z = cols - rank``.  Kernel vectors
            are ordered by their free column index (ascending) and each has
            a 1 in its own free position, so the output is deterministic.
        """
        # Reduced row echelon form, kept as {pivot column -> row bits}.
        # Invariant: every stored row has 0 in all other pivot columns.
        pivots: dict[int, int] = {}
        for bits in self.row_bits:
            cur = bits
            for col, row in pivots.items():
                if (cur >> col) & 1:
                    cur ^= row
            if cur == 0:
                continue
            lead = (cur & -cur).bit_length() - 1
            for col, row in pivots.items():
                if (row >> lead) & 1:
                    pivots[col] = row ^ cur
            pivots[lead] = cur

        free_cols = [c for c in range(self.cols) if c not in pivots]
        kernel_rows = [0] * self.cols
        for idx, free in enumerate(free_cols):
            kernel_rows[free] |= 1 << idx
            for pivot_col, row in pivots.items():
                if (row >> free) & 1:
                    kernel_rows[pivot_col] |= 1 << idx
        return Gf2Matrix(self.cols, len(free_cols), tuple(kernel_rows))

    # ------------------------------------------------------------------
    # Rendering

    def __str__(self) -> str:
        return "\n".join(
            "".join("1" if (bits >> j) & 1 else "0" for j in range(self.cols))
            for bits in self.row_bits
        )

    def __repr__(self) -> str:
        return f"Gf2Matrix({self.rows}x{self.cols})"
