"""Linear algebra over Z2^n: bit-vector group elements, echelon bases,
spans, membership tests, and orthogonal complements."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

MAX_SPAN_RANK = 20


class DimensionMismatchError(ValueError):
    """Operands live in Z2^n for different n."""


# ---------------------------------------------------------------------------
# Integer-level primitives.  A vector is an n-bit int with component g_1 at
# bit 0; a basis is a tuple of ints in reduced row-echelon form with strictly
# increasing pivots.  These are shared with the structured state backend.
# ---------------------------------------------------------------------------


def lowest_set_bit(bits: int) -> int:
    if bits == 0:
        raise ValueError("zero vector has no pivot")
    return (bits & -bits).bit_length() - 1


def reduce_bits(bits: int, rows: Sequence[int]) -> int:
    """Reduce a vector modulo RREF rows; result is the canonical coset label."""
    for row in rows:
        if bits >> lowest_set_bit(row) & 1:
            bits ^= row
    return bits


def insert_bits(rows: Sequence[int], bits: int) -> tuple[int, ...]:
    """Insert a vector into RREF rows, returning new RREF rows (unchanged if
    the vector is already in the span)."""
    residue = reduce_bits(bits, rows)
    if residue == 0:
        return tuple(rows)
    pivot = lowest_set_bit(residue)
    updated = [row ^ residue if row >> pivot & 1 else row for row in rows]
    updated.append(residue)
    updated.sort(key=lowest_set_bit)
    return tuple(updated)


def echelon_rows(vectors: Iterable[int]) -> tuple[int, ...]:
    rows: tuple[int, ...] = ()
    for v in vectors:
        rows = insert_bits(rows, v)
    return rows


def nullspace_rows(rows: Sequence[int], n: int) -> tuple[int, ...]:
    """RREF basis of {g | g.row = 0 mod 2 for all rows}."""
    pivots = [lowest_set_bit(r) for r in rows]
    pivot_set = set(pivots)
    out = []
    for free in range(n):
        if free in pivot_set:
            continue
        vec = 1 << free
        for row, pivot in zip(rows, pivots):
            if row >> free & 1:
                vec |= 1 << pivot
        out.append(vec)
    return echelon_rows(out)


def span_iter(rows: Sequence[int]) -> Iterator[int]:
    """Yield all 2^len(rows) combinations of the rows."""
    span = [0]
    for row in rows:
        span.extend(x ^ row for x in span)
    return iter(span)


def completion_rows(sub_rows: Sequence[int], super_rows: Sequence[int]) -> tuple[int, ...]:
    """Vectors extending span(sub_rows) to span(super_rows)."""
    acc = tuple(sub_rows)
    out = []
    for v in super_rows:
        grown = insert_bits(acc, v)
        if grown != acc:
            out.append(v)
            acc = grown
    return tuple(out)


# ---------------------------------------------------------------------------
# Value types.
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class GroupElement:
    """Element of Z2^n stored as an n-bit integer; component g_1 is bit 0."""

    bits: int
    n: int

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"dimension must be >= 1, got {self.n}")
        if not 0 <= self.bits < (1 << self.n):
            raise ValueError(f"bits {self.bits:#x} out of range for n={self.n}")

    @classmethod
    def zero(cls, n: int) -> GroupElement:
        return cls(0, n)

    @classmethod
    def from_bits(cls, bit_seq: Iterable[int]) -> GroupElement:
        value = 0
        length = 0
        for i, b in enumerate(bit_seq):
            if b not in (0, 1):
                raise ValueError(f"bit value {b!r} is not 0 or 1")
            value |= b << i
            length = i + 1
        return cls(value, length)

    @classmethod
    def from_string(cls, text: str) -> GroupElement:
        """Parse the textual "g1 g2 ... gn" encoding, e.g. "110"."""
        if not text or any(ch not in "01" for ch in text):
            raise ValueError(f"invalid bitstring {text!r}")
        return cls.from_bits(int(ch) for ch in text)

    def to_string(self) -> str:
        return "".join("1" if self.bits >> i & 1 else "0" for i in range(self.n))

    def bit(self, index: int) -> int:
        """Component g_{index+1}."""
        if not 0 <= index < self.n:
            raise IndexError(index)
        return self.bits >> index & 1

    @property
    def is_zero(self) -> bool:
        return self.bits == 0

    def pivot(self) -> int:
        """Index of the lowest-index 1 component."""
        return lowest_set_bit(self.bits)

    def __xor__(self, other: GroupElement) -> GroupElement:
        _check_dims(self, other)
        return GroupElement(self.bits ^ other.bits, self.n)

    def __str__(self) -> str:
        return self.to_string()


def _check_dims(g: GroupElement, h: GroupElement) -> None:
    if g.n != h.n:
        raise DimensionMismatchError(f"dimensions differ: {g.n} vs {h.n}")


def dot(g: GroupElement, h: GroupElement) -> int:
    """Bilinear form (sum_i g_i h_i) mod 2."""
    _check_dims(g, h)
    return (g.bits & h.bits).bit_count() & 1


@dataclass(frozen=True)
class Gf2Basis:
    """Linearly independent vectors in row-echelon form (pivots strictly
    increasing); the canonical representation of a subgroup of Z2^n."""

    n: int
    vectors: tuple[GroupElement, ...]

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"dimension must be >= 1, got {self.n}")
        last_pivot = -1
        for v in self.vectors:
            if v.n != self.n:
                raise DimensionMismatchError(f"vector dimension {v.n} != {self.n}")
            if v.is_zero:
                raise ValueError("basis contains the zero vector")
            p = v.pivot()
            if p <= last_pivot:
                raise ValueError("pivots are not strictly increasing")
            last_pivot = p

    @classmethod
    def empty(cls, n: int) -> Gf2Basis:
        return cls(n, ())

    @classmethod
    def from_rows(cls, rows: Sequence[int], n: int) -> Gf2Basis:
        return cls(n, tuple(GroupElement(r, n) for r in rows))

    @property
    def rank(self) -> int:
        return len(self.vectors)

    @property
    def span_order(self) -> int:
        return 1 << self.rank

    def rows(self) -> tuple[int, ...]:
        return tuple(v.bits for v in self.vectors)

    def pivots(self) -> tuple[int, ...]:
        return tuple(v.pivot() for v in self.vectors)

    def __iter__(self) -> Iterator[GroupElement]:
        return iter(self.vectors)

    def __len__(self) -> int:
        return len(self.vectors)


def extract_basis(elements: Iterable[GroupElement], n: int | None = None) -> Gf2Basis:
    """Gaussian elimination: a canonical echelon basis spanning <elements>.

    The dimension is inferred from the elements; pass n explicitly when the
    iterable may be empty.
    """
    rows: tuple[int, ...] = ()
    for g in elements:
        if n is None:
            n = g.n
        elif g.n != n:
            raise DimensionMismatchError(f"vector dimension {g.n} != {n}")
        rows = insert_bits(rows, g.bits)
    if n is None:
        raise ValueError("dimension required for an empty generating set")
    return Gf2Basis.from_rows(rows, n)


def orthogonal_complement(basis: Gf2Basis) -> Gf2Basis:
    """Canonical basis of {g | dot(g, b) = 0 for every b in the basis}."""
    rows = echelon_rows(basis.rows())
    return Gf2Basis.from_rows(nullspace_rows(rows, basis.n), basis.n)


def contains(basis: Gf2Basis, g: GroupElement) -> bool:
    """Membership of g in the span of the basis."""
    if g.n != basis.n:
        raise DimensionMismatchError(f"dimensions differ: {g.n} vs {basis.n}")
    return reduce_bits(g.bits, echelon_rows(basis.rows())) == 0


def enumerate_span(basis: Gf2Basis) -> set[GroupElement]:
    """All 2^rank subset sums of the basis; guarded against large ranks."""
    if basis.rank > MAX_SPAN_RANK:
        raise ValueError(f"rank {basis.rank} exceeds enumeration limit {MAX_SPAN_RANK}")
    return {GroupElement(bits, basis.n) for bits in span_iter(basis.rows())}


def random_basis(n: int, rank: int, rng) -> Gf2Basis:
    """Random rank-r subgroup basis, drawn by rejection over random vectors."""
    if not 0 <= rank <= n:
        raise ValueError(f"rank {rank} out of range for n={n}")
    rows: tuple[int, ...] = ()
    while len(rows) < rank:
        candidate = int(rng.integers(1, 1 << n))
        rows = insert_bits(rows, candidate)
    return Gf2Basis.from_rows(rows, n)
