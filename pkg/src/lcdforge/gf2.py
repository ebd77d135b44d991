"""Bit-packed GF(2) linear algebra and exact analytics for binary linear codes.

Vectors are Python ints with bit i holding coordinate i, so a codeword of
length n <= 64 fits in one machine word.  A code is stored as the canonical
reduced row echelon form of its generator matrix, which makes dataclass
equality coincide with row-space equality.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

import numpy as np

DEFAULT_ENUM_CAP = 24


class DimensionCapExceeded(ValueError):
    """Raised when a 2^k enumeration would exceed the configured cap."""


def vec_weight(bits: int) -> int:
    return bits.bit_count()


def vec_dot(a: int, b: int) -> int:
    return (a & b).bit_count() & 1


@dataclass(frozen=True)
class BitVector:
    """A length-n vector over GF(2), packed into an int."""

    n: int
    bits: int

    def __post_init__(self):
        if not 0 <= self.bits < (1 << self.n):
            raise ValueError(f"bits out of range for length {self.n}")

    def weight(self) -> int:
        return self.bits.bit_count()

    def dot(self, other: "BitVector") -> int:
        if self.n != other.n:
            raise ValueError("length mismatch")
        return vec_dot(self.bits, other.bits)

    def __xor__(self, other: "BitVector") -> "BitVector":
        if self.n != other.n:
            raise ValueError("length mismatch")
        return BitVector(self.n, self.bits ^ other.bits)

    @classmethod
    def from_string(cls, s: str) -> "BitVector":
        if set(s) - {"0", "1"}:
            raise ValueError("characters outside {0,1}")
        bits = 0
        for i, ch in enumerate(s):
            if ch == "1":
                bits |= 1 << i
        return cls(len(s), bits)

    def to01(self) -> str:
        return "".join("1" if (self.bits >> i) & 1 else "0" for i in range(self.n))


def rref(rows, n: int):
    """Reduced row echelon form over GF(2).

    Returns (reduced rows, rank, pivot columns).  The output keeps the input
    row count, with zero rows moved to the bottom; the nonzero rows span the
    same row space as the input.
    """
    work = list(rows)
    pivots = []
    r = 0
    for col in range(n):
        bit = 1 << col
        src = next((i for i in range(r, len(work)) if work[i] & bit), None)
        if src is None:
            continue
        work[r], work[src] = work[src], work[r]
        for i in range(len(work)):
            if i != r and work[i] & bit:
                work[i] ^= work[r]
        pivots.append(col)
        r += 1
    return tuple(work), r, tuple(pivots)


@dataclass(frozen=True)
class BinaryCode:
    """A binary [n, k] linear code held as a canonical RREF generator matrix."""

    n: int
    rows: tuple[int, ...]

    def __post_init__(self):
        if self.n < 0 or self.n > 64:
            raise ValueError("length must be in 0..64")
        reduced, rank, _ = rref(self.rows, self.n)
        object.__setattr__(self, "rows", tuple(reduced[:rank]))

    @classmethod
    def from_rows(cls, n: int, rows) -> "BinaryCode":
        return cls(n, tuple(rows))

    @classmethod
    def zero(cls, n: int) -> "BinaryCode":
        return cls(n, ())

    @classmethod
    def full(cls, n: int) -> "BinaryCode":
        return cls(n, tuple(1 << i for i in range(n)))

    @property
    def k(self) -> int:
        return len(self.rows)

    def contains(self, bits: int) -> bool:
        v = bits
        for row in self.rows:
            if v & (row & -row):
                v ^= row
        return v == 0

    def codewords(self, cap: int = DEFAULT_ENUM_CAP):
        """All 2^k codewords in Gray-code order (the zero word first)."""
        if self.k > cap:
            raise DimensionCapExceeded(f"k={self.k} exceeds enumeration cap {cap}")
        word = 0
        yield word
        for i in range(1, 1 << self.k):
            word ^= self.rows[(i & -i).bit_length() - 1]
            yield word

    def shortened_to_prefix(self, m: int) -> "BinaryCode":
        """Restriction to the first m coordinates; rows must vanish beyond them."""
        mask = (1 << m) - 1
        if any(row & ~mask for row in self.rows):
            raise ValueError("rows are not supported on the prefix")
        return BinaryCode(m, self.rows)

    def padded_to(self, n: int) -> "BinaryCode":
        if n < self.n:
            raise ValueError("cannot pad to a shorter length")
        return BinaryCode(n, self.rows)


def dual_code(C: BinaryCode) -> BinaryCode:
    """The [n, n-k] dual code under the Euclidean inner product."""
    reduced, rank, pivots = rref(C.rows, C.n)
    pivot_set = set(pivots)
    rows = []
    for free in range(C.n):
        if free in pivot_set:
            continue
        v = 1 << free
        for i, p in enumerate(pivots):
            if (reduced[i] >> free) & 1:
                v |= 1 << p
        rows.append(v)
    return BinaryCode(C.n, tuple(rows))


def intersect(A: BinaryCode, B: BinaryCode) -> BinaryCode:
    """The largest code contained in both A and B."""
    if A.n != B.n:
        raise ValueError("length mismatch")
    joined = dual_code(A).rows + dual_code(B).rows
    return dual_code(BinaryCode(A.n, joined))


def hull(C: BinaryCode) -> BinaryCode:
    """The hull C intersected with its dual; C is LCD iff this is zero."""
    return intersect(C, dual_code(C))


def gram_rank(C: BinaryCode) -> int:
    rows = C.rows
    gram = []
    for gi in rows:
        acc = 0
        for j, gj in enumerate(rows):
            if vec_dot(gi, gj):
                acc |= 1 << j
        gram.append(acc)
    _, rank, _ = rref(gram, C.k)
    return rank


def hull_dimension(C: BinaryCode) -> int:
    """dim(C intersect C-dual), via the rank of the Gram matrix G*G^T."""
    return C.k - gram_rank(C)


_NUMPY_SPLIT = 16


def _low_span(rows):
    span = np.zeros(1, dtype=np.uint64)
    for r in rows:
        span = np.concatenate([span, span ^ np.uint64(r)])
    return span


def _weight_counts(C: BinaryCode) -> np.ndarray:
    """Exact weight distribution of all 2^k codewords (full enumeration)."""
    counts = np.zeros(C.n + 1, dtype=object)
    if C.k <= _NUMPY_SPLIT:
        word = 0
        counts[0] += 1
        for i in range(1, 1 << C.k):
            word ^= C.rows[(i & -i).bit_length() - 1]
            counts[word.bit_count()] += 1
        return counts
    low = _low_span(C.rows[:_NUMPY_SPLIT])
    high_rows = C.rows[_NUMPY_SPLIT:]
    word = 0
    chunk = np.bincount(np.bitwise_count(low), minlength=C.n + 1)
    counts += chunk
    for i in range(1, 1 << len(high_rows)):
        word ^= high_rows[(i & -i).bit_length() - 1]
        chunk = np.bincount(np.bitwise_count(low ^ np.uint64(word)), minlength=C.n + 1)
        counts += chunk
    return counts


@dataclass(frozen=True)
class WeightEnumerator:
    """Coefficients A_0..A_n of the weight enumerator polynomial."""

    coeffs: tuple[int, ...]

    def __post_init__(self):
        if not self.coeffs or self.coeffs[0] != 1:
            raise ValueError("A_0 must be 1")
        if any(a < 0 for a in self.coeffs):
            raise ValueError("coefficients must be nonnegative")

    @property
    def n(self) -> int:
        return len(self.coeffs) - 1

    @property
    def total(self) -> int:
        return sum(self.coeffs)

    def min_distance(self):
        for i, a in enumerate(self.coeffs):
            if i and a:
                return i
        return None

    def to_pairs(self):
        return [[i, a] for i, a in enumerate(self.coeffs) if a > 0]

    @classmethod
    def from_pairs(cls, n: int, pairs) -> "WeightEnumerator":
        coeffs = [0] * (n + 1)
        for i, a in pairs:
            coeffs[i] = a
        return cls(tuple(coeffs))

    def macwilliams_dual(self) -> "WeightEnumerator":
        """Weight enumerator of the dual code via the MacWilliams transform."""
        n = self.n
        size = self.total
        if size & (size - 1):
            raise ValueError("coefficient total is not a power of two")
        dual = []
        for j in range(n + 1):
            acc = 0
            for i, a in enumerate(self.coeffs):
                if not a:
                    continue
                kraw = sum(
                    (-1) ** l * comb(i, l) * comb(n - i, j - l)
                    for l in range(max(0, j - (n - i)), min(i, j) + 1)
                )
                acc += a * kraw
            q, r = divmod(acc, size)
            if r:
                raise ValueError("transform is not integral; invalid enumerator")
            dual.append(q)
        return WeightEnumerator(tuple(dual))

    def __str__(self):
        terms = []
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            if i == 0:
                terms.append(str(a))
            else:
                coef = "" if a == 1 else str(a)
                terms.append(f"{coef}y^{i}" if i > 1 else f"{coef}y")
        return "+".join(terms) if terms else "0"


def weight_enumerator(C: BinaryCode, cap: int = DEFAULT_ENUM_CAP) -> WeightEnumerator:
    """Exact weight enumerator by full codeword enumeration."""
    if C.k > cap:
        raise DimensionCapExceeded(f"k={C.k} exceeds enumeration cap {cap}")
    counts = _weight_counts(C)
    return WeightEnumerator(tuple(int(c) for c in counts))


def min_distance(C: BinaryCode, cap: int = DEFAULT_ENUM_CAP):
    """Exact minimum nonzero codeword weight; None for the zero code."""
    if C.k > cap:
        raise DimensionCapExceeded(f"k={C.k} exceeds enumeration cap {cap}")
    if C.k == 0:
        return None
    if C.k <= _NUMPY_SPLIT:
        best = C.n + 1
        word = 0
        for i in range(1, 1 << C.k):
            word ^= C.rows[(i & -i).bit_length() - 1]
            w = word.bit_count()
            if w < best:
                best = w
        return best
    counts = _weight_counts(C)
    for i in range(1, C.n + 1):
        if counts[i]:
            return i
    raise AssertionError("nonzero code with no nonzero word")


def has_min_distance(C: BinaryCode, d: int, cap: int = DEFAULT_ENUM_CAP) -> bool:
    """True iff every nonzero codeword has weight >= d (early-exit scan)."""
    if C.k > cap:
        raise DimensionCapExceeded(f"k={C.k} exceeds enumeration cap {cap}")
    if C.k <= _NUMPY_SPLIT:
        word = 0
        for i in range(1, 1 << C.k):
            word ^= C.rows[(i & -i).bit_length() - 1]
            if word.bit_count() < d:
                return False
        return True
    low = _low_span(C.rows[:_NUMPY_SPLIT])
    high_rows = C.rows[_NUMPY_SPLIT:]
    if int(np.bitwise_count(low[1:]).min()) < d:
        return False
    word = 0
    for i in range(1, 1 << len(high_rows)):
        word ^= high_rows[(i & -i).bit_length() - 1]
        if int(np.bitwise_count(low ^ np.uint64(word)).min()) < d:
            return False
    return True


def coset_min_weight(C: BinaryCode, shift: int, cap: int = DEFAULT_ENUM_CAP) -> int:
    """Minimum weight over the coset shift + C."""
    if C.k > cap:
        raise DimensionCapExceeded(f"k={C.k} exceeds enumeration cap {cap}")
    best = shift.bit_count()
    word = shift
    for i in range(1, 1 << C.k):
        word ^= C.rows[(i & -i).bit_length() - 1]
        w = word.bit_count()
        if w < best:
            best = w
    return best


def parse_code_file(text: str) -> BinaryCode:
    """Parse the plain-text code format: a header "n k" then k rows of 0/1."""
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise ValueError("empty code file")
    header = lines[0].split()
    if len(header) != 2:
        raise ValueError("header must be 'n k'")
    try:
        n, k = int(header[0]), int(header[1])
    except ValueError:
        raise ValueError("header must contain two integers") from None
    if not 0 <= n <= 64 or k < 0:
        raise ValueError("unsupported code dimensions")
    body = lines[1:]
    if len(body) != k:
        raise ValueError(f"expected {k} generator rows, found {len(body)}")
    rows = []
    for ln in body:
        ln = ln.strip()
        if len(ln) != n:
            raise ValueError(f"row length {len(ln)} differs from n={n}")
        rows.append(BitVector.from_string(ln).bits)
    code = BinaryCode(n, tuple(rows))
    if code.k != k:
        raise ValueError("generator rows are not linearly independent")
    return code


def format_code_file(C: BinaryCode) -> str:
    lines = [f"{C.n} {C.k}"]
    lines.extend(BitVector(C.n, row).to01() for row in C.rows)
    return "\n".join(lines) + "\n"
