"""Mixed vectors and additive codes over Z2^alpha x R^beta, R = Z2 + u*Z2.

A vector has alpha binary coordinates followed by beta ring coordinates.
Both parts are bit-packed into Python integers, most significant bit
first, so that coordinate 0 of the binary part is the top bit and ring
coordinate j occupies the two bits at shift 2*(beta-1-j) (encoding from
:mod:`z2zu.ring`).  With that layout, sorting packed words sorts vectors
lexicographically: binary part first, then ring part.  That order is the
canonical order used everywhere deterministic output matters.

Scalar multiplication by c = r + u*q multiplies binary coordinates by r
and ring coordinates by c.  The inner product of v and w is

    v . w  =  u * (sum of binary products)  +  (sum of ring products)

with the first sum in Z2 and the second in R; a code's dual is taken
with respect to it.

The brute-force dual scans the full ambient module once.  The scan is
vectorised with numpy: for each generator g the map w -> g.w factors
through a parity over the binary part and an XOR-fold over the ring
part, so orthogonality against g is a boolean outer condition on the
(binary index, ring index) grid.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Sequence

import numpy as np

from .errors import (
    AmbientTooLarge,
    InternalVerificationFailure,
    MatrixParseError,
    PreconditionViolation,
    ShapeMismatch,
    TrivialCode,
)
from .ring import RingElem, parse_ring_token

__all__ = [
    "MAX_BRUTE_AMBIENT_BITS",
    "AmbientShape",
    "MixedVector",
    "AdditiveCode",
    "BinaryCode",
    "zero_vector",
    "vec_add",
    "scalar_mul",
    "inner_product",
    "lee_weight_vec",
    "gray_map",
    "gray_image",
    "gray_parameters",
    "span",
    "additive_span",
    "dual_brute",
    "min_lee_weight",
    "parse_matrix",
    "parse_matrix_file",
    "format_row",
    "format_matrix",
]

# Largest ambient 2^N scanned by dual_brute (memory: one boolean per word).
MAX_BRUTE_AMBIENT_BITS = 26


@dataclass(frozen=True)
class AmbientShape:
    """Number of binary (alpha) and ring (beta) coordinates."""

    alpha: int
    beta: int

    def __post_init__(self):
        if self.alpha < 0 or self.beta < 0:
            raise ValueError("alpha and beta must be nonnegative")
        if self.alpha + self.beta == 0:
            raise ValueError("ambient needs at least one coordinate")

    @property
    def big_n(self) -> int:
        """Binary length of the Gray image: alpha + 2*beta."""
        return self.alpha + 2 * self.beta

    @property
    def ambient_size(self) -> int:
        return 1 << self.big_n

    @cached_property
    def ring_mask(self) -> int:
        return (1 << (2 * self.beta)) - 1

    @cached_property
    def ring_a_mask(self) -> int:
        # 0b0101...01 over beta digits: the unit-coefficient bits
        return self.ring_mask // 3 if self.beta else 0

    def bin_bit(self, i: int) -> int:
        """Bit position of binary coordinate i (0 is most significant)."""
        return self.alpha - 1 - i

    def ring_shift(self, j: int) -> int:
        """Bit shift of ring coordinate j (0 is most significant)."""
        return 2 * (self.beta - 1 - j)


@dataclass(frozen=True)
class MixedVector:
    """One vector: packed binary part ``bin`` and packed ring part ``ring``."""

    shape: AmbientShape
    bin: int
    ring: int

    def __post_init__(self):
        if not 0 <= self.bin < (1 << self.shape.alpha):
            raise ValueError("binary part out of range for shape")
        if not 0 <= self.ring <= self.shape.ring_mask:
            raise ValueError("ring part out of range for shape")

    @classmethod
    def from_coords(
        cls,
        shape: AmbientShape,
        bits: Sequence[int],
        elems: Sequence[RingElem | int],
    ) -> "MixedVector":
        if len(bits) != shape.alpha or len(elems) != shape.beta:
            raise ShapeMismatch("coordinate counts do not match shape")
        b = 0
        for x in bits:
            if x not in (0, 1):
                raise ValueError(f"binary coordinate must be 0 or 1, got {x!r}")
            b = (b << 1) | x
        r = 0
        for e in elems:
            r = (r << 2) | int(RingElem(e))
        return cls(shape, b, r)

    @classmethod
    def from_packed(cls, shape: AmbientShape, word: int) -> "MixedVector":
        return cls(shape, word >> (2 * shape.beta), word & shape.ring_mask)

    @property
    def packed(self) -> int:
        """Single-integer form; compares in canonical vector order."""
        return (self.bin << (2 * self.shape.beta)) | self.ring

    @property
    def bin_bits(self) -> tuple[int, ...]:
        a = self.shape.alpha
        return tuple((self.bin >> (a - 1 - i)) & 1 for i in range(a))

    @property
    def ring_elems(self) -> tuple[RingElem, ...]:
        b = self.shape.beta
        return tuple(
            RingElem((self.ring >> (2 * (b - 1 - j))) & 3) for j in range(b)
        )

    @property
    def is_zero(self) -> bool:
        return self.bin == 0 and self.ring == 0

    def __add__(self, other: "MixedVector") -> "MixedVector":
        return vec_add(self, other)

    def __rmul__(self, c) -> "MixedVector":
        return scalar_mul(c, self)

    def lee_weight(self) -> int:
        return lee_weight_vec(self)

    def gray(self) -> tuple[int, ...]:
        return gray_map(self)

    def __str__(self) -> str:
        return format_row(self)


def zero_vector(shape: AmbientShape) -> MixedVector:
    return MixedVector(shape, 0, 0)


def _check_same_shape(v: MixedVector, w: MixedVector) -> None:
    if v.shape != w.shape:
        raise ShapeMismatch(f"shapes differ: {v.shape} vs {w.shape}")


def vec_add(v: MixedVector, w: MixedVector) -> MixedVector:
    """Coordinatewise sum; both parts are exponent-2 groups, so XOR."""
    _check_same_shape(v, w)
    return MixedVector(v.shape, v.bin ^ w.bin, v.ring ^ w.ring)


def _ring_scalar_mul_packed(c: int, r: int, a_mask: int) -> int:
    """Multiply every packed ring digit by the scalar with encoding c."""
    if c == 0:
        return 0
    if c == 1:
        return r
    a = r & a_mask
    if c == 2:  # u * (a + ub) = u*a
        return a << 1
    # (1+u)(a + ub) = a + u*(a + b)
    b = (r >> 1) & a_mask
    return a | ((a ^ b) << 1)


def scalar_mul(c: RingElem | int, v: MixedVector) -> MixedVector:
    """(r + u*q) * v: binary part times r, ring part times the scalar."""
    c = int(RingElem(c))
    shape = v.shape
    new_bin = v.bin if (c & 1) else 0
    new_ring = _ring_scalar_mul_packed(c, v.ring, shape.ring_a_mask)
    return MixedVector(shape, new_bin, new_ring)


def _u_mul_packed(shape: AmbientShape, word: int) -> int:
    """u * word on packed single-integer form (binary part dies)."""
    return (word & shape.ring_a_mask) << 1


def _inner_packed(shape: AmbientShape, w1: int, w2: int) -> int:
    """Encoding of the inner product of two packed words."""
    a_mask = shape.ring_a_mask
    beta2 = 2 * shape.beta
    parity = ((w1 >> beta2) & (w2 >> beta2)).bit_count() & 1
    x = w1 & shape.ring_mask
    y = w2 & shape.ring_mask
    xa, xb = x & a_mask, (x >> 1) & a_mask
    ya, yb = y & a_mask, (y >> 1) & a_mask
    prod_a = xa & ya
    prod_b = (xa & yb) ^ (xb & ya)
    # XOR-fold the digit encodings: component parities
    a = prod_a.bit_count() & 1
    b = (prod_b.bit_count() & 1) ^ parity
    return a | (b << 1)


def inner_product(v: MixedVector, w: MixedVector) -> RingElem:
    """u * <binary parts over Z2> + <ring parts over R>, valued in R."""
    _check_same_shape(v, w)
    return RingElem(_inner_packed(v.shape, v.packed, w.packed))


def _lee_packed(shape: AmbientShape, word: int) -> int:
    r = word & shape.ring_mask
    b = (r >> 1) & shape.ring_a_mask
    return (
        (word >> (2 * shape.beta)).bit_count()
        + b.bit_count()
        + ((r ^ (r >> 1)) & shape.ring_a_mask).bit_count()
    )


def lee_weight_vec(v: MixedVector) -> int:
    """Hamming weight of the binary part plus Lee weights of ring digits."""
    return _lee_packed(v.shape, v.packed)


def _gray_packed(shape: AmbientShape, word: int) -> int:
    """Packed Gray image: binary part kept, each ring digit -> psi pair."""
    r = word & shape.ring_mask
    a_mask = shape.ring_a_mask
    a = r & a_mask
    b = (r >> 1) & a_mask
    return ((word >> (2 * shape.beta)) << (2 * shape.beta)) | (b << 1) | (a ^ b)


def gray_map(v: MixedVector) -> tuple[int, ...]:
    """Length alpha + 2*beta bit tuple; distance-preserving for Lee/Hamming."""
    g = _gray_packed(v.shape, v.packed)
    n = v.shape.big_n
    return tuple((g >> (n - 1 - i)) & 1 for i in range(n))


@dataclass(frozen=True)
class BinaryCode:
    """A set of binary words of common length n, packed MSB-first."""

    n: int
    words: tuple[int, ...]

    @classmethod
    def from_bitrows(cls, rows: Iterable[Sequence[int]]) -> "BinaryCode":
        packed = []
        n = None
        for row in rows:
            if n is None:
                n = len(row)
            elif len(row) != n:
                raise ShapeMismatch("binary words have differing lengths")
            w = 0
            for x in row:
                w = (w << 1) | (x & 1)
            packed.append(w)
        if n is None:
            raise ValueError("empty word set")
        return cls(n, tuple(sorted(set(packed))))

    def weights(self) -> Iterator[int]:
        for w in self.words:
            yield w.bit_count()

    def min_weight(self) -> int | None:
        nz = [w.bit_count() for w in self.words if w]
        return min(nz) if nz else None

    def __len__(self) -> int:
        return len(self.words)


class AdditiveCode:
    """An additive code: a subgroup of the ambient module.

    Construct through :func:`span` (closed under u-scaling, hence an
    R-submodule) or :func:`dual_brute`; :func:`additive_span` builds the
    plain subgroup generated by the rows, which is a submodule only when
    the rows happen to be u-closed.  ``words`` is the full codeword set
    as sorted packed integers (canonical order), and ``generators`` are
    rows that generate ``words`` under addition alone.
    """

    __slots__ = ("shape", "generators", "words", "_word_set", "_codewords")

    def __init__(
        self,
        shape: AmbientShape,
        generators: tuple[MixedVector, ...],
        words: tuple[int, ...],
    ):
        if not words or words[0] != 0:
            raise ValueError("codeword set must contain the zero word")
        if len(words) & (len(words) - 1):
            raise ValueError("codeword count must be a power of two")
        self.shape = shape
        self.generators = generators
        self.words = words
        self._word_set: frozenset[int] | None = None
        self._codewords: tuple[MixedVector, ...] | None = None

    @property
    def cardinality(self) -> int:
        return len(self.words)

    @property
    def word_set(self) -> frozenset[int]:
        if self._word_set is None:
            self._word_set = frozenset(self.words)
        return self._word_set

    @property
    def codewords(self) -> tuple[MixedVector, ...]:
        if self._codewords is None:
            self._codewords = tuple(
                MixedVector.from_packed(self.shape, w) for w in self.words
            )
        return self._codewords

    def __contains__(self, v: MixedVector) -> bool:
        if v.shape != self.shape:
            return False
        return v.packed in self.word_set

    def __len__(self) -> int:
        return len(self.words)

    def __iter__(self) -> Iterator[MixedVector]:
        return iter(self.codewords)

    def __eq__(self, other) -> bool:
        if not isinstance(other, AdditiveCode):
            return NotImplemented
        return self.shape == other.shape and self.words == other.words

    def __hash__(self) -> int:
        return hash((self.shape, self.words))

    def is_module(self) -> bool:
        """True when the code is closed under multiplication by u.

        Closure under u and addition gives closure under every scalar,
        so this is exactly the R-submodule condition.  u is additive
        over XOR, hence checking the generators suffices.
        """
        return all(
            _u_mul_packed(self.shape, g.packed) in self.word_set
            for g in self.generators
        )

    def __repr__(self) -> str:
        return (
            f"AdditiveCode(alpha={self.shape.alpha}, beta={self.shape.beta}, "
            f"cardinality={self.cardinality})"
        )


def _require_module(code: AdditiveCode, op: str) -> None:
    if not code.is_module():
        raise PreconditionViolation(
            f"{op} requires a code closed under multiplication by u; "
            "this one is a bare subgroup (built with additive_span?)"
        )


def _close_under(
    shape: AmbientShape, words: set[int], gen: int, u_closed: bool = True
) -> None:
    """Grow an additively closed word set by one generator.

    With u_closed the growth also absorbs u*gen, keeping the set an
    R-submodule; the set is an exponent-2 group either way, so each new
    seed either is already present or doubles the set.
    """
    seeds = (gen, _u_mul_packed(shape, gen)) if u_closed else (gen,)
    for h in seeds:
        if h not in words:
            words |= {h ^ w for w in words}


def span(shape: AmbientShape, rows: Sequence[MixedVector]) -> AdditiveCode:
    """Smallest code containing the rows: fixed-point closure of the
    generating set {row, u*row} under addition."""
    for v in rows:
        if v.shape != shape:
            raise ShapeMismatch("row shape does not match ambient shape")
    words: set[int] = {0}
    for v in rows:
        _close_under(shape, words, v.packed)
    return AdditiveCode(shape, tuple(rows), tuple(sorted(words)))


def additive_span(
    shape: AmbientShape, rows: Sequence[MixedVector]
) -> AdditiveCode:
    """Smallest subgroup containing the rows, without scalar closure.

    Coincides with :func:`span` exactly when every u*row already lies in
    the subgroup; otherwise the result is not a module and the
    operations that rely on module structure (standard form, duals)
    refuse it.  One bundled reference matrix generates its published
    codeword set only in this weaker sense, which is why the distinction
    is exposed at all.
    """
    for v in rows:
        if v.shape != shape:
            raise ShapeMismatch("row shape does not match ambient shape")
    words: set[int] = {0}
    for v in rows:
        _close_under(shape, words, v.packed, u_closed=False)
    return AdditiveCode(shape, tuple(rows), tuple(sorted(words)))


def _extract_generators(
    shape: AmbientShape, words: Sequence[int]
) -> tuple[MixedVector, ...]:
    """Greedy generating rows (an XOR basis) from a full codeword set."""
    total = len(words)
    seen: set[int] = {0}
    gens: list[MixedVector] = []
    for w in words:
        if len(seen) == total:
            break
        if w in seen:
            continue
        gens.append(MixedVector.from_packed(shape, w))
        _close_under(shape, seen, w, u_closed=False)
    return tuple(gens)


_MUL_TABLE = np.array(
    [[0, 0, 0, 0], [0, 1, 2, 3], [0, 2, 0, 2], [0, 3, 2, 1]], dtype=np.uint8
)


def _parity_u64(x: np.ndarray) -> np.ndarray:
    return (np.bitwise_count(x) & np.uint64(1)).astype(np.uint8)


def dual_brute(code: AdditiveCode) -> AdditiveCode:
    """Dual by scanning the entire ambient module once.

    A word is in the dual iff it is orthogonal to every generator; the
    inner product is bilinear, so generators suffice.  For generator g
    the product g.w splits into a binary parity p and a ring XOR-fold s,
    and g.w = 0 iff s has no unit component and its u component equals
    p.  Both pieces depend only on one half of the index grid, so each
    generator contributes one vectorised outer condition.
    """
    _require_module(code, "dual_brute")
    shape = code.shape
    if shape.big_n > MAX_BRUTE_AMBIENT_BITS:
        raise AmbientTooLarge(
            f"ambient has 2^{shape.big_n} words; brute-force dual is capped "
            f"at 2^{MAX_BRUTE_AMBIENT_BITS}"
        )
    alpha, beta = shape.alpha, shape.beta
    nbin, nring = 1 << alpha, 1 << (2 * beta)
    bins = np.arange(nbin, dtype=np.uint64)
    rings = np.arange(nring, dtype=np.uint64)
    mask = np.ones((nbin, nring), dtype=bool)
    for g in code.generators:
        if g.is_zero:
            continue
        par = _parity_u64(bins & np.uint64(g.bin))
        acc = np.zeros(nring, dtype=np.uint8)
        for j in range(beta):
            sh = shape.ring_shift(j)
            gd = (g.ring >> sh) & 3
            if gd:
                digits = ((rings >> np.uint64(sh)) & np.uint64(3)).astype(np.uint8)
                acc ^= _MUL_TABLE[gd][digits]
        mask &= ((acc & 1) == 0)[None, :]
        mask &= par[:, None] == (acc >> 1)[None, :]
    bi, ri = np.nonzero(mask)
    # row-major nonzero order is already the canonical word order
    words = tuple(((bi.astype(np.int64) << (2 * beta)) | ri).tolist())
    dual = AdditiveCode(shape, _extract_generators(shape, words), words)
    if code.cardinality * dual.cardinality != shape.ambient_size:
        raise InternalVerificationFailure(
            "cardinality product |C| * |dual| != 2^N after ambient scan"
        )
    return dual


def min_lee_weight(code: AdditiveCode) -> int:
    """Smallest Lee weight among nonzero codewords."""
    if code.cardinality < 2:
        raise TrivialCode("the zero code has no nonzero codeword")
    shape = code.shape
    return min(_lee_packed(shape, w) for w in code.words if w)


def gray_image(code: AdditiveCode) -> BinaryCode:
    """Componentwise Gray image as a binary code of length alpha + 2*beta."""
    shape = code.shape
    return BinaryCode(
        shape.big_n, tuple(sorted(_gray_packed(shape, w) for w in code.words))
    )


def gray_parameters(code: AdditiveCode) -> tuple[int, int, int | None]:
    """(n, k, d) of the Gray image: length, log2 of size, minimum distance.

    The Gray map is a weight-preserving bijection, so d equals the
    minimum Lee weight; no image is materialised.  d is None for the
    zero code.
    """
    n = code.shape.big_n
    k = code.cardinality.bit_length() - 1
    d = min_lee_weight(code) if code.cardinality > 1 else None
    return (n, k, d)


# ---------------------------------------------------------------------------
# Matrix file grammar
#
# One row per line.  '#' starts a comment, blank lines are skipped.  A row
# is whitespace-separated binary tokens, a literal '|', then ring tokens
# (0, 1, u, v, 1+u, u+1).  The '|' is mandatory even when alpha or beta
# is zero, and every row must agree on both counts.
# ---------------------------------------------------------------------------


def _tokenize_row(line: str) -> list[tuple[str, int]]:
    """Split one line into (token, 1-based column) pairs; '|' self-delimits."""
    out = []
    tok_start = None
    for idx, ch in enumerate(line):
        if ch.isspace() or ch == "|":
            if tok_start is not None:
                out.append((line[tok_start:idx], tok_start + 1))
                tok_start = None
            if ch == "|":
                out.append(("|", idx + 1))
        elif tok_start is None:
            tok_start = idx
    if tok_start is not None:
        out.append((line[tok_start:], tok_start + 1))
    return out


def parse_matrix(text: str) -> tuple[AmbientShape, list[MixedVector]]:
    """Parse generator rows from the matrix grammar.

    Returns the common shape and the rows in file order.  Raises
    :class:`MatrixParseError` with 1-based line/column on any defect,
    including ragged rows and a missing or repeated '|'.
    """
    rows_raw: list[tuple[int, list[tuple[str, int]]]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        tokens = _tokenize_row(line)
        if tokens:
            rows_raw.append((lineno, tokens))
    if not rows_raw:
        raise MatrixParseError("no generator rows found", 1, 1)

    shape: AmbientShape | None = None
    rows: list[MixedVector] = []
    for lineno, tokens in rows_raw:
        bars = [i for i, (t, _) in enumerate(tokens) if t == "|"]
        if not bars:
            last_col = tokens[-1][1] + len(tokens[-1][0])
            raise MatrixParseError("row has no '|' separator", lineno, last_col)
        if len(bars) > 1:
            raise MatrixParseError(
                "row has more than one '|' separator", lineno, tokens[bars[1]][1]
            )
        cut = bars[0]
        bin_toks = tokens[:cut]
        ring_toks = tokens[cut + 1 :]

        bits = []
        for t, col in bin_toks:
            if t not in ("0", "1"):
                raise MatrixParseError(
                    f"invalid binary token {t!r} (expected 0 or 1)", lineno, col
                )
            bits.append(int(t))
        elems = []
        for t, col in ring_toks:
            try:
                elems.append(parse_ring_token(t))
            except ValueError:
                raise MatrixParseError(
                    f"invalid ring token {t!r}", lineno, col
                ) from None

        if shape is None:
            try:
                shape = AmbientShape(len(bits), len(elems))
            except ValueError as exc:
                raise MatrixParseError(str(exc), lineno, tokens[cut][1]) from None
        elif len(bits) != shape.alpha or len(elems) != shape.beta:
            raise MatrixParseError(
                f"row has {len(bits)}+{len(elems)} columns, "
                f"expected {shape.alpha}+{shape.beta}",
                lineno,
                tokens[cut][1],
            )
        rows.append(MixedVector.from_coords(shape, bits, elems))
    assert shape is not None
    return shape, rows


def parse_matrix_file(path) -> tuple[AmbientShape, list[MixedVector]]:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_matrix(fh.read())


def format_row(v: MixedVector) -> str:
    """Render one row in the matrix grammar with canonical ring symbols."""
    left = " ".join(str(b) for b in v.bin_bits)
    right = " ".join(e.symbol for e in v.ring_elems)
    if left and right:
        return f"{left} | {right}"
    if left:
        return f"{left} |"
    return f"| {right}"


def format_matrix(rows: Sequence[MixedVector], trailer: str | None = None) -> str:
    lines = [format_row(v) for v in rows]
    if trailer is not None:
        lines.append(f"# {trailer}")
    return "\n".join(lines) + "\n"
