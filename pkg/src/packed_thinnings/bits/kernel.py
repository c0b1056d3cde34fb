"""
Bit Kernel

Arbitrary-precision bit patterns. A pattern is a non-negative Python int read
as an infinite bit sequence that is eventually all zeros; bit i is the
coefficient of 2**i.

Every function here is pure. Widths and indices are ordinary counts, patterns
are unbounded.
"""

from typing import Tuple

import numpy as np

from packed_thinnings.errors import InvariantViolation, ParseError

BitPat = int

# Patterns wider than this go through numpy for deposit/extract.
WORD_BITS = 64


def check_bitpat(bs: BitPat) -> BitPat:
    """Reject negative patterns.

    Raises:
        InvariantViolation: If bs is negative
    """
    if bs < 0:
        raise InvariantViolation(f"Bit pattern must be non-negative, got {bs}", {"value": bs})
    return bs


def test_bit(bs: BitPat, i: int) -> bool:
    """Return bit i of bs."""
    return (check_bitpat(bs) >> i) & 1 == 1


# Not a test function, despite the name.
test_bit.__test__ = False  # type: ignore[attr-defined]


def bit(i: int) -> BitPat:
    """The pattern with only bit i set."""
    return 1 << i


def set_bit(bs: BitPat, i: int) -> BitPat:
    """Set bit i of bs."""
    return check_bitpat(bs) | (1 << i)


def bit_length(bs: BitPat) -> int:
    """Index one past the highest set bit (0 for the empty pattern)."""
    return check_bitpat(bs).bit_length()


def cons(b: bool, bs: BitPat) -> BitPat:
    """Shift bs left by one and put b in bit 0."""
    return (check_bitpat(bs) << 1) | (1 if b else 0)


def uncons(bs: BitPat) -> Tuple[bool, BitPat]:
    """Split off bit 0: returns (bit 0, bs >> 1)."""
    check_bitpat(bs)
    return bs & 1 == 1, bs >> 1


def shift_r(bs: BitPat, k: int) -> BitPat:
    """Drop the k least significant bits."""
    return check_bitpat(bs) >> k


def shift_l(bs: BitPat, k: int) -> BitPat:
    """Add k new, clear, least significant bits."""
    return check_bitpat(bs) << k


def full(k: int) -> BitPat:
    """k ones: 2**k - 1."""
    return (1 << k) - 1


def bit_and(a: BitPat, b: BitPat) -> BitPat:
    return check_bitpat(a) & check_bitpat(b)


def bit_or(a: BitPat, b: BitPat) -> BitPat:
    return check_bitpat(a) | check_bitpat(b)


def bit_xor(a: BitPat, b: BitPat) -> BitPat:
    return check_bitpat(a) ^ check_bitpat(b)


def complement_within(width: int, a: BitPat) -> BitPat:
    """Flip bits 0..width-1 of a.

    Raises:
        InvariantViolation: If a has bits at or above width
    """
    if check_bitpat(a) >> width:
        raise InvariantViolation(
            f"Pattern {a} does not fit in width {width}",
            {"value": a, "width": width},
        )
    return full(width) ^ a


def popcount(bs: BitPat) -> int:
    """Number of set bits."""
    return check_bitpat(bs).bit_count()


def _unpack(bs: BitPat, width: int) -> np.ndarray:
    raw = np.frombuffer(bs.to_bytes((width + 7) // 8, "little"), dtype=np.uint8)
    return np.unpackbits(raw, count=width, bitorder="little")


def _pack(bits: np.ndarray) -> BitPat:
    return int.from_bytes(np.packbits(bits, bitorder="little").tobytes(), "little")


def deposit(bits: BitPat, mask: BitPat) -> BitPat:
    """Scatter the low bits of `bits` into the set positions of `mask`.

    Bit j of `bits` lands on the j-th lowest set bit of `mask`; bits of `bits`
    at or above popcount(mask) are ignored.
    """
    check_bitpat(bits)
    check_bitpat(mask)
    width = mask.bit_length()
    if width <= WORD_BITS:
        out = 0
        rest = mask
        while rest and bits:
            low = rest & -rest
            if bits & 1:
                out |= low
            bits >>= 1
            rest ^= low
        return out

    slots = np.flatnonzero(_unpack(mask, width))
    count = len(slots)
    out_bits = np.zeros(width, dtype=np.uint8)
    out_bits[slots] = _unpack(bits & full(count), count)
    return _pack(out_bits)


def extract(bits: BitPat, mask: BitPat) -> BitPat:
    """Gather the bits of `bits` found at the set positions of `mask`, compacted.

    The inverse of deposit on patterns contained in `mask`.
    """
    check_bitpat(bits)
    check_bitpat(mask)
    width = mask.bit_length()
    if width <= WORD_BITS:
        out = 0
        j = 0
        rest = mask
        while rest:
            low = rest & -rest
            if bits & low:
                out |= 1 << j
            j += 1
            rest ^= low
        return out

    selected = _unpack(mask, width).astype(bool)
    return _pack(_unpack(bits & full(width), width)[selected])


def render_bits(width: int, bs: BitPat) -> str:
    """Render bs as "[b_{w-1}...b_1b_0]", most significant bit first.

    Raises:
        InvariantViolation: If bs does not fit in width
    """
    if bs < 0 or bs >> width:
        raise InvariantViolation(
            f"Pattern {bs} does not fit in width {width}",
            {"value": bs, "width": width},
        )
    if width == 0:
        return "[]"
    return "[" + format(bs, "b").zfill(width) + "]"


def parse_bits(text: str) -> Tuple[int, BitPat]:
    """Parse the bracketed format back into (width, pattern).

    Raises:
        ParseError: With the position of the first offending character
    """
    if not text.startswith("["):
        raise ParseError("Expected '['", text, 0)
    close = text.find("]")
    if close < 0:
        bad = next((i for i, c in enumerate(text[1:], 1) if c not in "01"), len(text))
        if bad < len(text):
            raise ParseError(f"Unexpected character {text[bad]!r}", text, bad)
        raise ParseError("Expected ']'", text, len(text))
    for i in range(1, close):
        if text[i] not in "01":
            raise ParseError(f"Unexpected character {text[i]!r}", text, i)
    if close != len(text) - 1:
        raise ParseError("Trailing characters after ']'", text, close + 1)
    digits = text[1:close]
    return len(digits), int(digits, 2) if digits else 0
