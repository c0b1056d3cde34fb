"""
Bit Patterns

Arbitrary-precision non-negative bit patterns and the operations thinnings are
built from.
"""

from packed_thinnings.bits.kernel import (
    WORD_BITS,
    BitPat,
    bit,
    bit_and,
    bit_length,
    bit_or,
    bit_xor,
    check_bitpat,
    complement_within,
    cons,
    deposit,
    extract,
    full,
    parse_bits,
    popcount,
    render_bits,
    set_bit,
    shift_l,
    shift_r,
    test_bit,
    uncons,
)

__all__ = [
    "BitPat",
    "WORD_BITS",
    "bit",
    "bit_and",
    "bit_length",
    "bit_or",
    "bit_xor",
    "check_bitpat",
    "complement_within",
    "cons",
    "deposit",
    "extract",
    "full",
    "parse_bits",
    "popcount",
    "render_bits",
    "set_bit",
    "shift_l",
    "shift_r",
    "test_bit",
    "uncons",
]
