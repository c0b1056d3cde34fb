"""Tests for the bit-pattern kernel."""

import pytest

from packed_thinnings.bits import (
    WORD_BITS,
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
from packed_thinnings.errors import InvariantViolation, ParseError

CASES = 500


def random_pattern(rng, max_width=300):
    width = int(rng.integers(0, max_width + 1))
    if width == 0:
        return 0, 0
    raw = rng.integers(0, 2, size=width)
    return width, int("".join(str(b) for b in raw), 2)


class TestExamples:
    """Fixed vectors."""

    @pytest.mark.parametrize(
        "bs,i,expected",
        [(13, 0, True), (6, 0, False), (6, 1, True), (6, 2, True), (0, 5, False)],
    )
    def test_test_bit(self, bs, i, expected):
        """testBit reads bit i."""
        assert test_bit(bs, i) is expected

    @pytest.mark.parametrize("b,bs,expected", [(True, 6, 13), (False, 6, 12), (False, 0, 0)])
    def test_cons(self, b, bs, expected):
        """cons puts b in bit 0 of the shifted pattern."""
        assert cons(b, bs) == expected

    @pytest.mark.parametrize("bs,expected", [(13, (True, 6)), (0, (False, 0)), (12, (False, 6))])
    def test_uncons(self, bs, expected):
        """uncons splits off bit 0."""
        assert uncons(bs) == expected

    def test_shifts(self):
        """Shift examples."""
        assert shift_r(13, 1) == 6
        assert shift_l(3, 2) == 12
        assert shift_l(13, 0) == 13

    def test_full(self):
        """full(k) is k ones."""
        assert full(0) == 0
        assert full(3) == 7
        assert full(5) == 31
        assert test_bit(full(5), 5) is False

    def test_and_or_complement(self):
        """Boolean operations."""
        assert bit_or(6, 19) == 23
        assert bit_and(6, 19) == 2
        assert bit_and(12345, 0) == 0
        assert bit_xor(6, 3) == 5
        assert complement_within(5, 13) == 18

    def test_complement_rejects_overwide(self):
        """complementWithin refuses patterns wider than the width."""
        with pytest.raises(InvariantViolation, match="does not fit"):
            complement_within(3, 8)

    def test_popcount(self):
        """popcount counts ones."""
        assert popcount(0) == 0
        assert popcount(13) == 3
        for k in range(0, 200, 7):
            assert popcount(full(k)) == k

    def test_bit_helpers(self):
        """bit, set_bit and bit_length."""
        assert bit(4) == 16
        assert set_bit(1, 3) == 9
        assert bit_length(0) == 0
        assert bit_length(13) == 4

    def test_check_bitpat(self):
        """Negative patterns are invalid."""
        assert check_bitpat(5) == 5
        with pytest.raises(InvariantViolation, match="non-negative"):
            check_bitpat(-1)

    @pytest.mark.parametrize(
        "op",
        [
            lambda: test_bit(-1, 100),
            lambda: set_bit(-2, 0),
            lambda: bit_length(-8),
            lambda: cons(True, -1),
            lambda: uncons(-1),
            lambda: shift_r(-4, 1),
            lambda: shift_l(-4, 1),
            lambda: bit_and(-1, 3),
            lambda: bit_or(3, -1),
            lambda: bit_xor(-1, -1),
            lambda: complement_within(4, -1),
            lambda: popcount(-1),
            lambda: deposit(-1, 0b1010),
            lambda: extract(5, -1),
        ],
    )
    def test_negative_patterns_rejected(self, op):
        """Every pattern-taking operation refuses a negative int."""
        with pytest.raises(InvariantViolation, match="non-negative"):
            op()


class TestLaws:
    """Universally quantified laws on random inputs."""

    def test_extensionality(self, rng):
        """Equal iff every bit in the window agrees."""
        for _ in range(CASES):
            _, a = random_pattern(rng)
            b = a ^ (1 << int(rng.integers(0, 300))) if rng.random() < 0.5 else a
            window = max(a.bit_length(), b.bit_length())
            same = all(test_bit(a, i) == test_bit(b, i) for i in range(window + 1))
            assert same == (a == b)

    def test_test_bit_and_or(self, rng):
        """testBit distributes over and/or."""
        for _ in range(CASES):
            _, a = random_pattern(rng)
            _, b = random_pattern(rng)
            i = int(rng.integers(0, 310))
            assert test_bit(bit_and(a, b), i) == (test_bit(a, i) and test_bit(b, i))
            assert test_bit(bit_or(a, b), i) == (test_bit(a, i) or test_bit(b, i))

    def test_test_bit_complement(self, rng):
        """Complement within a width flips every bit below the width and nothing above."""
        for _ in range(CASES):
            width, a = random_pattern(rng)
            c = complement_within(width, a)
            i = int(rng.integers(0, width + 10))
            if i < width:
                assert test_bit(c, i) == (not test_bit(a, i))
            else:
                assert test_bit(c, i) is False

    def test_shift_laws(self, rng):
        """shiftR reads bit i+k at i; shiftL moves bits up and clears the bottom."""
        for _ in range(CASES):
            _, a = random_pattern(rng)
            k = int(rng.integers(0, 70))
            i = int(rng.integers(0, 300))
            assert test_bit(shift_r(a, k), i) == test_bit(a, i + k)
            assert test_bit(shift_l(a, k), i + k) == test_bit(a, i)
            if i < k:
                assert test_bit(shift_l(a, k), i) is False
            assert shift_l(a, 0) == a

    def test_set_bit_other(self, rng):
        """Setting bit j leaves every other bit alone."""
        for _ in range(CASES):
            _, a = random_pattern(rng)
            i, j = (int(x) for x in rng.integers(0, 300, size=2))
            if i != j:
                assert test_bit(set_bit(a, j), i) == test_bit(a, i)
            assert test_bit(set_bit(a, j), j)

    def test_bit_nonzero(self):
        """bit(i) is never zero."""
        for i in range(CASES):
            assert bit(i) != 0

    def test_cons_uncons_inverse(self, rng):
        """cons and uncons are mutually inverse."""
        for _ in range(CASES):
            _, a = random_pattern(rng)
            b = bool(rng.integers(0, 2))
            assert uncons(cons(b, a)) == (b, a)
            assert cons(*uncons(a)) == a

    def test_algebra(self, rng):
        """and/or are commutative, associative and idempotent; de Morgan within a width."""
        for _ in range(CASES):
            width = int(rng.integers(0, 200))
            a, b, c = (int(rng.integers(0, 2**62)) & full(width) for _ in range(3))
            assert bit_and(a, b) == bit_and(b, a)
            assert bit_or(a, b) == bit_or(b, a)
            assert bit_and(a, bit_and(b, c)) == bit_and(bit_and(a, b), c)
            assert bit_or(a, bit_or(b, c)) == bit_or(bit_or(a, b), c)
            assert bit_and(a, a) == a and bit_or(a, a) == a
            assert complement_within(width, bit_and(a, b)) == bit_or(
                complement_within(width, a), complement_within(width, b)
            )
            assert complement_within(width, bit_or(a, b)) == bit_and(
                complement_within(width, a), complement_within(width, b)
            )


def reference_deposit(bits, mask):
    out, j = 0, 0
    for i in range(mask.bit_length()):
        if mask >> i & 1:
            if bits >> j & 1:
                out |= 1 << i
            j += 1
    return out


def reference_extract(bits, mask):
    out, j = 0, 0
    for i in range(mask.bit_length()):
        if mask >> i & 1:
            if bits >> i & 1:
                out |= 1 << j
            j += 1
    return out


class TestDepositExtract:
    """Scatter/gather kernels, on both the word loop and the numpy path."""

    def test_small_examples(self):
        """compose([10], [0110]) is deposit(2, 6) = 4."""
        assert deposit(0b10, 0b0110) == 0b0100
        assert extract(0b0100, 0b0110) == 0b10
        assert deposit(0, 0) == 0
        assert extract(123, 0) == 0

    @pytest.mark.parametrize("max_width", [WORD_BITS, 4 * WORD_BITS + 3])
    def test_against_reference(self, rng, max_width):
        """Both code paths agree with the bit-at-a-time definition."""
        for _ in range(CASES):
            _, mask = random_pattern(rng, max_width)
            _, bits = random_pattern(rng, max_width)
            assert deposit(bits, mask) == reference_deposit(bits, mask)
            assert extract(bits, mask) == reference_extract(bits, mask)

    def test_extract_inverts_deposit(self, rng):
        """extract(deposit(b, m), m) recovers the low popcount(m) bits of b."""
        for _ in range(CASES):
            _, mask = random_pattern(rng)
            _, bits = random_pattern(rng)
            assert extract(deposit(bits, mask), mask) == bits & full(popcount(mask))


class TestText:
    """Bracketed rendering."""

    def test_render(self):
        """MSB first, fixed width."""
        assert render_bits(5, 13) == "[01101]"
        assert render_bits(0, 0) == "[]"
        assert render_bits(3, 0) == "[000]"

    def test_render_rejects_overwide(self):
        """The pattern must fit the width."""
        with pytest.raises(InvariantViolation):
            render_bits(2, 13)

    def test_parse(self):
        """parse_bits inverts render_bits."""
        assert parse_bits("[01101]") == (5, 13)
        assert parse_bits("[]") == (0, 0)

    @pytest.mark.parametrize(
        "text,position",
        [("01101", 0), ("[0120]", 3), ("[011", 4), ("[01]x", 4)],
    )
    def test_parse_errors(self, text, position):
        """Errors report the offending position."""
        with pytest.raises(ParseError, match=f"position {position}") as info:
            parse_bits(text)
        assert info.value.context["position"] == position
