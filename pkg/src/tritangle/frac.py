"""Exact projective rational arithmetic and the twist-sequence calculus.

A twist vector (x1, ..., xm) denotes the continued fraction

    xm + 1/(x(m-1) + 1/(... + 1/x1))

i.e. the *last* entry is the outermost term.  The empty vector denotes 0.
Evaluation is projective: 1/0 = inf, 1/inf = 0 and a + inf = inf, so every
integer vector has a well-defined value in Q u {inf}.  This orientation is
pinned by two anchors of the slope calculus: (2, 0) evaluates to 1/2 (the
Hopf loop-tangle slope) and (3, 0) to 1/3 (the type-II rectangle slope).

Fractions are reduced at construction and never repaired afterwards.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import InfiniteSlope, InfiniteValue, ZeroOverZero

TwistVector = tuple[int, ...]


@dataclass(frozen=True)
class ExtFraction:
    """A rational number or the single projective infinity.

    Invariants after construction: gcd(|num|, den) == 1, den >= 0, and
    den == 0 encodes infinity with num canonicalized to 1.
    """

    num: int
    den: int = 1

    def __post_init__(self):
        num, den = self.num, self.den
        if num == 0 and den == 0:
            raise ZeroOverZero("0/0 is not a projective rational")
        if den < 0:
            num, den = -num, -den
        if den == 0:
            num = 1
        else:
            g = math.gcd(num, den)
            num //= g
            den //= g
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    @property
    def is_infinite(self) -> bool:
        return self.den == 0

    @property
    def is_zero(self) -> bool:
        return self.num == 0

    @property
    def is_integer(self) -> bool:
        return self.den == 1

    def reciprocal(self) -> "ExtFraction":
        return ExtFraction(self.den, self.num)

    def __neg__(self) -> "ExtFraction":
        return ExtFraction(-self.num, self.den)

    def __add__(self, other: int) -> "ExtFraction":
        if not isinstance(other, int):
            return NotImplemented
        if self.is_infinite:
            return self
        return ExtFraction(self.num + other * self.den, self.den)

    __radd__ = __add__

    def is_canonical(self) -> bool:
        """Audit the stored fields against the class invariants (no repairs)."""
        if self.den < 0:
            return False
        if self.den == 0:
            return self.num == 1
        return math.gcd(abs(self.num), self.den) == 1

    def __str__(self) -> str:
        if self.is_infinite:
            return "inf"
        if self.den == 1:
            return str(self.num)
        return f"{self.num}/{self.den}"


def cf_eval(entries: Iterable[int]) -> ExtFraction:
    """Evaluate a twist vector under the rightmost-outermost convention.

    The empty vector evaluates to 0 (the untwisted tangle), not infinity.
    """
    value = ExtFraction(0, 1)
    first = True
    for a in entries:
        if first:
            value = ExtFraction(a, 1)
            first = False
        else:
            value = value.reciprocal() + a
    return value


def cf_expand(f: ExtFraction) -> TwistVector:
    """Expand a finite fraction into a twist vector evaluating back to it.

    Euclidean expansion with floor quotients.  Every entry except the final
    (outermost) one is >= 1; the final entry is the integer part and may be
    any integer, including 0.  cf_eval(cf_expand(f)) == f exactly.
    """
    if f.is_infinite:
        raise InfiniteSlope("cannot expand the infinite slope")
    digits = []  # outermost quotient first
    p, q = f.num, f.den
    while True:
        a = p // q
        digits.append(a)
        r = p - a * q
        if r == 0:
            break
        p, q = q, r
    return tuple(reversed(digits))


def slope_normalize(f: ExtFraction) -> ExtFraction:
    """Return the unique representative of f modulo Z in (-1/2, 1/2]."""
    if f.is_infinite:
        raise InfiniteSlope("infinite value does not present a rational 3-tangle slope")
    r = f.num % f.den
    if 2 * r > f.den:
        r -= f.den
    return ExtFraction(r, f.den)


def mod_z_equal(f: ExtFraction, g: ExtFraction) -> bool:
    """True iff f - g is an integer.  Both arguments must be finite."""
    if f.is_infinite or g.is_infinite:
        raise InfiniteSlope("mod-Z comparison is undefined at infinity")
    return f.den == g.den and (f.num - g.num) % f.den == 0


def palindrome_numerators(tv: Sequence[int]) -> tuple[int, int]:
    """Absolute numerators of the vector and its reversal.

    The two components are always equal (reversal preserves the numerator
    of a twist-vector value up to sign).
    """
    forward = cf_eval(tv)
    backward = cf_eval(tuple(reversed(tuple(tv))))
    if forward.is_infinite or backward.is_infinite:
        raise InfiniteValue("palindrome numerators need both orders finite")
    return abs(forward.num), abs(backward.num)


def parse_fraction(text: str) -> ExtFraction:
    """Parse 'p/q' or a bare integer string into an ExtFraction."""
    s = text.strip()
    if "/" in s:
        head, _, tail = s.partition("/")
        return ExtFraction(int(head), int(tail))
    return ExtFraction(int(s), 1)
