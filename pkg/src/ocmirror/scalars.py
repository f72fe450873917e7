"""Exact integer/rational arithmetic and the recurring counting sequences.

Everything downstream runs on stdlib ints (arbitrary precision) and
``fractions.Fraction`` (always canonical: reduced, positive denominator).
The aliases below name the roles these types play in the API.
"""

from fractions import Fraction
from math import lcm

ExactInt = int
ExactRat = Fraction

_HARMONIC = [Fraction(0)]


def harmonic(n: int) -> Fraction:
    """H_n = sum_{j=1..n} 1/j, exactly.  Memoized prefix table, H_0 = 0."""
    if n < 0:
        raise ValueError("harmonic index must be >= 0")
    while len(_HARMONIC) <= n:
        _HARMONIC.append(_HARMONIC[-1] + Fraction(1, len(_HARMONIC)))
    return _HARMONIC[n]


def lcm_of(ks) -> int:
    """Least common multiple of a nonempty list of positive integers."""
    ks = list(ks)
    if not ks:
        raise ValueError("lcm_of needs at least one integer")
    if any(k < 1 for k in ks):
        raise ValueError("lcm_of needs positive integers")
    return lcm(*ks)


def factorial_ratio_seq(k: int, weights, M: int):
    """[F(0), ..., F(M)] with F(m) = (km)! / prod_i (w_i m)!.

    Built incrementally: F(m) is F(m-1) times the k fresh numerator factors,
    divided by the fresh denominator factors of each weight block, so no
    factorial is ever materialized whole.  Every F(m) is an integer (the
    weights sum to k, making F(m) a multinomial coefficient).
    """
    if M < 0:
        raise ValueError("M must be >= 0")
    weights = tuple(weights)
    if sum(weights) != k:
        raise ValueError("weights must sum to k")
    out = [1]
    v = 1
    for m in range(1, M + 1):
        for j in range(k * (m - 1) + 1, k * m + 1):
            v *= j
        den = 1
        for w in weights:
            for j in range(w * (m - 1) + 1, w * m + 1):
                den *= j
        v, r = divmod(v, den)
        assert r == 0, "factorial ratio left a remainder"
        out.append(v)
    return out


def format_rat(x) -> str:
    """Serialize an exact value: decimal string, "num/den" when non-integer."""
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return "%d/%d" % (x.numerator, x.denominator)


def parse_rat(s: str) -> Fraction:
    """Inverse of format_rat; bit-exact round trip."""
    if "/" in s:
        num, den = s.split("/")
        return Fraction(int(num), int(den))
    return Fraction(int(s))
