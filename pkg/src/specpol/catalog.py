"""Closed-form spectra and invariants of the catalog singularity classes.

Four families of isolated hypersurface germs are supported, each given by the
usual two-variable normal form plus a sum of squares in the remaining
variables:

=========  =======================================  =============
family     curve normal form                        Milnor number
=========  =======================================  =============
A(k)       x^(k+1) + y^2                 (k >= 1)   k
D(k)       x^2 y + y^(k-1)               (k >= 4)   k
E(m)       x^3 + y^(m/3+1)-type          (m >= 6,   m
           with m in {6r, 6r+1, 6r+2}    r >= 1)
J(k, i)    x^3 + x^2 y^k + y^(3k+i)      (k >= 2,   6k - 2 + i
                                          i >= 0)
=========  =======================================  =============

plus the diagonal germ x_1^d + ... + x_n^d handled by
:func:`fermat_spectrum`.

Every class except J(k, i) with i > 0 is weighted homogeneous, and its curve
spectrum is the exact expansion of

    (t^w1 - t)/(1 - t^w1) * (t^w2 - t)/(1 - t^w2)

in fractional powers of t (:func:`spectrum_from_weights`).  Spectra are stored
in the convention where a curve spectrum is symmetric about 0 and contained in
]-1, 1[; an ambient-n germ spectrum is the (n-2)-fold suspension of its curve
spectrum.

Note on the E(6r+1) family: expanding the per-family tabulated sum
(0) + sum_{i=1,2} sum_{j=1..3r} (-i/3 + 2j/(6r+3)) breaks the symmetry of the
spectrum about 0 already at r = 1 (it yields 1/3 and a doubled 0 instead of
the +-2/9, +-4/9 required by symmetry and by the Weyl-exponent cross-check).
The weight product above is authoritative for this family; E(7) comes out as
{-4/9, -2/9, -1/9, 0, 1/9, 2/9, 4/9}.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import lcm

from .spectrum import Spectrum, make_spectrum

__all__ = [
    "FAMILIES",
    "GermClass",
    "InvalidGermError",
    "NotWeightedHomogeneousError",
    "corank_curve",
    "curve_spectrum",
    "fermat_spectrum",
    "germ_spectrum",
    "milnor",
    "multiplicity_curve",
    "parse_germ",
    "spectrum_from_weights",
    "weights",
]

FAMILIES = ("A", "D", "E", "J")

_FAMILY_RANK = {f: r for r, f in enumerate(FAMILIES)}

_GERM_RE = re.compile(r"^([ADE])(\d+)$|^J(\d+)_(\d+)$")


class InvalidGermError(ValueError):
    """Raised for parameters outside the catalog or malformed class strings."""


class NotWeightedHomogeneousError(ValueError):
    """Raised when weights are requested for a J(k, i>0) germ."""


@dataclass(frozen=True)
class GermClass:
    """One catalog singularity class in a given number of ambient variables.

    ``k`` is the family index (for the E family it is the full subscript m,
    which coincides with the Milnor number); ``i`` is used by J only.
    """

    family: str
    k: int
    i: int = 0
    ambient_vars: int = 2

    def __post_init__(self) -> None:
        fam = self.family
        if fam == "A":
            ok = self.k >= 1 and self.i == 0
        elif fam == "D":
            ok = self.k >= 4 and self.i == 0
        elif fam == "E":
            ok = self.k >= 6 and self.k % 6 in (0, 1, 2) and self.i == 0
        elif fam == "J":
            ok = self.k >= 2 and self.i >= 0
        else:
            ok = False
        if not ok:
            raise InvalidGermError(f"invalid germ class {fam}, k={self.k}, i={self.i}")
        if self.ambient_vars < 2:
            raise ValueError(f"ambient_vars must be >= 2, got {self.ambient_vars}")

    @property
    def milnor(self) -> int:
        if self.family == "J":
            return 6 * self.k - 2 + self.i
        return self.k

    def sort_key(self) -> tuple[int, int, int]:
        return (_FAMILY_RANK[self.family], self.k, self.i)

    def in_ambient(self, n: int) -> "GermClass":
        return GermClass(self.family, self.k, self.i, n)

    def __str__(self) -> str:
        if self.family == "J":
            return f"J{self.k}_{self.i}"
        return f"{self.family}{self.k}"


def parse_germ(text: str, ambient_vars: int = 2) -> GermClass:
    """Parse a compact class string: A<k>, D<k>, E<m>, J<k>_<i>."""
    m = _GERM_RE.match(text.strip())
    if m is None:
        raise InvalidGermError(f"unrecognised germ class string {text!r}")
    if m.group(1) is not None:
        return GermClass(m.group(1), int(m.group(2)), 0, ambient_vars)
    return GermClass("J", int(m.group(3)), int(m.group(4)), ambient_vars)


def milnor(g: GermClass) -> int:
    return g.milnor


def corank_curve(g: GermClass) -> int:
    """Corank of the two-variable normal form: 0 for A(1), 1 for A(k>=2), 2 else."""
    if g.family == "A":
        return 0 if g.k == 1 else 1
    return 2


def multiplicity_curve(g: GermClass) -> int:
    """Order of the two-variable normal form at the origin: 2 for A, 3 for D/E/J."""
    return 2 if g.family == "A" else 3


def weights(g: GermClass) -> tuple[Fraction, Fraction]:
    """The weight pair (w1, w2) of a weighted-homogeneous catalog class."""
    fam, k = g.family, g.k
    if fam == "A":
        return Fraction(1, k + 1), Fraction(1, 2)
    if fam == "D":
        return Fraction(k - 2, 2 * k - 2), Fraction(1, k - 1)
    if fam == "E":
        r, res = divmod(k, 6)
        if res == 0:
            return Fraction(1, 3), Fraction(1, 3 * r + 1)
        if res == 1:
            return Fraction(1, 3), Fraction(2, 6 * r + 3)
        return Fraction(1, 3), Fraction(1, 3 * r + 2)
    if g.i == 0:
        return Fraction(1, 3), Fraction(1, 3 * k)
    raise NotWeightedHomogeneousError(f"{g} is not weighted homogeneous (i > 0)")


def _divide_by_one_minus_power(coeffs: list[int], p: int) -> list[int]:
    # exact division by (1 - s^p); quotient q satisfies q[e] = coeffs[e] + q[e-p]
    n = len(coeffs)
    q = [0] * n
    for e in range(n):
        q[e] = coeffs[e] + (q[e - p] if e >= p else 0)
    if any(q[e] != 0 for e in range(n - p, n)):
        raise ValueError("weight expansion is not exact")
    return q[: n - p]


def spectrum_from_weights(w1: Fraction, w2: Fraction) -> Spectrum:
    """Expand (t^w1 - t)(t^w2 - t) / ((1 - t^w1)(1 - t^w2)) exactly.

    Both weights are written over their common denominator D and the
    substitution s = t^(1/D) turns the expansion into two exact divisions of
    integer polynomials by (1 - s^p).  The exponent e of s contributes the
    spectral number e/D - 1.  The total is (1/w1 - 1)(1/w2 - 1).
    """
    w1, w2 = Fraction(w1), Fraction(w2)
    if not (0 < w1 < 1 and 0 < w2 < 1):
        raise ValueError(f"weights must lie strictly between 0 and 1, got {w1}, {w2}")
    D = lcm(w1.denominator, w2.denominator)
    p1 = w1.numerator * (D // w1.denominator)
    p2 = w2.numerator * (D // w2.denominator)
    # numerator (s^p1 - s^D)(s^p2 - s^D)
    coeffs = [0] * (2 * D + 1)
    coeffs[p1 + p2] += 1
    coeffs[2 * D] += 1
    coeffs[p1 + D] -= 1
    coeffs[p2 + D] -= 1
    coeffs = _divide_by_one_minus_power(coeffs, p1)
    coeffs = _divide_by_one_minus_power(coeffs, p2)
    if any(c < 0 for c in coeffs):
        raise ValueError("weight expansion has a negative coefficient")
    return make_spectrum(
        (Fraction(e, D) - 1, c) for e, c in enumerate(coeffs) if c > 0
    )


def _j_negative_part(k: int, i: int) -> list[Fraction]:
    # Negative spectral numbers of the J(k, i>0) curve germ, in two groups.
    if k % 2 == 0:
        group1 = list(range(-2 * k + 1, -3 * k // 2 + 1))
    else:
        group1 = list(range(-2 * k + 1, (-3 * k - 1) // 2 + 1))
    group1 += list(range(-k + 1, 0))
    negatives = [Fraction(num, 3 * k) for num in group1]
    den = 6 * k + 2 * i
    group2 = [
        Fraction(num, den)
        for num in range(-(3 * k + i) + 1, 0)
        if (num - i) % 2 == 0
    ]
    half = Fraction(-1, 2)
    assert all(v > half for v in group2), "second-group value not above -1/2"
    return negatives + group2


@lru_cache(maxsize=None)
def curve_spectrum(g: GermClass) -> Spectrum:
    """Spectrum of the two-variable germ of the class (symmetric about 0)."""
    g = g.in_ambient(2)
    if g.family != "J" or g.i == 0:
        return spectrum_from_weights(*weights(g))
    negatives = _j_negative_part(g.k, g.i)
    mu = g.milnor
    at_zero = mu - 2 * len(negatives)
    assert at_zero >= 0, f"negative multiplicity at 0 for {g}"
    pairs = [(v, 1) for v in negatives]
    pairs += [(-v, 1) for v in negatives]
    if at_zero:
        pairs.append((Fraction(0), at_zero))
    return make_spectrum(pairs)


def germ_spectrum(g: GermClass) -> Spectrum:
    """Spectrum of the class in its ambient variable count.

    Equals the curve spectrum suspended n-2 times, hence symmetric about
    (n-2)/2 and contained in ]-1, n-1[.
    """
    n = g.ambient_vars
    if n < 2:
        raise ValueError(f"ambient_vars must be >= 2, got {n}")
    return curve_spectrum(g).suspend(n - 2)


def fermat_spectrum(n: int, d: int) -> Spectrum:
    """Spectrum of the diagonal germ x_1^d + ... + x_n^d.

    The multiplicity of k/d is the number of integer tuples (a_1, ..., a_n)
    with 1 <= a_j <= d-1 and sum a_j = k + d, counted by convolving the
    length-(d-1) all-ones vector n times (never by tuple enumeration); the
    total is (d-1)^n.
    """
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    if d < 2:
        raise ValueError(f"need d >= 2, got {d}")
    counts = [1]  # counts[m] = ways to reach sum m + (#parts so far)
    for _ in range(n):
        step = [0] * (len(counts) + d - 2)
        for m, c in enumerate(counts):
            for a in range(d - 1):
                step[m + a] += c
        counts = step
    # sum of parts = n + m, spectral number (n + m)/d - 1
    return make_spectrum(
        (Fraction(n + m - d, d), c) for m, c in enumerate(counts) if c > 0
    )
