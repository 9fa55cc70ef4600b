"""Window-count semicontinuity checks against the diagonal-germ spectrum.

A configuration of germs on a degree-d hypersurface in P^n induces, over a
generic affine chart, a deformation of the diagonal germ x_1^d + ... + x_n^d;
semicontinuity of the spectrum then bounds, for every real a, the number of
candidate spectral values in the unit window above a by the corresponding
count for the diagonal germ.  The half-open windows ]a, a+1] always apply;
the open windows ]a, a+1[ apply because the deformation is of lower weight of
a quasi-homogeneous germ (a flag can restrict the check to the half-open
variant only).

Both spectra are finite, so the quantifier over all real a reduces to a
finite test-point set: the window count, as a function of a, can only change
when a or a+1 crosses a support point.  We therefore test every breakpoint
(support values and support values minus one), one midpoint inside each
constancy interval, and one point beyond each end.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

from .catalog import fermat_spectrum, germ_spectrum
from .polar import Configuration
from .spectrum import EMPTY, Spectrum, WindowKind, unit_window_degree

__all__ = [
    "SemicontinuityReport",
    "Violation",
    "candidate_spectrum",
    "check",
    "check_configuration",
    "window_test_points",
]


@dataclass(frozen=True)
class Violation:
    """One failed window: at a, the candidate count lhs exceeds the target rhs."""

    a: Fraction
    lhs: int
    rhs: int
    kind: WindowKind

    def to_json_obj(self) -> dict:
        return {
            "a": {"num": self.a.numerator, "den": self.a.denominator},
            "lhs": self.lhs,
            "rhs": self.rhs,
            "kind": self.kind.value,
        }


@dataclass(frozen=True)
class SemicontinuityReport:
    holds: bool
    violations: tuple[Violation, ...]
    breakpoints_checked: int

    def __post_init__(self) -> None:
        assert self.holds == (not self.violations)

    def merged_with(self, other: "SemicontinuityReport") -> "SemicontinuityReport":
        violations = tuple(
            sorted(
                self.violations + other.violations,
                key=lambda v: (v.a, v.kind.value),
            )
        )
        return SemicontinuityReport(
            holds=self.holds and other.holds,
            violations=violations,
            breakpoints_checked=self.breakpoints_checked + other.breakpoints_checked,
        )

    def to_json_obj(self) -> dict:
        return {
            "holds": self.holds,
            "violations": [v.to_json_obj() for v in self.violations],
            "breakpoints_checked": self.breakpoints_checked,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), sort_keys=True, separators=(",", ":"))


def window_test_points(candidate: Spectrum, target: Spectrum) -> list[Fraction]:
    """Finite set of a-values whose unit windows decide all real a.

    Breakpoints are alpha and alpha-1 over the union of both supports; one
    midpoint per gap captures the generic value of each constancy interval,
    and one point below and above everything covers the unbounded tails.
    """
    support = set(candidate.support) | set(target.support)
    if not support:
        return [Fraction(0)]
    breakpoints = sorted(support | {alpha - 1 for alpha in support})
    points = list(breakpoints)
    for x, y in zip(breakpoints, breakpoints[1:]):
        points.append(Fraction(x + y, 2))
    points.append(breakpoints[0] - 1)
    points.append(breakpoints[-1] + 1)
    return sorted(points)


def check(candidate: Spectrum, target: Spectrum, kind: WindowKind) -> SemicontinuityReport:
    """Verify candidate unit-window counts never exceed the target's.

    Scans every test point for the given window kind and reports each failed
    window with both side values.
    """
    points = window_test_points(candidate, target)
    violations = []
    for a in points:
        lhs = unit_window_degree(candidate, a, kind)
        rhs = unit_window_degree(target, a, kind)
        if lhs > rhs:
            violations.append(Violation(a, lhs, rhs, kind))
    return SemicontinuityReport(
        holds=not violations,
        violations=tuple(violations),
        breakpoints_checked=len(points),
    )


def candidate_spectrum(c: Configuration) -> Spectrum:
    """Sum of the germ spectra of a configuration (ambient n convention)."""
    out = EMPTY
    for g in c.germs:
        out = out + germ_spectrum(g)
    return out


def check_configuration(c: Configuration, apply_open_variant: bool = True) -> SemicontinuityReport:
    """Run the semicontinuity check of a configuration against its target.

    The target is always the diagonal-germ spectrum for (n, d).  The half-open
    windows are always checked; the open windows are added unless
    ``apply_open_variant`` is False.
    """
    cand = candidate_spectrum(c)
    target = fermat_spectrum(c.n, c.d)
    report = check(cand, target, WindowKind.OPEN_CLOSED)
    if apply_open_variant:
        report = report.merged_with(check(cand, target, WindowKind.OPEN_OPEN))
    return report
