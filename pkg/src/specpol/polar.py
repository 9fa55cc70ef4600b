"""Polar degree of a projective hypersurface with isolated singularities.

For a degree-d hypersurface in P^n whose singular locus is the multiset of
catalog germs in a :class:`Configuration`, the polar degree is

    (d - 1)^n  -  sum of the Milnor numbers,

which is non-negative for every configuration that an actual hypersurface can
carry.  The gradient-map lower bound (polar degree >= sectional Milnor number
at every singular point) is used as a filter: computed exactly in the plane
case, and as a catalog-membership condition in higher dimension.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .catalog import GermClass, multiplicity_curve, parse_germ

__all__ = [
    "Configuration",
    "InfeasibleConfigurationError",
    "UnsupportedDimensionError",
    "huh_inequality_holds",
    "polar_degree",
    "sectional_milnor_plane",
]


class InfeasibleConfigurationError(ValueError):
    """Total Milnor number exceeds (d-1)^n: no hypersurface carries it."""


class UnsupportedDimensionError(ValueError):
    """Raised when an exact sectional Milnor number is only known for curves."""


@dataclass(frozen=True)
class Configuration:
    """(n, d, multiset of germs): a candidate singular locus.

    Germs are stored canonically sorted and all share ambient_vars = n.
    """

    n: int
    d: int
    germs: tuple[GermClass, ...]

    def __post_init__(self) -> None:
        if self.n < 2:
            raise ValueError(f"need n >= 2, got {self.n}")
        if self.d < 2:
            raise ValueError(f"need d >= 2, got {self.d}")
        fixed = tuple(
            sorted((g.in_ambient(self.n) for g in self.germs), key=GermClass.sort_key)
        )
        object.__setattr__(self, "germs", fixed)

    @property
    def total_milnor(self) -> int:
        return sum(g.milnor for g in self.germs)

    @property
    def smooth_milnor(self) -> int:
        return (self.d - 1) ** self.n

    def germ_strings(self) -> list[str]:
        return [str(g) for g in self.germs]

    def to_json_obj(self) -> dict:
        return {"n": self.n, "d": self.d, "germs": self.germ_strings()}

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), sort_keys=True, separators=(",", ":"))

    @classmethod
    def from_json_obj(cls, obj: dict) -> "Configuration":
        n = int(obj["n"])
        return cls(n, int(obj["d"]), tuple(parse_germ(s, n) for s in obj["germs"]))

    @classmethod
    def from_json(cls, text: str) -> "Configuration":
        return cls.from_json_obj(json.loads(text))

    def __str__(self) -> str:
        inner = ", ".join(self.germ_strings()) or "smooth"
        return f"(n={self.n}, d={self.d}; {inner})"


def polar_degree(c: Configuration) -> int:
    """(d-1)^n minus the total Milnor number; errors instead of going negative."""
    value = c.smooth_milnor - c.total_milnor
    if value < 0:
        raise InfeasibleConfigurationError(
            f"total Milnor number {c.total_milnor} exceeds (d-1)^n = {c.smooth_milnor}"
        )
    return value


def sectional_milnor_plane(g: GermClass) -> int:
    """Milnor number of a generic point section of a plane-curve germ.

    For a curve this is multiplicity - 1: 1 for the A family, 2 for D/E/J.
    """
    if g.ambient_vars != 2:
        raise UnsupportedDimensionError(
            f"exact sectional Milnor number only implemented for curves, got n={g.ambient_vars}"
        )
    return multiplicity_curve(g) - 1


def huh_inequality_holds(c: Configuration, k: int) -> bool:
    """Gradient-degree lower bound, as far as it is exactly computable.

    In the plane the sectional Milnor number is multiplicity - 1 and must not
    exceed k at any singular point.  For n >= 3 and k <= 2 the bound forces
    every germ into the A/D/E/J catalog, which is a membership condition on
    our germ type; for k >= 3 no exact criterion is available and the check
    passes vacuously.
    """
    if k < 1:
        raise ValueError(f"need k >= 1, got {k}")
    if c.n == 2:
        return all(sectional_milnor_plane(g) <= k for g in c.germs)
    if k <= 2:
        return all(g.family in ("A", "D", "E", "J") for g in c.germs)
    return True
