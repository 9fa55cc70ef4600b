"""Exhaustive enumeration of singular-locus configurations with a given polar degree.

For parameters (n, d, k) the target total Milnor number is (d-1)^n - k, and a
configuration is any multiset of catalog germs in ambient n whose Milnor
numbers add up to it.  Enumeration is a depth-first partition search over a
canonically ordered germ pool (non-increasing germ order, so each multiset is
produced exactly once); since every family's Milnor number grows strictly
with its parameters, the pool of admissible classes is finite.

Filters, in order:

* ``alpha1`` (k >= 2): every germ spectrum's smallest element must exceed
  -1 + (n-1)/(k+2); applied to the germ pool.
* ``corank`` (k >= 2, n >= 3): the generic hyperplane section of a suspended
  catalog germ has corank max(corank_curve - 1, 0), and 2 to that power can
  be at most k; applied to the germ pool as an exact power comparison.
* ``huh`` : the gradient-degree lower bound (exact multiplicity criterion in
  the plane, catalog membership for n >= 3 when k <= 2); applied to the pool.
* ``semicontinuity``: window counts of the summed spectrum must not exceed
  the diagonal-germ target's anywhere; applied to every complete
  configuration, and incrementally during the search (window counts only grow
  when germs are added, so a partial sum that already exceeds a target window
  prunes its whole subtree without changing the survivor set).

Reported counts: ``examined`` is the number of complete configurations that
reached the target Milnor sum and entered per-configuration checking;
``pruned_by`` records, for the pool filters, how many germ classes they
removed and, for semicontinuity, how many subtrees and complete
configurations it cut.  Survivors are returned canonically sorted, so runs
with any worker count produce identical reports.  Survivors satisfy a
necessary criterion only: they are candidates, not certified hypersurfaces.
"""

from __future__ import annotations

import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from importlib import resources
from typing import Iterable, Optional

from .bounds import alpha1_threshold
from .catalog import GermClass, corank_curve, fermat_spectrum, germ_spectrum
from .polar import (
    Configuration,
    InfeasibleConfigurationError,
    huh_inequality_holds,
    polar_degree,
    sectional_milnor_plane,
)
from .semicontinuity import candidate_spectrum, check_configuration, window_test_points
from .spectrum import EMPTY, NEG_INF, Spectrum, deg_window

__all__ = [
    "HuhEntryResult",
    "HuhVerification",
    "SearchFilters",
    "SearchReport",
    "enumerate_configurations",
    "germ_pool",
    "load_huh_lists",
    "verify_huh_lists",
]

FILTER_NAMES = ("alpha1", "corank", "huh", "semicontinuity")

# Window labels whose target degrees are embedded in reports for the two
# elimination cases, for cross-reading against the hand argument.
_DIAGNOSTIC_CASES = {(5, 3), (4, 3)}
_DIAGNOSTIC_WINDOWS = (
    ("]1,2[", (Fraction(1), Fraction(2), True, True)),
    ("]-inf,1[", (NEG_INF, Fraction(1), True, True)),
    ("]-inf,-1/3]", (NEG_INF, Fraction(-1, 3), True, False)),
    ("]2/3,5/3[", (Fraction(2, 3), Fraction(5, 3), True, True)),
)


@dataclass(frozen=True)
class SearchFilters:
    """Which filters a search applies; all on by default."""

    alpha1: bool = True
    corank: bool = True
    huh: bool = True
    semicontinuity: bool = True
    open_variant: bool = True

    def applied_names(self) -> tuple[str, ...]:
        names = [name for name in FILTER_NAMES if getattr(self, name)]
        if self.semicontinuity and self.open_variant:
            names.append("semicontinuity_open_variant")
        return tuple(names)


@dataclass(frozen=True)
class SearchReport:
    n: int
    d: int
    k: int
    target_mu: int
    whitelist: tuple[str, ...]
    filters_applied: tuple[str, ...]
    survivors: tuple[Configuration, ...]
    examined: int
    pruned_by: tuple[tuple[str, int], ...]
    diagnostic_windows: tuple[tuple[str, int], ...] = ()

    def pruned_by_dict(self) -> dict[str, int]:
        return dict(self.pruned_by)

    def to_json_obj(self) -> dict:
        return {
            "params": {"n": self.n, "d": self.d, "k": self.k},
            "target_mu": self.target_mu,
            "whitelist": list(self.whitelist),
            "filters_applied": list(self.filters_applied),
            "survivors": [c.to_json_obj() for c in self.survivors],
            "examined": self.examined,
            "pruned_by": {name: count for name, count in self.pruned_by},
            "diagnostic_windows": {label: deg for label, deg in self.diagnostic_windows},
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), sort_keys=True, separators=(",", ":"))


def germ_pool(n: int, mu_max: int, whitelist: Iterable[str] = ("A", "D", "E", "J")) -> list[GermClass]:
    """All catalog classes in ambient n with Milnor number <= mu_max."""
    families = set(whitelist)
    unknown = families.difference(("A", "D", "E", "J"))
    if unknown:
        raise ValueError(f"unknown families in whitelist: {sorted(unknown)}")
    pool: list[GermClass] = []
    if "A" in families:
        pool += [GermClass("A", k, 0, n) for k in range(1, mu_max + 1)]
    if "D" in families:
        pool += [GermClass("D", k, 0, n) for k in range(4, mu_max + 1)]
    if "E" in families:
        pool += [
            GermClass("E", m, 0, n)
            for m in range(6, mu_max + 1)
            if m % 6 in (0, 1, 2)
        ]
    if "J" in families:
        k = 2
        while 6 * k - 2 <= mu_max:
            pool += [
                GermClass("J", k, i, n) for i in range(0, mu_max - (6 * k - 2) + 1)
            ]
            k += 1
    return sorted(pool, key=GermClass.sort_key)


def _prune_windows(
    target: Spectrum, open_variant: bool
) -> list[tuple[object, object, bool, bool, int]]:
    # Windows used for incremental subtree pruning, derived from the target
    # alone: unit windows of both kinds at every target test point plus the
    # lower rays they imply.  Each entry is (a, b, left_open, right_open, rhs).
    points = window_test_points(EMPTY, target)
    windows = []
    for a in points:
        windows.append((a, a + 1, True, False, deg_window(target, a, a + 1, True, False)))
        windows.append((None, a, True, False, deg_window(target, NEG_INF, a, True, False)))
        if open_variant:
            windows.append((a, a + 1, True, True, deg_window(target, a, a + 1, True, True)))
            windows.append((None, a, True, True, deg_window(target, NEG_INF, a, True, True)))
    return windows


def _germ_window_vector(spec: Spectrum, windows) -> tuple[int, ...]:
    vec = []
    for a, b, left_open, right_open, _rhs in windows:
        lo = NEG_INF if a is None else a
        vec.append(deg_window(spec, lo, b, left_open, right_open))
    return tuple(vec)


class _SearchContext:
    """Prepared pool, pruning windows and filter bookkeeping for one search."""

    def __init__(self, n: int, d: int, k: int, whitelist: frozenset[str], filters: SearchFilters):
        self.n, self.d, self.k = n, d, k
        self.filters = filters
        self.target_mu = (d - 1) ** n - k
        self.target = fermat_spectrum(n, d)
        self.pool_pruned: dict[str, int] = {name: 0 for name in FILTER_NAMES}

        pool = germ_pool(n, self.target_mu, sorted(whitelist))
        if filters.alpha1 and k >= 2:
            threshold = alpha1_threshold(n, k)
            kept = []
            for g in pool:
                if germ_spectrum(g).min_spectral() > threshold:
                    kept.append(g)
                else:
                    self.pool_pruned["alpha1"] += 1
            pool = kept
        if filters.corank and k >= 2 and n >= 3:
            kept = []
            for g in pool:
                # generic slice of a suspended germ drops the curve corank by one
                if 2 ** max(corank_curve(g) - 1, 0) <= k:
                    kept.append(g)
                else:
                    self.pool_pruned["corank"] += 1
            pool = kept
        if filters.huh and k >= 1:
            kept = []
            for g in pool:
                if self._huh_admits(g):
                    kept.append(g)
                else:
                    self.pool_pruned["huh"] += 1
            pool = kept

        # non-increasing canonical order: heaviest germ first
        self.pool = sorted(pool, key=lambda g: (-g.milnor,) + g.sort_key())
        self.mus = [g.milnor for g in self.pool]
        if filters.semicontinuity:
            self.windows = _prune_windows(self.target, filters.open_variant)
            self.rhs = [w[4] for w in self.windows]
            self.vectors = [
                _germ_window_vector(germ_spectrum(g), self.windows) for g in self.pool
            ]
        else:
            self.windows = []
            self.rhs = []
            self.vectors = [() for _ in self.pool]

    def _huh_admits(self, g: GermClass) -> bool:
        if self.n == 2:
            return sectional_milnor_plane(g) <= self.k
        return huh_inequality_holds(Configuration(self.n, self.d, (g,)), self.k)


def _run_roots(ctx: _SearchContext, roots: list[int]) -> tuple[list[Configuration], int, int, int]:
    """DFS below the given top-level pool indices.

    Returns (survivors, examined, subtree_prunes, final_rejections).
    """
    n, d = ctx.n, ctx.d
    pool, mus, vectors, rhs = ctx.pool, ctx.mus, ctx.vectors, ctx.rhs
    nwin = len(rhs)
    use_semi = ctx.filters.semicontinuity
    survivors: list[Configuration] = []
    examined = 0
    subtree_prunes = 0
    final_rejections = 0
    acc = [0] * nwin
    stack: list[int] = []

    def finish() -> None:
        nonlocal examined, final_rejections
        examined += 1
        config = Configuration(n, d, tuple(pool[i] for i in stack))
        if use_semi:
            report = check_configuration(config, ctx.filters.open_variant)
            if not report.holds:
                final_rejections += 1
                return
        survivors.append(config)

    def dfs(start: int, remaining: int) -> None:
        nonlocal subtree_prunes
        if remaining == 0:
            finish()
            return
        for idx in range(start, len(pool)):
            if mus[idx] > remaining:
                continue
            if use_semi:
                vec = vectors[idx]
                violated = -1
                for j in range(nwin):
                    acc[j] += vec[j]
                    if acc[j] > rhs[j]:
                        violated = j
                        break
                if violated >= 0:
                    for j in range(violated + 1):
                        acc[j] -= vec[j]
                    subtree_prunes += 1
                    continue
            stack.append(idx)
            dfs(idx, remaining - mus[idx])
            stack.pop()
            if use_semi:
                for j in range(nwin):
                    acc[j] -= vec[j]

    for root in roots:
        if mus[root] > ctx.target_mu:
            continue
        if use_semi:
            vec = vectors[root]
            if any(vec[j] > rhs[j] for j in range(nwin)):
                subtree_prunes += 1
                continue
            for j in range(nwin):
                acc[j] += vec[j]
        stack.append(root)
        dfs(root, ctx.target_mu - mus[root])
        stack.pop()
        if use_semi:
            for j in range(nwin):
                acc[j] -= vec[j]
    return survivors, examined, subtree_prunes, final_rejections


def _worker(args) -> tuple[list[dict], int, int, int]:
    n, d, k, whitelist, filters, roots = args
    ctx = _SearchContext(n, d, k, whitelist, filters)
    survivors, examined, prunes, rejections = _run_roots(ctx, roots)
    return [c.to_json_obj() for c in survivors], examined, prunes, rejections


def enumerate_configurations(
    n: int,
    d: int,
    k: int,
    whitelist: Iterable[str] = ("A", "D", "E", "J"),
    filters: SearchFilters = SearchFilters(),
    workers: int = 1,
) -> SearchReport:
    """Enumerate and filter all germ multisets with total Milnor (d-1)^n - k.

    With ``workers > 1`` the top-level branches are fanned out over a process
    pool; the merged report is byte-identical to the single-process one.

    For k <= 2 restricting to the A/D/E/J catalog is forced by the
    gradient-degree bound; for k >= 3 the whitelist is an input assumption,
    and the report records what was searched.
    """
    if n < 2 or d < 2 or k < 0:
        raise ValueError(f"need n >= 2, d >= 2, k >= 0, got {(n, d, k)}")
    target_mu = (d - 1) ** n - k
    if target_mu < 0:
        raise InfeasibleConfigurationError(
            f"polar degree {k} exceeds (d-1)^n = {(d - 1) ** n}"
        )
    whitelist = frozenset(whitelist)
    ctx = _SearchContext(n, d, k, whitelist, filters)

    if target_mu == 0:
        # only the smooth configuration; run it through the same final filter
        survivors, examined, prunes, rejections = [], 1, 0, 0
        config = Configuration(n, d, ())
        if filters.semicontinuity:
            if check_configuration(config, filters.open_variant).holds:
                survivors.append(config)
            else:
                rejections += 1
        else:
            survivors.append(config)
    else:
        roots = list(range(len(ctx.pool)))
        if workers > 1 and len(roots) > 1:
            chunks = [roots[i::workers] for i in range(workers)]
            args = [
                (n, d, k, whitelist, filters, chunk) for chunk in chunks if chunk
            ]
            survivors = []
            examined = prunes = rejections = 0
            with ProcessPoolExecutor(max_workers=workers) as pool_exec:
                for surv_objs, exa, pru, rej in pool_exec.map(_worker, args):
                    survivors += [Configuration.from_json_obj(o) for o in surv_objs]
                    examined += exa
                    prunes += pru
                    rejections += rej
        else:
            survivors, examined, prunes, rejections = _run_roots(ctx, roots)

    pruned = dict(ctx.pool_pruned)
    pruned["semicontinuity"] = prunes + rejections
    survivors = sorted(survivors, key=lambda c: tuple(g.sort_key() for g in c.germs))
    for c in survivors:
        assert candidate_spectrum(c).total() == target_mu
        assert polar_degree(c) == k

    diagnostics = ()
    if (n, d) in _DIAGNOSTIC_CASES:
        diagnostics = tuple(
            (label, deg_window(ctx.target, *bounds))
            for label, bounds in _DIAGNOSTIC_WINDOWS
        )
    return SearchReport(
        n=n,
        d=d,
        k=k,
        target_mu=target_mu,
        whitelist=tuple(sorted(whitelist)),
        filters_applied=filters.applied_names(),
        survivors=tuple(survivors),
        examined=examined,
        pruned_by=tuple(sorted(pruned.items())),
        diagnostic_windows=diagnostics,
    )


# --- bundled reference lists ------------------------------------------------


@dataclass(frozen=True)
class HuhEntryResult:
    key: str
    configuration: Configuration
    expected_pol: int
    computed_pol: Optional[int]
    pol_ok: bool
    semicontinuity_ok: bool
    in_survivors: bool

    @property
    def ok(self) -> bool:
        return self.pol_ok and self.semicontinuity_ok and self.in_survivors

    def diagnosis(self) -> str:
        if self.ok:
            return "ok"
        problems = []
        if not self.pol_ok:
            problems.append(
                f"polar degree {self.computed_pol} != expected {self.expected_pol}"
            )
        if not self.semicontinuity_ok:
            problems.append("fails semicontinuity")
        if not self.in_survivors:
            problems.append("missing from search survivors")
        return "; ".join(problems)

    def to_json_obj(self) -> dict:
        return {
            "key": self.key,
            "configuration": self.configuration.to_json_obj(),
            "expected_pol": self.expected_pol,
            "computed_pol": self.computed_pol,
            "ok": self.ok,
            "diagnosis": self.diagnosis(),
        }


@dataclass(frozen=True)
class HuhVerification:
    entries: tuple[HuhEntryResult, ...]

    @property
    def all_ok(self) -> bool:
        return all(e.ok for e in self.entries)

    def to_json_obj(self) -> dict:
        return {
            "all_ok": self.all_ok,
            "entries": [e.to_json_obj() for e in self.entries],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), sort_keys=True, separators=(",", ":"))


def load_huh_lists() -> list[tuple[str, Configuration, int]]:
    """The 15 bundled reference configurations with their stated polar degrees."""
    text = resources.files("specpol").joinpath("data/huh_lists.json").read_text()
    data = json.loads(text)
    entries: list[tuple[str, Configuration, int]] = []
    for section in ("pol2", "pol1"):
        for key in sorted(data[section], key=lambda s: (len(s), s)):
            obj = data[section][key]
            config = Configuration.from_json_obj(obj)
            entries.append((f"{section}:{key}", config, int(obj["pol"])))
    return entries


def verify_huh_lists(workers: int = 1) -> HuhVerification:
    """Check every bundled entry: stated polar degree, semicontinuity, search membership."""
    entries = load_huh_lists()
    search_cache: dict[tuple[int, int, int], SearchReport] = {}
    results = []
    for key, config, expected in entries:
        try:
            computed: Optional[int] = polar_degree(config)
        except InfeasibleConfigurationError:
            computed = None
        params = (config.n, config.d, expected)
        if params not in search_cache:
            search_cache[params] = enumerate_configurations(*params, workers=workers)
        report = search_cache[params]
        results.append(
            HuhEntryResult(
                key=key,
                configuration=config,
                expected_pol=expected,
                computed_pol=computed,
                pol_ok=computed == expected,
                semicontinuity_ok=check_configuration(config).holds,
                in_survivors=config in report.survivors,
            )
        )
    return HuhVerification(tuple(results))
