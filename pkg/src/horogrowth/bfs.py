"""Breadth-first enumeration of the Cayley graph.

This is the brute-force certificate for the closed-form series: sphere
sizes, geodesic distances, coset distances, and relative coset growth
are measured directly on group elements, never through a formula.

A state packs an element a^v t^tee as (tee, exp, nums) where
v = nums / 3**exp with a shared exponent, exp >= 0, and exp > 0 only
when some entry of nums is not divisible by 3.  Generator steps then
touch a single integer instead of m triadic rationals.

Enumeration is capped per rank and by an overall memory budget taken
from the environment variable HOROGROWTH_BUDGET_MB (default 512); work
that would exceed either raises BudgetError before any state is stored.
"""
from __future__ import annotations

import os
from dataclasses import dataclass
from functools import lru_cache
from typing import Mapping, Sequence

from .errors import BudgetError
from .geodesic import word_length
from .group import GroupElement, TriadicRational, Word, coset_key, eval_word
from .growth import CosetCensus, full_series
from .series import series_prefix

State = tuple[int, int, tuple[int, ...]]

RADIUS_CAP = {1: 12, 2: 9, 3: 7}

_DEFAULT_BUDGET_MB = 512
_STATE_BYTES = 120
_STATE_BYTES_PER_COORD = 60


# ---------------------------------------------------------------------------
# state representation


def _initial(m: int) -> State:
    return (0, 0, (0,) * m)


def _moves(m: int) -> tuple[tuple[int, int], ...]:
    """Right-multiplication moves in order a1, A1, ..., am, Am, t, T.

    A move is (index, sign) with index -1 standing for the vertical
    generator."""
    lattice = tuple((i, s) for i in range(m) for s in (1, -1))
    return lattice + ((-1, 1), (-1, -1))


def _apply(state: State, move: tuple[int, int]) -> State:
    tee, exp, nums = state
    idx, sign = move
    if idx < 0:
        return (tee + sign, exp, nums)
    k = exp + tee
    if k >= 0:
        new = list(nums)
        new[idx] += sign * 3**k
        while exp > 0 and all(n % 3 == 0 for n in new):
            new = [n // 3 for n in new]
            exp -= 1
        return (tee, exp, tuple(new))
    scale = 3**-k
    new = [n * scale for n in nums]
    new[idx] += sign
    return (tee, exp - k, tuple(new))


def _from_element(g: GroupElement) -> State:
    exp = max((c.exp for c in g.coords), default=0)
    nums = tuple(c.num * 3 ** (exp - c.exp) for c in g.coords)
    return (g.tee, exp, nums)


def _to_element(m: int, state: State) -> GroupElement:
    tee, exp, nums = state
    return GroupElement(tuple(TriadicRational.make(n, exp) for n in nums), tee)


# ---------------------------------------------------------------------------
# budgets


def _budget_bytes() -> int:
    raw = os.environ.get("HOROGROWTH_BUDGET_MB")
    if raw is None:
        mb = _DEFAULT_BUDGET_MB
    else:
        try:
            mb = int(raw)
        except ValueError:
            raise BudgetError(f"HOROGROWTH_BUDGET_MB is not an integer: {raw!r}")
        if mb <= 0:
            raise BudgetError(f"HOROGROWTH_BUDGET_MB must be positive: {mb}")
    return mb * 1024 * 1024


def _ball_states(m: int, radius: int) -> int:
    """Exact number of states in the ball, from the closed-form series."""
    return sum(series_prefix(full_series(m), radius))


def _check_memory(m: int, states: int) -> None:
    need = states * (_STATE_BYTES + _STATE_BYTES_PER_COORD * m)
    allowed = _budget_bytes()
    if need > allowed:
        raise BudgetError(
            f"enumeration needs about {need} bytes but the budget is "
            f"{allowed} (set HOROGROWTH_BUDGET_MB to raise it)"
        )


def _check_budget(m: int, radius: int) -> None:
    if radius < 0:
        raise ValueError("radius must be nonnegative")
    cap = RADIUS_CAP.get(m)
    if cap is None:
        raise BudgetError(f"no enumeration budget for rank {m}")
    if radius > cap:
        raise BudgetError(f"radius {radius} exceeds the rank-{m} cap {cap}")
    _check_memory(m, _ball_states(m, radius))


# ---------------------------------------------------------------------------
# spheres


@lru_cache(maxsize=None)
def _ball(m: int, radius: int) -> tuple[frozenset, ...]:
    """Spheres 0..radius as frozensets of states."""
    start = _initial(m)
    moves = _moves(m)
    spheres = [frozenset([start])]
    visited = {start}
    frontier = [start]
    for _ in range(radius):
        fresh = set()
        for state in frontier:
            for move in moves:
                nb = _apply(state, move)
                if nb not in visited:
                    fresh.add(nb)
        visited |= fresh
        frontier = list(fresh)
        spheres.append(frozenset(fresh))
    return tuple(spheres)


@dataclass(frozen=True)
class SphereCounts:
    """Sphere sizes out to the given radius, total and split by the
    height bucket min(tau, 0)."""

    m: int
    radius: int
    total: tuple[int, ...]
    horocyclic: tuple[int, ...]
    by_level: Mapping[int, tuple[int, ...]]


def bfs_spheres(m: int, radius: int) -> SphereCounts:
    """Count elements at each graph distance 0..radius."""
    _check_budget(m, radius)
    spheres = _ball(m, radius)
    total = tuple(len(s) for s in spheres)
    horo = tuple(
        sum(1 for tee, exp, _ in s if tee == 0 and exp == 0) for s in spheres
    )
    levels: dict[int, list[int]] = {}
    for r, sphere in enumerate(spheres):
        for tee, _, _ in sphere:
            col = levels.setdefault(min(tee, 0), [0] * (radius + 1))
            col[r] += 1
    by_level = {level: tuple(col) for level, col in levels.items()}
    return SphereCounts(m, radius, total, horo, by_level)


def bfs_subgroup_spheres(m: int, radius: int) -> list[int]:
    """Count lattice elements at each graph distance 0..radius."""
    return list(bfs_spheres(m, radius).horocyclic)


# ---------------------------------------------------------------------------
# distances


def _distances_from(m: int, start: State, radius: int) -> dict[State, int]:
    moves = _moves(m)
    dist = {start: 0}
    frontier = [start]
    for r in range(1, radius + 1):
        fresh = []
        for state in frontier:
            for move in moves:
                nb = _apply(state, move)
                if nb not in dist:
                    dist[nb] = r
                    fresh.append(nb)
        frontier = fresh
    return dist


def element_distance(m: int, vec: Sequence[int]) -> int:
    """Graph distance from the identity to the lattice element a^vec.

    Works by growing balls around both endpoints to half the spelled
    word length, so it needs word_length(m, vec) <= 2 * RADIUS_CAP[m].
    """
    if len(vec) != m:
        raise ValueError("vector length does not match the rank")
    cap = RADIUS_CAP.get(m)
    if cap is None:
        raise BudgetError(f"no enumeration budget for rank {m}")
    if not any(vec):
        return 0
    upper = word_length(m, vec)
    if upper > 2 * cap:
        raise BudgetError(
            f"word length {upper} exceeds twice the rank-{m} cap {cap}"
        )
    near = upper // 2
    far = upper - near
    _check_memory(m, _ball_states(m, near) + _ball_states(m, far))
    df = _distances_from(m, _initial(m), near)
    db = _distances_from(m, (0, 0, tuple(vec)), far)
    if len(db) < len(df):
        df, db = db, df
    return min(df[s] + db[s] for s in df if s in db)


# ---------------------------------------------------------------------------
# coset census and relative growth


def coset_distance_census(m: int, radius: int) -> CosetCensus:
    """chi(level, r) measured on the graph: each coset is charged to the
    distance of its closest element."""
    _check_budget(m, radius)
    spheres = _ball(m, radius)
    columns = {level: [0] * (radius + 1) for level in range(0, -(radius + 1), -1)}
    seen = set()
    for r, sphere in enumerate(spheres):
        for state in sphere:
            key = coset_key(_to_element(m, state))
            if key not in seen:
                seen.add(key)
                columns[min(state[0], 0)][r] += 1
    return CosetCensus(m, radius, {lv: tuple(col) for lv, col in columns.items()})


def relative_growth(m: int, stem: Word, radius: int) -> list[int]:
    """Count elements of the coset (stem) Z^m at distance L + r for
    r = 0..radius, where L is the stem's token count.

    The stem must be geodesic to its coset: its token count must equal
    the coset's graph distance, otherwise ValueError."""
    if stem.m != m:
        raise ValueError("stem rank does not match m")
    span = stem.length + radius
    _check_budget(m, span)
    spheres = _ball(m, span)
    key = coset_key(eval_word(stem))
    per_radius = [
        sum(1 for state in sphere if coset_key(_to_element(m, state)) == key)
        for sphere in spheres
    ]
    first = next(r for r, count in enumerate(per_radius) if count)
    if first != stem.length:
        raise ValueError(
            f"stem of length {stem.length} reaches a coset at distance {first}"
        )
    return per_radius[stem.length :]


def bfs_report(m: int, radius: int) -> dict:
    """JSON-ready summary of one enumeration."""
    counts = bfs_spheres(m, radius)
    census = coset_distance_census(m, radius)
    return {
        "m": m,
        "radius": radius,
        "total": list(counts.total),
        "horocyclic": list(counts.horocyclic),
        "chi": census.to_json()["chi"],
    }
