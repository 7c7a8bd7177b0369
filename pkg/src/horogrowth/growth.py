"""Closed-form growth series of the lattice subgroup, its cosets, and the
full group, plus an exact dynamic-programming census of coset distances.

Every series is an ordinary generating function in x counting by word
length over the standard generators. All arithmetic is exact.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Mapping

from .errors import BudgetError, FitError
from .series import (
    IntPolynomial,
    ONE,
    RationalFunction,
    X,
    poly,
    rf_mul,
    rf_normalize,
    series_prefix,
)

# public census horizon cap; deeper tables exist only behind the fitted series
CENSUS_RMAX = 24


def _check_rank(m: int) -> None:
    if m < 1:
        raise ValueError("rank m must be at least 1")


# ---------------------------------------------------------------------------
# building-block polynomials and series


@lru_cache(maxsize=None)
def suffix_poly(m: int) -> IntPolynomial:
    """Length polynomial (1+2x)^m of the 3^m single-level sign words."""
    _check_rank(m)
    return poly(1, 2) ** m


@lru_cache(maxsize=None)
def cap_poly(m: int) -> IntPolynomial:
    """Length polynomial of the 3^m cap words that finish a climb."""
    _check_rank(m)
    return X ** (2 * m) + suffix_poly(m).shift(m + 2) - X ** (2 * m + 2)


def cap_poly_recursive(m: int) -> IntPolynomial:
    """Same polynomial computed by peeling one coordinate at a time."""
    _check_rank(m)
    v1 = poly(0, 0, 1, 1, 1)
    v = v1
    for k in range(2, m + 1):
        lower = X ** (2 * (k - 1))
        v = poly(0, 1, 2) * (v - lower) + lower * v1
    return v


@lru_cache(maxsize=None)
def _block_denominator(k: int) -> IntPolynomial:
    # 1 - x^2 (1+2x)^k
    return ONE - suffix_poly(k).shift(2)


@lru_cache(maxsize=None)
def _denominator_product(m: int) -> IntPolynomial:
    out = ONE
    for k in range(1, m + 1):
        out = out * _block_denominator(k)
    return out


@lru_cache(maxsize=None)
def prefix_suffix_series(m: int) -> RationalFunction:
    """Series 1/(1 - x^2 W_m) counting chains of climb-and-refill blocks."""
    _check_rank(m)
    return rf_normalize(ONE, _block_denominator(m))


@lru_cache(maxsize=None)
def _positive_raw(m: int) -> tuple[IntPolynomial, IntPolynomial]:
    """Positive-orthant numerator over the common denominator product.

    Terms are indexed by the set of proper prefix sums of a composition
    of m; each term carries the multinomial count of ways to split the
    coordinates into the composition's blocks.
    """
    den = _denominator_product(m)
    num = X**m * den
    fact = [math.factorial(i) for i in range(m + 1)]

    ks = list(range(1, m))
    half = len(ks) // 2
    left, right = ks[:half], ks[half:]

    def complement_products(positions):
        table = []
        for mask in range(2 ** len(positions)):
            prod = ONE
            for idx, k in enumerate(positions):
                if not mask >> idx & 1:
                    prod = prod * _block_denominator(k)
            table.append(prod)
        return table

    left_comp = complement_products(left)
    right_comp = complement_products(right)

    for mask in range(2 ** len(ks)):
        s = [k for k in ks if mask >> (k - 1) & 1]
        bounds = s + [m]
        parts = [bounds[0]] + [b - a for a, b in zip(bounds, bounds[1:])]
        mult = fact[m]
        for p in parts:
            mult //= fact[p]
        term = mult * cap_poly(bounds[0])
        if s:
            term = term * poly(1, 2) ** (sum(s) - s[0])
        comp = left_comp[mask & ((1 << half) - 1)] * right_comp[mask >> half]
        term = term * comp
        if s:
            term = term.shift(m - s[0] + 2 * (len(s) - 1))
        num = num + term
    return num, den


@lru_cache(maxsize=None)
def positive_series(m: int) -> RationalFunction:
    """Growth series of the lattice vectors with every coordinate >= 1."""
    _check_rank(m)
    return rf_normalize(*_positive_raw(m))


@lru_cache(maxsize=None)
def subgroup_series(m: int) -> RationalFunction:
    """Growth series of the rank-m lattice subgroup inside the whole group."""
    _check_rank(m)
    den = _denominator_product(m)
    total = den
    for i in range(1, m + 1):
        num_i, _ = _positive_raw(i)
        tail = ONE
        for k in range(i + 1, m + 1):
            tail = tail * _block_denominator(k)
        total = total + math.comb(m, i) * 2**i * num_i * tail
    return rf_normalize(total, den)


# ---------------------------------------------------------------------------
# coset census


@dataclass(frozen=True)
class CosetCensus:
    """Counts chi(level, r) of lattice cosets by level and graph distance."""

    m: int
    rmax: int
    columns: Mapping[int, tuple[int, ...]]

    def chi(self, level: int, r: int) -> int:
        if level > 0:
            raise ValueError("coset levels are nonpositive")
        if not 0 <= r <= self.rmax:
            raise ValueError("distance outside the census horizon")
        col = self.columns.get(level)
        return col[r] if col is not None else 0

    def column(self, level: int) -> tuple[int, ...]:
        if level > 0:
            raise ValueError("coset levels are nonpositive")
        return tuple(self.columns.get(level, (0,) * (self.rmax + 1)))

    def to_json(self) -> dict:
        return {
            "m": self.m,
            "rmax": self.rmax,
            "chi": {
                str(level): list(self.columns[level])
                for level in sorted(self.columns, reverse=True)
            },
        }


@lru_cache(maxsize=None)
def _stem_columns(m: int, rmax: int) -> dict[int, tuple[int, ...]]:
    """chi table from the stem normal form: T^n then j nonempty-or-lone-t
    blocks, the first block nonempty whenever n >= 1."""
    block_cost = [0] * (m + 2)
    for letters in range(m + 1):
        block_cost[letters + 1] = math.comb(m, letters) * 2**letters
    table = {level: [0] * (rmax + 1) for level in range(0, -(rmax + 1), -1)}
    for n in range(rmax + 1):
        table[-max(0, n)][n] += 1
        dist = [0] * (rmax + 1)
        for cost, ways in enumerate(block_cost):
            if ways and not (n >= 1 and cost == 1) and n + cost <= rmax:
                dist[n + cost] += ways
        j = 1
        while any(dist):
            col = table[-max(0, n - j)]
            for r, cnt in enumerate(dist):
                col[r] += cnt
            nxt = [0] * (rmax + 1)
            for r, cnt in enumerate(dist):
                if cnt:
                    for cost, ways in enumerate(block_cost):
                        if ways and r + cost <= rmax:
                            nxt[r + cost] += cnt * ways
            dist = nxt
            j += 1
    return {level: tuple(col) for level, col in table.items()}


def coset_census(m: int, rmax: int) -> CosetCensus:
    """Exact counts of cosets of the lattice subgroup by level and distance."""
    _check_rank(m)
    if rmax < 0:
        raise ValueError("census horizon must be nonnegative")
    if rmax > CENSUS_RMAX:
        raise BudgetError(
            f"census horizon {rmax} exceeds the supported cap {CENSUS_RMAX}"
        )
    return CosetCensus(m, rmax, _stem_columns(m, rmax))


# ---------------------------------------------------------------------------
# level series fitted against the census


@dataclass(frozen=True)
class LevelSeries:
    """Certified generating functions of coset counts at levels -1 and 0."""

    X_minus1: RationalFunction
    X_0: RationalFunction
    p_hat: IntPolynomial
    q_hat: IntPolynomial
    certified_to: int


def _column_times(column, p: IntPolynomial) -> list[int]:
    pc = p.coeffs
    return [
        sum(pc[j] * column[k - j] for j in range(min(k, len(pc) - 1) + 1))
        for k in range(len(column))
    ]


@lru_cache(maxsize=None)
def level_series(m: int) -> LevelSeries:
    """Fit numerators for the level -1 and level 0 coset series and certify
    both expansions against the census through a horizon that exceeds twice
    the permitted numerator degree."""
    _check_rank(m)
    horizon = 2 * (m + 4) + 6
    columns = _stem_columns(m, horizon)
    col1 = columns[-1]
    col0 = columns[0]
    d2 = _block_denominator(m)
    d1 = ONE - suffix_poly(m).shift(1)
    xw = suffix_poly(m).shift(1)

    p_full = _column_times(col1, d2)
    for k in range(m + 5, horizon + 1):
        if p_full[k]:
            raise FitError(f"level -1 census leaves a residual at x^{k}")
    p_hat = IntPolynomial(tuple(p_full[: m + 5]))

    q_full = [
        a - b
        for a, b in zip(_column_times(col0, d1), _column_times(col1, xw))
    ]
    for k in range(m + 2, horizon + 1):
        if q_full[k]:
            raise FitError(f"level 0 census leaves a residual at x^{k}")
    q_hat = IntPolynomial(tuple(q_full[: m + 2]))

    x_minus1 = rf_normalize(p_hat, d2)
    x_zero = rf_normalize(xw * p_hat + q_hat * d2, d1 * d2)
    if list(series_prefix(x_minus1, horizon)) != list(col1):
        raise FitError("level -1 series fails certification against the census")
    if list(series_prefix(x_zero, horizon)) != list(col0):
        raise FitError("level 0 series fails certification against the census")
    return LevelSeries(x_minus1, x_zero, p_hat, q_hat, horizon)


# ---------------------------------------------------------------------------
# relative and full-group growth


def relative_growth_series(m: int, n: int) -> RationalFunction:
    """Growth series of the coset T^n times the lattice, counted relative to
    the stem length: W_m^n times the subgroup series."""
    _check_rank(m)
    if n < 0:
        raise ValueError("stem depth n must be nonnegative")
    s = subgroup_series(m)
    return rf_normalize(suffix_poly(m) ** n * s.num, s.den)


@lru_cache(maxsize=None)
def full_series(m: int) -> RationalFunction:
    """Growth series of the whole group, assembled from the subgroup series
    and the certified level series, cross-checked against its product form."""
    _check_rank(m)
    s = subgroup_series(m)
    ls = level_series(m)
    w = suffix_poly(m)
    d1 = ONE - w.shift(1)
    assembled = rf_mul(s, ls.X_0) + rf_mul(
        rf_mul(s, ls.X_minus1), rf_normalize(w, d1)
    )
    candidate = rf_mul(
        s,
        rf_normalize(poly(1, 0, -1) * (ONE + w.shift(1)), d1 * _block_denominator(m)),
    )
    if assembled != candidate:
        raise FitError("assembled full-group series disagrees with its product form")
    return assembled


def published_full_form(m: int) -> RationalFunction:
    """Previously published closed forms for the full-group series, kept only
    for diagnostic comparison: their x coefficients contradict the forced
    sphere count 2m+2, so full_series never uses them."""
    if m == 1:
        return rf_normalize(
            poly(1, 1) * poly(1, -1) ** 2 * poly(1, 1, 2),
            poly(1, -2) * poly(1, 0, -1, -2) ** 2,
        )
    if m == 2:
        return rf_normalize(
            poly(1, -1) ** 2 * poly(1, 1) * poly(1, 2, 2) ** 2 * poly(1, 0, 4),
            poly(1, -2) ** 2 * poly(1, 1, 2) * poly(1, -1, -4, -4),
        )
    raise ValueError("no published form is transcribed for this rank")
