"""Definitional cross-checks for the staircase pipeline.

The fast pipeline reads level values off staircase corners.  This module
recomputes the same quantities straight from their definitions:

* a_def: the top degree in which the saturation by the last variable
  differs from the evaluated ideal, found by counting the added monomials
  degree by degree;
* r_def: the top degree of a nonzero graded piece of an Artinian quotient,
  found by counting standard monomials degree by degree.

Both searches run up to a certified ceiling, so a persistent difference is
reported as infinite rather than silently truncated.  cross_check replays
the pipeline's retry transcript and compares every reported level value
against its definitional counterpart on identical data.
"""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass

from .groebner import buchberger, initial_ideal, matrix_digest, random_linear_change
from .monideal import (
    MonomialIdeal,
    difference_degree_counts,
    evaluate_one,
    evaluate_zero,
    gap_search_ceiling,
    graded_dim_quotient,
    lcm_degree,
    minimalize,
)
from .regularity import RegularityReport, Value, _evaluate_polys, _validated_basis, compute_report
from .ring import Exponent, Polynomial
from .staircase import NEG_INF

POS_INF = float("inf")


def a_def(J: MonomialIdeal, i: int, ceiling: int | None = None) -> Value:
    """Level value at level i of J, straight from the definition.

    Evaluates the last i variables to zero, saturates the result by its
    last variable, and returns the top degree in which the two ideals
    differ: -infinity when they agree, +infinity when the difference
    persists at the search ceiling.  The default ceiling is certified
    (a finite difference is exhausted below it and an infinite one is
    still visible at it); an explicit lower ceiling may flag a large
    finite value as infinite.
    """
    value, _, _ = a_def_with_trace(J, i, ceiling)
    return value


def a_def_with_trace(
    J: MonomialIdeal, i: int, ceiling: int | None = None
) -> tuple[Value, dict[int, int], int]:
    """a_def along with the per-degree counts and the ceiling used."""
    if not 0 <= i <= J.s - 1:
        raise ValueError(f"level {i} out of range for {J.s} variables")
    level = evaluate_zero(J, i)
    saturated = evaluate_one(level)
    if ceiling is None:
        ceiling = gap_search_ceiling(level)
    elif ceiling < 1:
        raise ValueError("ceiling must be positive")
    counts = difference_degree_counts(level, saturated, ceiling)
    if counts.get(ceiling, 0) > 0:
        return POS_INF, counts, ceiling
    positive = [deg for deg, cnt in counts.items() if cnt > 0]
    return (max(positive) if positive else NEG_INF), counts, ceiling


def r_def(J: MonomialIdeal, ceiling: int | None = None) -> int:
    """Top degree of a nonzero graded piece of the quotient by J, straight
    from the definition: count standard monomials degree by degree until
    they vanish.  Raises when the quotient is not Artinian."""
    if J.is_unit:
        raise ValueError("unit ideal: the quotient is zero and has no top degree")
    if ceiling is None:
        deg = lcm_degree(J, 0)
        if deg is None:
            raise ValueError(
                "quotient is not Artinian: the zero ideal has infinite dimension"
            )
        ceiling = deg + 1
    for r in range(ceiling + 1):
        if graded_dim_quotient(J, r) == 0:
            return r - 1
    raise ValueError(
        "quotient is not Artinian: graded pieces stay nonzero through the ceiling"
    )


@dataclass(frozen=True)
class LevelCheck:
    level: int
    c_reported: Value
    a_definition: Value
    ceiling: int
    match: bool


@dataclass(frozen=True)
class CrossCheckRecord:
    ok: bool
    levels: tuple[LevelCheck, ...]
    r_reported: int
    r_definition: int
    r_match: bool
    report: RegularityReport


def cross_check(
    gens: list[Polynomial], *, seed: int = 0, max_retries: int = 10
) -> CrossCheckRecord:
    """Run the pipeline, then recompute every level value definitionally.

    The pipeline's retry transcript is replayed step by step (the matrix
    digests must agree), so each reported value is compared against the
    definitional value of exactly the data it was read from.
    """
    report = compute_report(gens, seed=seed, max_retries=max_retries)
    basis = _validated_basis(gens)
    cur = initial_ideal(basis)
    cur_gens = basis
    base = 0
    pending = deque(report.retries)

    checks: list[LevelCheck] = []
    r_definition = 0
    for i in range(report.d + 1):
        while pending and pending[0].level == i:
            rec = pending.popleft()
            evaluated = _evaluate_polys(cur_gens, i - base)
            transformed, matrix = random_linear_change(
                evaluated, evaluated[0].ring.n, rec.seed
            )
            if matrix_digest(matrix) != rec.matrix_digest:
                raise RuntimeError("retry replay produced a different matrix")
            cur_gens = buchberger(transformed)
            cur = initial_ideal(cur_gens)
            base = i
        value, _, ceiling = a_def_with_trace(cur, i - base)
        checks.append(
            LevelCheck(
                level=i,
                c_reported=report.c[i],
                a_definition=value,
                ceiling=ceiling,
                match=value == report.c[i],
            )
        )
        if i == report.d:
            r_definition = r_def(evaluate_zero(cur, i - base))

    r_match = r_definition == report.r
    ok = r_match and all(ch.match for ch in checks)
    return CrossCheckRecord(
        ok=ok,
        levels=tuple(checks),
        r_reported=report.r,
        r_definition=r_definition,
        r_match=r_match,
        report=report,
    )


def borel_closure(s: int, monomials: frozenset[Exponent] | set[Exponent]) -> frozenset[Exponent]:
    """Close a set of exponents under moving one unit of any exponent to an
    earlier position (x_j -> x_h with h < j)."""
    seen: set[Exponent] = set()
    queue = deque(tuple(m) for m in monomials)
    while queue:
        a = queue.popleft()
        if a in seen:
            continue
        if len(a) != s:
            raise ValueError(f"exponent {a} does not have {s} entries")
        seen.add(a)
        for j in range(s):
            if a[j] == 0:
                continue
            for h in range(j):
                b = list(a)
                b[j] -= 1
                b[h] += 1
                queue.append(tuple(b))
    return frozenset(seen)


def is_strongly_stable(J: MonomialIdeal) -> bool:
    """True when every one-unit move toward an earlier variable keeps each
    generator inside the ideal."""
    from .monideal import contains

    for g in J.gens:
        for j in range(J.s):
            if g[j] == 0:
                continue
            for h in range(j):
                b = list(g)
                b[j] -= 1
                b[h] += 1
                if not contains(J, tuple(b)):
                    return False
    return True


def random_strongly_stable_ideal(rng_seed: int, n: int, dmax: int) -> MonomialIdeal:
    """Strongly stable monomial ideal generated by the closure of one to
    three random monomials of positive degree."""
    if n < 1 or dmax < 1:
        raise ValueError("need at least one variable and positive degrees")
    rng = random.Random(rng_seed)
    seeds: set[Exponent] = set()
    for _ in range(rng.randint(1, 3)):
        degree = rng.randint(1, dmax)
        exp = [0] * n
        for _ in range(degree):
            exp[rng.randrange(n)] += 1
        seeds.add(tuple(exp))
    return minimalize(n, borel_closure(n, seeds))
