"""Staircase combinatorics for evaluation levels.

For a monomial ideal J in s variables the corner set F(J) collects the
exponent vectors a with x^a outside J but x_j * x^a inside J for every j.
Corners of the successive evaluations J_i of an initial ideal carry the
level values c_i and the top value r used by the regularity formula:

  c_i = max degree of a corner of J_i   (-infinity when there is none),
  r   = max degree of a corner of J_d   (J_d Artinian).

The finiteness test below certifies c_i < infinity before the corner
maximum may be read as c_i; without the certificate the corner maximum of
a badly positioned ideal underestimates an infinite value.
"""

from __future__ import annotations

import itertools
from collections import defaultdict
from dataclasses import dataclass

from .monideal import MonomialIdeal, contains
from .ring import Exponent, exp_degree, exp_divides

NEG_INF = float("-inf")


@dataclass(frozen=True)
class ExponentSet:
    """Minimal generator exponents of an evaluation, with ambient count."""

    s: int
    elements: frozenset[Exponent]


@dataclass(frozen=True)
class CornerSet:
    s: int
    elements: frozenset[Exponent]

    def max_degree(self) -> int | float:
        if not self.elements:
            return NEG_INF
        return max(exp_degree(a) for a in self.elements)


def exponent_set(J: MonomialIdeal) -> ExponentSet:
    return ExponentSet(J.s, J.gens)


def _delete(v: Exponent, j: int) -> Exponent:
    """Remove the j-th coordinate, 1-based."""
    return v[: j - 1] + v[j:]


def project(E: ExponentSet, j: int) -> ExponentSet:
    """Image of E under deletion of the j-th coordinate (1-based)."""
    if not 1 <= j <= E.s:
        raise ValueError(f"coordinate {j} out of range for {E.s}")
    return ExponentSet(E.s - 1, frozenset(_delete(a, j) for a in E.elements))


def is_c_finite(E_level: ExponentSet, E_next: ExponentSet) -> bool:
    """Certify that inverting the last live variable adds only finitely
    many monomials at this level.

    E_level holds the generator exponents of the level ideal (s variables),
    E_next those of the next evaluation (s - 1 variables).  The level value
    is finite exactly when every projected generator a outside E_next is,
    for each coordinate j of the smaller space, dominated by some element
    of E_next once coordinate j is deleted from both.
    """
    s = E_level.s
    if s < 1:
        raise ValueError("level ideal needs at least one variable")
    if E_next.s != s - 1:
        raise ValueError(f"next evaluation must have {s - 1} variables, got {E_next.s}")
    difference = project(E_level, s).elements - E_next.elements
    for a in difference:
        for j in range(1, s):
            pa = _delete(a, j)
            if not any(exp_divides(_delete(b, j), pa) for b in E_next.elements):
                return False
    return True


def corners(J: MonomialIdeal) -> CornerSet:
    """All socle exponents of J: a with x^a not in J, x_j * x^a in J for
    every j.

    Every corner coordinate a_j equals v_j - 1 for some generator v with
    v_j >= 1, so the search walks the grid of those candidate values,
    pruning a prefix as soon as a generator supported on the processed
    coordinates divides it.
    """
    s = J.s
    if J.is_unit:
        return CornerSet(s, frozenset())
    if s == 0:
        return CornerSet(0, frozenset({()}))
    candidates = [sorted({g[j] - 1 for g in J.gens if g[j] >= 1}) for j in range(s)]
    if any(not c for c in candidates):
        return CornerSet(s, frozenset())
    by_last: dict[int, list[Exponent]] = defaultdict(list)
    for g in J.gens:
        by_last[max(k for k in range(s) if g[k])].append(g)

    found: set[Exponent] = set()
    prefix = [0] * s

    def blocked(pos: int) -> bool:
        return any(
            all(prefix[k] >= g[k] for k in range(pos + 1)) for g in by_last.get(pos, ())
        )

    def walk(pos: int) -> None:
        for e in candidates[pos]:
            prefix[pos] = e
            if blocked(pos):
                break  # divisibility is monotone in the candidate value
            if pos == s - 1:
                a = tuple(prefix)
                if all(
                    contains(J, a[:j] + (a[j] + 1,) + a[j + 1 :]) for j in range(s)
                ):
                    found.add(a)
            else:
                walk(pos + 1)
        prefix[pos] = 0

    walk(0)
    return CornerSet(s, frozenset(found))


def corners_reference(J: MonomialIdeal) -> CornerSet:
    """Reference construction of the corner set, kept only to cross-check
    corners(): enumerate families (v_1..v_s) of generators whose j-th
    member strictly dominates the others in coordinate j, form the
    componentwise maximum minus (1,..,1), and keep vectors outside J."""
    s = J.s
    if J.is_unit:
        return CornerSet(s, frozenset())
    if s == 0:
        return CornerSet(0, frozenset({()}))
    gens = J.sorted_gens()
    found: set[Exponent] = set()
    for family in itertools.product(gens, repeat=s):
        if not all(
            all(family[j][j] > family[h][j] for h in range(s) if h != j)
            for j in range(s)
        ):
            continue
        a = tuple(max(v[k] for v in family) - 1 for k in range(s))
        if not contains(J, a):
            found.add(a)
    return CornerSet(s, frozenset(found))


def is_artinian(J: MonomialIdeal) -> bool:
    """Finite-dimensional quotient: a pure-power generator in every
    variable (vacuously true with no variables)."""
    for j in range(J.s):
        if not any(all(g[k] == 0 for k in range(J.s) if k != j) for g in J.gens):
            return False
    return True


def c_value(J: MonomialIdeal, *, certified: bool) -> int | float:
    """Level value from the corner maximum.  The caller must hold a
    finiteness certificate from is_c_finite (or Artinianness); the corner
    maximum of an uncertified level is meaningless."""
    if not certified:
        raise ValueError("c_value needs a finiteness certificate for this level")
    return corners(J).max_degree()


def r_value(J: MonomialIdeal) -> int:
    """Top degree of a standard monomial of an Artinian evaluation, read
    off as the maximal corner degree."""
    if J.is_unit:
        raise ValueError("unit ideal: the quotient is zero")
    if not is_artinian(J):
        raise ValueError(
            "top evaluation is not Artinian: r is infinite "
            "(evaluations not in general position)"
        )
    value = corners(J).max_degree()
    if value == NEG_INF:
        raise AssertionError("unreachable: Artinian proper ideal has a corner")
    return int(value)
