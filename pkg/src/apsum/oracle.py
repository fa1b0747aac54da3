"""Brute-force reference engine for numerical semigroups.

Everything here is exhaustive dynamic programming over an explicit generator
list: membership sieves, Apery sets, Frobenius and pseudo-Frobenius numbers,
element orders, and representation counts.  The closed forms elsewhere in the
package are always cross-checked against these functions, so they stay
deliberately simple and exact (Python integers throughout).

All functions are pure; generator lists are normalized to tuples.
"""

from __future__ import annotations

from functools import reduce
from math import gcd

from .errors import DomainError


def validate_generators(gens) -> tuple[int, ...]:
    """Normalize gens to a tuple, enforcing the generating-set invariants."""
    g = tuple(int(x) for x in gens)
    if not g:
        raise DomainError("invalidGenerators", "generator list is empty")
    if any(x <= 0 for x in g):
        raise DomainError("invalidGenerators", "generators must be positive")
    if any(y <= x for x, y in zip(g, g[1:])):
        raise DomainError("invalidGenerators", "generators must be strictly increasing")
    if reduce(gcd, g) != 1:
        raise DomainError("invalidGenerators", "generators must have gcd 1")
    return g


def membership_mask(gens, limit: int) -> int:
    """Bitmask with bit v set iff v <= limit is a nonnegative combination.

    Closure under adding one generator is done with doubling shifts, so the
    cost per generator is O(log(limit/g)) big-int operations.
    """
    cap = (1 << (limit + 1)) - 1
    mask = 1
    for g in gens:
        shift = g
        while shift <= limit:
            mask |= (mask << shift) & cap
            shift <<= 1
    return mask


def membership(s: int, gens) -> bool:
    """True iff s is a nonnegative integer combination of the generators."""
    g = validate_generators(gens)
    if s < 0:
        raise DomainError("invalidElement", "semigroup elements are nonnegative")
    return bool(membership_mask(g, s) >> s & 1)


def apery_oracle(gens, c: int) -> list[int]:
    """Least semigroup element in each residue class mod c, indexed by residue.

    Entry 0 is 0.  Raises ``aperyBaseNotInSemigroup`` when c is not a nonzero
    element of the semigroup.
    """
    g = validate_generators(gens)
    if c <= 0 or not (membership_mask(g, c) >> c & 1):
        raise DomainError("aperyBaseNotInSemigroup", f"{c} is not a nonzero semigroup element")
    limit = 4 * max(c, g[-1])
    while True:
        mask = membership_mask(g, limit)
        out = [0] * c
        complete = True
        for res in range(1, c):
            v = res
            while v <= limit and not (mask >> v & 1):
                v += c
            if v > limit:
                complete = False
                break
            out[res] = v
        if complete:
            return out
        limit *= 2


def frobenius_oracle(gens) -> int:
    """Largest integer outside the semigroup; -1 when the semigroup is all of N."""
    g = validate_generators(gens)
    return max(apery_oracle(g, g[0])) - g[0]


def orders_up_to(gens, limit: int) -> list[int]:
    """Orders of 0..limit: the largest k with v a sum of k generators; -1 if none.

    The generators are assumed sorted increasing (validate_generators output).
    """
    orders = [-1] * (limit + 1)
    orders[0] = 0
    for v in range(1, limit + 1):
        best = -1
        for g in gens:
            if g > v:
                break
            prev = orders[v - g]
            if prev >= 0 and prev + 1 > best:
                best = prev + 1
        orders[v] = best
    return orders


def order_oracle(s: int, gens) -> int:
    """Maximum number of generators, with repetition, summing to s."""
    g = validate_generators(gens)
    if s < 0:
        raise DomainError("invalidElement", "semigroup elements are nonnegative")
    o = orders_up_to(g, s)[s]
    if o < 0:
        raise DomainError("notMember", f"{s} is not in the semigroup")
    return o


def pseudo_frobenius_oracle(gens) -> tuple[int, ...]:
    """Gaps x with x + s inside the semigroup for every nonzero element s.

    Computed as the maximal Apery elements under the divisibility-style order
    (w <= w' iff w' - w is a member), shifted down by the multiplicity.
    """
    g = validate_generators(gens)
    a = g[0]
    ap = apery_oracle(g, a)
    mask = membership_mask(g, max(ap) + 1)
    pf = []
    for w in ap:
        dominated = any(x != w and x >= w and (mask >> (x - w) & 1) for x in ap)
        if not dominated:
            pf.append(w - a)
    return tuple(sorted(pf))


def is_minimal_generating(gens) -> bool:
    """True iff no generator is a combination of the others."""
    g = validate_generators(gens)
    if len(g) == 1:
        return True  # necessarily (1,)
    for i, x in enumerate(g):
        others = g[:i] + g[i + 1 :]
        if membership_mask(others, x) >> x & 1:
            return False
    return True


def representation_count(value: int, gens) -> int:
    """Number of distinct coefficient vectors on gens summing to value."""
    if value < 0:
        return 0
    counts = [0] * (value + 1)
    counts[0] = 1
    for g in gens:
        for v in range(g, value + 1):
            counts[v] += counts[v - g]
    return counts[value]


def representations(value: int, gens) -> list[tuple[int, ...]]:
    """All coefficient vectors on gens summing to value, lexicographic order.

    Each coefficient is bounded by value // generator, so the search is a
    complete enumeration.
    """
    gens = tuple(gens)
    out: list[tuple[int, ...]] = []
    coeffs = [0] * len(gens)

    def rec(i: int, remaining: int) -> None:
        if i == len(gens):
            if remaining == 0:
                out.append(tuple(coeffs))
            return
        g = gens[i]
        for k in range(remaining // g + 1):
            coeffs[i] = k
            rec(i + 1, remaining - k * g)
        coeffs[i] = 0

    rec(0, value)
    return out
