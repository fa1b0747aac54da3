"""Defining-ideal generator catalogs and the dimension verification engine.

The defining ideal of the monomial curve (t^s1, ..., t^s5) is generated by
binomials x^u - x^v with equal weighted degree (x_i weighted by s_i).  This
module carries the explicit catalogs for every admissible seed and verifies
them by a dimension count: adjoin x1, pass to the quotient k[x2..x5], run
Buchberger on the surviving monomials/binomials, and count standard
monomials.  The catalog generates the full defining ideal iff that count
equals a, and it is minimal iff every drop-one variant fails the count.

The Buchberger engine handles exactly the closed fragment it needs: monic
monomials and monic binomials, which S-pairs and reduction preserve.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable

from .errors import DomainError
from .family import ArithmeticSeed, partial_sum_generators

Exponents = tuple[int, ...]


class _Infinite:
    """Singleton marker for quotients without finite monomial bases."""

    __slots__ = ()

    def __repr__(self):
        return "INFINITE"


INFINITE = _Infinite()


@dataclass(frozen=True)
class BinomialGenerator:
    """One defining-ideal generator: x^lhs - x^rhs over x1..x5."""

    label: str
    lhs: Exponents
    rhs: Exponents

    def __post_init__(self):
        if len(self.lhs) != 5 or len(self.rhs) != 5:
            raise DomainError("invalidGenerator", f"{self.label}: exponent vectors need 5 entries")
        if self.lhs == self.rhs:
            raise DomainError("invalidGenerator", f"{self.label}: sides are equal")


def weighted_degree(exps: Exponents, gens: Iterable[int]) -> int:
    return sum(e * g for e, g in zip(exps, gens))


def homogeneity_check(binomials: Iterable[BinomialGenerator], seed: ArithmeticSeed) -> bool:
    """True iff every binomial has equal weighted degree on both sides."""
    gens = partial_sum_generators(seed)
    return all(
        weighted_degree(b.lhs, gens) == weighted_degree(b.rhs, gens) for b in binomials
    )


# ----------------------------------------------------------------------
# catalogs
# ----------------------------------------------------------------------

def _e(e1=0, e2=0, e3=0, e4=0, e5=0) -> Exponents:
    return (e1, e2, e3, e4, e5)


# Seed-independent generators; weights balance for every (a, d).
CORE_GENERATORS = {
    "g1": (_e(e4=4), _e(1, 1, 1, 0, 2)),
    "g2": (_e(e3=1, e4=3), _e(3, 1, 0, 0, 2)),
    "g3": (_e(e3=2), _e(2, 0, 0, 1, 0)),
    "g4": (_e(e2=1, e4=2), _e(2, 0, 1, 0, 1)),
    "g5": (_e(e2=1, e3=1, e4=1), _e(4, 0, 0, 0, 1)),
    "g6": (_e(e2=3), _e(3, 0, 1, 0, 0)),
    "g7": (_e(1, 0, 0, 2, 0), _e(0, 2, 0, 0, 1)),
}


def residue_family(q: int, d: int, r: int) -> dict[str, tuple[Exponents, Exponents]]:
    """The residue-dependent generators for a = 10q + r, a >= 19.

    Exponents may come out negative for excluded seeds; generator_catalog
    validates and reports them.
    """
    p = 5 * q + d
    if r == 0:
        return {
            "h01": (_e(p), _e(e5=q)),
            "h02": (_e(p - 1, 2), _e(e4=2, e5=q - 1)),
        }
    if r == 1:
        return {
            "h11": (_e(p - 13, 9), _e(e5=q + 1)),
            "h12": (_e(p - 6, 5), _e(e4=1, e5=q)),
            "h13": (_e(p - 1, 2), _e(e3=1, e5=q)),
            "h14": (_e(p + 2), _e(e2=1, e5=q)),
            "h15": (_e(p + 1, 1), _e(e4=2, e5=q - 1)),
        }
    if r == 2:
        return {
            "h21": (_e(p - 11, 8), _e(e5=q + 1)),
            "h22": (_e(p - 4, 4), _e(e4=1, e5=q)),
            "h23": (_e(p + 1, 1), _e(e3=1, e5=q)),
            "h24": (_e(p + 3), _e(e4=2, e5=q - 1)),
        }
    if r == 3:
        return {
            "h31": (_e(p - 9, 7), _e(e5=q + 1)),
            "h32": (_e(p - 2, 3), _e(e4=1, e5=q)),
            "h33": (_e(p + 3), _e(e3=1, e5=q)),
            "h34": (_e(p - 3, 5), _e(e4=3, e5=q - 1)),
            "h35": (_e(p + 2, 2), _e(e3=1, e4=2, e5=q - 1)),
        }
    if r == 4:
        return {
            "h41": (_e(p - 7, 6), _e(e5=q + 1)),
            "h42": (_e(p, 2), _e(e4=1, e5=q)),
            "h43": (_e(p + 5), _e(e2=1, e3=1, e5=q)),
            "h44": (_e(p - 1, 4), _e(e4=3, e5=q - 1)),
            "h45": (_e(p + 4, 1), _e(e3=1, e4=2, e5=q - 1)),
        }
    if r == 5:
        return {
            "h51": (_e(p - 5, 5), _e(e5=q + 1)),
            "h52": (_e(p + 2, 1), _e(e4=1, e5=q)),
            "h53": (_e(p + 1, 3), _e(e4=3, e5=q - 1)),
            "h54": (_e(p + 6), _e(e3=1, e4=2, e5=q - 1)),
        }
    if r == 6:
        return {
            "h61": (_e(p - 3, 4), _e(e5=q + 1)),
            "h62": (_e(p + 4), _e(e4=1, e5=q)),
            "h63": (_e(p + 3, 2), _e(e4=3, e5=q - 1)),
        }
    if r == 7:
        # h75 pairs with x4^3 x5^(q-1): the x2-power on the x4^3 column
        # descends 3, 2, 1, 0 across residues 5..8, and only the cube
        # balances the weights at residue 7.
        return {
            "h71": (_e(p - 1, 3), _e(e5=q + 1)),
            "h72": (_e(p - 2, 5), _e(e4=2, e5=q)),
            "h73": (_e(p + 3, 2), _e(e3=1, e4=1, e5=q)),
            "h74": (_e(p + 6), _e(e2=1, e4=1, e5=q)),
            "h75": (_e(p + 5, 1), _e(e4=3, e5=q - 1)),
        }
    if r == 8:
        return {
            "h81": (_e(p + 1, 2), _e(e5=q + 1)),
            "h82": (_e(p + 5, 1), _e(e3=1, e4=1, e5=q)),
            "h83": (_e(p, 4), _e(e4=2, e5=q)),
            "h84": (_e(p + 7), _e(e4=3, e5=q - 1)),
        }
    if r == 9:
        return {
            "h91": (_e(p + 3, 1), _e(e5=q + 1)),
            "h92": (_e(p + 7), _e(e3=1, e4=1, e5=q)),
            "h93": (_e(p + 2, 3), _e(e4=2, e5=q)),
        }
    raise DomainError("invalidSeed", f"residue {r} out of range")


def small_a_family(a: int, d: int) -> dict[str, tuple[Exponents, Exponents]]:
    """The seed-specific generators for 11 <= a <= 18."""
    if a == 11:
        return {
            "p11": (_e(d - 1, 5), _e(e4=1, e5=1)),
            "p12": (_e(d + 4, 2), _e(e3=1, e5=1)),
            "p13": (_e(d + 7), _e(e2=1, e5=1)),
            "p14": (_e(d + 6, 1), _e(e4=2)),
        }
    if a == 12:
        return {
            "p21": (_e(d + 1, 4), _e(e4=1, e5=1)),
            "p22": (_e(d + 6, 1), _e(e3=1, e5=1)),
            "p23": (_e(d + 8), _e(e4=2)),
        }
    if a == 13:
        return {
            "p31": (_e(d + 3, 3), _e(e4=1, e5=1)),
            "p32": (_e(d + 8), _e(e3=1, e5=1)),
            "p33": (_e(d + 2, 5), _e(e4=3)),
            "p34": (_e(d + 7, 2), _e(e3=1, e4=2)),
        }
    if a == 14:
        return {
            "p41": (_e(d + 5, 2), _e(e4=1, e5=1)),
            "p42": (_e(d + 10), _e(e2=1, e3=1, e5=1)),
            "p43": (_e(d + 4, 4), _e(e4=3)),
            "p44": (_e(d + 9, 1), _e(e3=1, e4=2)),
        }
    if a == 15:
        return {
            "p51": (_e(d, 5), _e(e5=2)),
            "p52": (_e(d + 7, 1), _e(e4=1, e5=1)),
            "p53": (_e(d + 6, 3), _e(e4=3)),
            "p54": (_e(d + 11), _e(e3=1, e4=2)),
        }
    if a == 16:
        return {
            "p61": (_e(d + 2, 4), _e(e5=2)),
            "p62": (_e(d + 9), _e(e4=1, e5=1)),
            "p63": (_e(d + 8, 2), _e(e4=3)),
        }
    if a == 17:
        return {
            "p71": (_e(d + 4, 3), _e(e5=2)),
            "p72": (_e(d + 3, 5), _e(e4=2, e5=1)),
            "p73": (_e(d + 8, 2), _e(e3=1, e4=1, e5=1)),
            "p74": (_e(d + 11), _e(e2=1, e4=1, e5=1)),
            "p75": (_e(d + 10, 1), _e(e4=3)),
        }
    if a == 18:
        return {
            "p81": (_e(d + 6, 2), _e(e5=2)),
            "p82": (_e(d + 10, 1), _e(e3=1, e4=1, e5=1)),
            "p83": (_e(d + 5, 4), _e(e4=2, e5=1)),
            "p84": (_e(d + 12), _e(e4=3)),
        }
    raise DomainError("invalidSeed", f"small-a family needs 11 <= a <= 18, got {a}")


def _closing_generator(a: int, d: int) -> tuple[Exponents, Exponents] | None:
    """Extra generator in weight 2*s5 for a <= 14; a >= 15 needs none.

    The lhs is a monomial in x1..x4 of the same weighted degree as x5^2,
    chosen so the ideal gains a pure power of x5 once x1 is set to zero.
    For the d with no natural pattern instance, the canonical-expansion
    monomial of the class of 2*s5 is used (a=11 d=1: x1^4 x3 x4; a=14 d=1:
    x1^7 x4).
    """
    if a == 11:
        if d == 1:
            lhs = _e(4, 0, 1, 1)
        elif d <= 4:
            lhs = _e(d - 2, 3, 2)
        elif d <= 7:
            lhs = _e(d - 5, 6, 1)
        else:
            lhs = _e(d - 8, 9)
        return (lhs, _e(e5=2))
    if a == 12:
        if d == 1:
            lhs = _e(1, 2, 2)
        elif d == 5:
            lhs = _e(2, 5, 1)
        else:
            lhs = _e(d - 6, 8)
        return (lhs, _e(e5=2))
    if a == 13:
        lhs = _e(d - 1, 4, 1) if d <= 3 else _e(d - 4, 7)
        return (lhs, _e(e5=2))
    if a == 14:
        lhs = _e(7, 0, 0, 1) if d == 1 else _e(d - 2, 6)
        return (lhs, _e(e5=2))
    return None


_SMALL_A_CORE = {
    11: ("g3", "g5", "g6"),
    12: ("g3", "g5", "g6", "g7"),
    13: ("g3", "g4", "g5", "g6", "g7"),
    14: ("g3", "g4", "g5", "g6", "g7"),
    15: ("g3", "g4", "g5", "g6", "g7"),
    16: ("g3", "g4", "g5", "g6", "g7"),
    17: ("g3", "g4", "g5", "g6", "g7"),
    18: ("g3", "g4", "g5", "g6", "g7"),
}


def generator_catalog(seed: ArithmeticSeed, strict_21: bool = False) -> list[BinomialGenerator]:
    """Minimal generating set of the defining ideal for the seed.

    Dispatch: 11 <= a <= 18 uses the small-a family plus a core subset and,
    for a <= 14, one closing generator; (21, 1) and (21, 2) use a residue-1
    family with its first element replaced; every other a >= 19 uses the full
    core plus the residue family.  strict_21 drops the core generators at
    a == 21, producing the variant that fails the dimension check (kept so
    the verifier can record the adjudication).
    """
    a, d = seed.a, seed.d
    if seed.m != 5:
        raise DomainError("closedFormUnavailable", f"catalogs need m == 5, got m == {seed.m}")
    if a < 11:
        raise DomainError("belowMinimalityThreshold", f"catalogs need a >= 11, got a == {a}")
    q, r = divmod(a, 10)
    items: list[tuple[str, tuple[Exponents, Exponents]]] = []
    if 11 <= a <= 18:
        items += sorted(small_a_family(a, d).items())
        items += [(k, CORE_GENERATORS[k]) for k in _SMALL_A_CORE[a]]
        closing = _closing_generator(a, d)
        if closing is not None:
            items.append(("extra", closing))
    elif (a, d) in ((21, 1), (21, 2)):
        if not strict_21:
            items += [(k, CORE_GENERATORS[k]) for k in sorted(CORE_GENERATORS)]
        fam = residue_family(q, d, 1)
        items += sorted((k, v) for k, v in fam.items() if k != "h11")
        # replacement for h11, whose x1-exponent would go negative here
        items.append(("extra", (_e(d, 6, 1), _e(e5=3))))
    else:
        items += [(k, CORE_GENERATORS[k]) for k in sorted(CORE_GENERATORS)]
        items += sorted(residue_family(q, d, r).items())

    catalog = []
    for label, (lhs, rhs) in items:
        if min(lhs) < 0 or min(rhs) < 0:
            raise DomainError(
                "catalogInvalidForSeed",
                f"{label} has a negative exponent at (a, d) = ({a}, {d})",
            )
        catalog.append(BinomialGenerator(label, lhs, rhs))
    if not homogeneity_check(catalog, seed):
        raise DomainError("catalogInvalidForSeed", f"inhomogeneous catalog at (a, d) = ({a}, {d})")
    return catalog


def catalog_to_json(catalog: list[BinomialGenerator]) -> list[dict]:
    """JSON-ready export: list of {label, lhs: [5 ints], rhs: [5 ints]}."""
    return [{"label": b.label, "lhs": list(b.lhs), "rhs": list(b.rhs)} for b in catalog]


# ----------------------------------------------------------------------
# Buchberger engine on monic monomials / binomials
# ----------------------------------------------------------------------
# A polynomial is ('m', exponents) or ('b', lead, tail) with lead > tail in
# the active order.  Reduction rewrites one monomial at a time, so this form
# is closed under completion.

Poly = tuple


def grevlex_key(e: Exponents):
    return (sum(e), tuple(-x for x in reversed(e)))


def lex_key(e: Exponents):
    return tuple(e)


MONOMIAL_ORDERS: dict[str, Callable] = {"grevlex": grevlex_key, "lex": lex_key}


def monomial(exps: Exponents) -> Poly:
    return ("m", tuple(exps))


def binomial(e1: Exponents, e2: Exponents, key=grevlex_key) -> Poly | None:
    """Monic binomial with the larger side leading; None if the sides cancel."""
    e1, e2 = tuple(e1), tuple(e2)
    if e1 == e2:
        return None
    return ("b", e1, e2) if key(e1) > key(e2) else ("b", e2, e1)


def _divide(a: Exponents, b: Exponents) -> Exponents | None:
    if all(x >= y for x, y in zip(a, b)):
        return tuple(x - y for x, y in zip(a, b))
    return None


def _mul(a: Exponents, b: Exponents) -> Exponents:
    return tuple(x + y for x, y in zip(a, b))


def _lcm(a: Exponents, b: Exponents) -> Exponents:
    return tuple(max(x, y) for x, y in zip(a, b))


def leading_monomial(p: Poly) -> Exponents:
    return p[1]


def _find_reducer(e: Exponents, basis: list[Poly]):
    for q in basis:
        quot = _divide(e, leading_monomial(q))
        if quot is not None:
            return q, quot
    return None


def reduce_poly(p: Poly | None, basis: list[Poly], key=grevlex_key) -> Poly | None:
    """Full normal form of p against basis; None means it reduced to zero."""
    while p is not None:
        if p[0] == "m":
            hit = _find_reducer(p[1], basis)
            if hit is None:
                return p
            q, quot = hit
            if q[0] == "m":
                return None
            p = ("m", _mul(quot, q[2]))
        else:
            _, lead, tail = p
            hit = _find_reducer(lead, basis)
            if hit is not None:
                q, quot = hit
                p = ("m", tail) if q[0] == "m" else binomial(_mul(quot, q[2]), tail, key)
                continue
            hit = _find_reducer(tail, basis)
            if hit is None:
                return p
            q, quot = hit
            p = ("m", lead) if q[0] == "m" else binomial(lead, _mul(quot, q[2]), key)
    return None


def _s_poly(f: Poly, g: Poly, key) -> Poly | None:
    if f[0] == "m" and g[0] == "m":
        return None
    lcm = _lcm(leading_monomial(f), leading_monomial(g))
    if f[0] == "m":
        return ("m", _mul(_divide(lcm, leading_monomial(g)), g[2]))
    if g[0] == "m":
        return ("m", _mul(_divide(lcm, leading_monomial(f)), f[2]))
    return binomial(
        _mul(_divide(lcm, leading_monomial(f)), f[2]),
        _mul(_divide(lcm, leading_monomial(g)), g[2]),
        key,
    )


@dataclass(frozen=True)
class GroebnerBasis:
    elements: tuple[Poly, ...]
    order: str


def buchberger(polys: Iterable[Poly | None], order: str = "grevlex") -> GroebnerBasis:
    """Complete the monomials/binomials to a Groebner basis.

    Pairs with coprime leading monomials are skipped (their S-polynomials
    reduce to zero); everything else is the textbook loop.
    """
    key = MONOMIAL_ORDERS[order]
    basis = [p for p in polys if p is not None]
    pairs = [(i, j) for i in range(len(basis)) for j in range(i)]
    while pairs:
        i, j = pairs.pop()
        f, g = basis[i], basis[j]
        lf, lg = leading_monomial(f), leading_monomial(g)
        if _lcm(lf, lg) == _mul(lf, lg):
            continue
        s = reduce_poly(_s_poly(f, g, key), basis, key)
        if s is not None:
            basis.append(s)
            k = len(basis) - 1
            pairs.extend((k, t) for t in range(k))
    return GroebnerBasis(tuple(basis), order)


def minimalize_monomials(monomials: Iterable[Exponents]) -> list[Exponents]:
    """Antichain of the given monomials under divisibility."""
    out: list[Exponents] = []
    for m in sorted(set(monomials), key=sum):
        if not any(_divide(m, g) is not None for g in out):
            out.append(m)
    return out


def standard_monomials(basis: Iterable[Exponents], nvars: int) -> list[Exponents] | None:
    """Monomials outside the monomial ideal, or None when they are infinite.

    Finitely many iff every variable carries a pure-power generator; the
    survivors then live in the box bounded by those pure powers.
    """
    gens = minimalize_monomials(basis)
    bounds: list[int | None] = [None] * nvars
    for m in gens:
        support = [i for i, e in enumerate(m) if e > 0]
        if len(support) == 1:
            i = support[0]
            if bounds[i] is None or m[i] < bounds[i]:
                bounds[i] = m[i]
    if any(b is None for b in bounds):
        return None
    out: list[Exponents] = []
    exps = [0] * nvars

    def rec(i: int) -> None:
        if i == nvars:
            e = tuple(exps)
            if not any(_divide(e, g) is not None for g in gens):
                out.append(e)
            return
        for v in range(bounds[i]):
            exps[i] = v
            rec(i + 1)
        exps[i] = 0

    rec(0)
    return out


def standard_monomial_count(basis: Iterable[Exponents], nvars: int):
    """Number of monomials outside the monomial ideal, or INFINITE."""
    monomials = standard_monomials(basis, nvars)
    return INFINITE if monomials is None else len(monomials)


# ----------------------------------------------------------------------
# dimension verification
# ----------------------------------------------------------------------

def _quotient_polys(catalog: Iterable[BinomialGenerator], key) -> list[Poly]:
    """Images of the catalog in k[x2..x5] after x1 -> 0.

    A side containing x1 dies; binomials free of x1 survive as binomials.
    """
    polys: list[Poly] = []
    for b in catalog:
        lhs_dies, rhs_dies = b.lhs[0] > 0, b.rhs[0] > 0
        if lhs_dies and rhs_dies:
            continue
        if lhs_dies:
            polys.append(monomial(b.rhs[1:]))
        elif rhs_dies:
            polys.append(monomial(b.lhs[1:]))
        else:
            polys.append(binomial(b.lhs[1:], b.rhs[1:], key))
    return polys


def quotient_basis(catalog: Iterable[BinomialGenerator], order: str = "grevlex") -> list[Exponents] | None:
    """Monomial basis of k[x1..x5] / (catalog + (x1)), in x2..x5 exponents.

    None when the quotient is not finite dimensional.  When the catalog
    generates the full defining ideal, these monomials map bijectively onto
    the Apery set through the weighted degree.
    """
    key = MONOMIAL_ORDERS[order]
    gb = buchberger(_quotient_polys(catalog, key), order)
    return standard_monomials([leading_monomial(p) for p in gb.elements], 4)


def quotient_dimension(catalog: Iterable[BinomialGenerator], order: str = "grevlex"):
    """dim_k of k[x1..x5] / (catalog + (x1)): standard monomial count in x2..x5."""
    basis = quotient_basis(catalog, order)
    return INFINITE if basis is None else len(basis)


@dataclass(frozen=True)
class GastingerReport:
    """Outcome of the dimension check and the drop-one minimality test."""

    dimension: object  # int or INFINITE
    passed: bool
    minimal: bool
    drop_one_dims: dict
    variant: str | None = None  # set at a == 21: which catalog variant passed
    adjudication: dict | None = None


def gastinger_verify(seed: ArithmeticSeed, order: str = "grevlex") -> GastingerReport:
    """Verify the catalog generates the defining ideal, and minimally so.

    The catalog passes iff the quotient dimension equals a; minimality holds
    iff every single-generator removal breaks that count (larger or
    infinite).  At a == 21 both the strict and core-augmented variants are
    computed and the adjudication recorded.
    """
    a = seed.a
    variant = None
    adjudication = None
    if (a, seed.d) in ((21, 1), (21, 2)):
        strict_dim = quotient_dimension(generator_catalog(seed, strict_21=True), order)
        augmented_dim = quotient_dimension(generator_catalog(seed), order)
        strict_ok = strict_dim == a
        augmented_ok = augmented_dim == a
        variant = "strict" if strict_ok and not augmented_ok else "withCore"
        adjudication = {
            "strict": strict_dim,
            "withCore": augmented_dim,
            "selected": variant,
        }
        catalog = generator_catalog(seed, strict_21=(variant == "strict"))
    else:
        catalog = generator_catalog(seed)
    dim = quotient_dimension(catalog, order)
    drop = {}
    for i, b in enumerate(catalog):
        sub = catalog[:i] + catalog[i + 1 :]
        drop[b.label] = quotient_dimension(sub, order)
    minimal = all(v != a for v in drop.values())
    return GastingerReport(dim, dim == a, minimal, drop, variant, adjudication)
