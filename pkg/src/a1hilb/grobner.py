"""Exact polynomial arithmetic with weight orders and Buchberger's algorithm.

Monomials are exponent tuples and polynomials map monomials to nonzero
Fraction coefficients.  Orders compare a nonnegative integer weight first
and break ties with a fixed lexicographic order (largest variable first,
optionally reversed), which is a genuine monomial order because the tie
break is one.  The ideals handled here are tiny (at most a dozen
generators in at most 11 variables), so the classical Buchberger loop with
the product and chain criteria is entirely adequate.
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import product as iter_product


def mono_mul(a, b):
    return tuple(x + y for x, y in zip(a, b))


def mono_divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def mono_div(a, b):
    return tuple(x - y for x, y in zip(a, b))


def mono_lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


@dataclass(frozen=True)
class WeightOrder:
    """Weight comparison first, fixed lexicographic tie break second.

    The default tie break ranks earlier variables higher; with
    reverse_tiebreak the variable order is reversed (used to certify that
    interior weights decide initial ideals on their own).
    """

    weights: tuple
    reverse_tiebreak: bool = False

    def __post_init__(self):
        object.__setattr__(self, "weights", tuple(int(w) for w in self.weights))
        if any(w < 0 for w in self.weights):
            raise ValueError("weights must be nonnegative")

    def key(self, mono):
        if len(mono) != len(self.weights):
            raise ValueError("dimension mismatch")
        w = 0
        for a, b in zip(self.weights, mono):
            w += a * b
        return (w, tuple(reversed(mono))) if self.reverse_tiebreak else (w, mono)

    def compare(self, a, b):
        """-1, 0 or 1 as a is below, equal to or above b."""
        ka, kb = self.key(a), self.key(b)
        return (ka > kb) - (ka < kb)


class Poly:
    """Sparse polynomial: exponent tuple -> nonzero Fraction."""

    __slots__ = ("terms",)

    def __init__(self, terms=()):
        data = {}
        items = terms.items() if isinstance(terms, dict) else terms
        for m, c in items:
            m = tuple(m)
            c = data.get(m, Fraction(0)) + Fraction(c)
            if c:
                data[m] = c
            else:
                data.pop(m, None)
        self.terms = data

    def __bool__(self):
        return bool(self.terms)

    def key(self):
        return tuple(sorted(self.terms.items()))

    def __eq__(self, other):
        return isinstance(other, Poly) and self.terms == other.terms

    def __hash__(self):
        return hash(self.key())

    def __add__(self, other):
        out = dict(self.terms)
        for m, c in other.terms.items():
            v = out.get(m, Fraction(0)) + c
            if v:
                out[m] = v
            else:
                out.pop(m, None)
        p = Poly.__new__(Poly)
        p.terms = out
        return p

    def __sub__(self, other):
        out = dict(self.terms)
        for m, c in other.terms.items():
            v = out.get(m, Fraction(0)) - c
            if v:
                out[m] = v
            else:
                out.pop(m, None)
        p = Poly.__new__(Poly)
        p.terms = out
        return p

    def scaled(self, c):
        c = Fraction(c)
        p = Poly.__new__(Poly)
        p.terms = {} if not c else {m: x * c for m, x in self.terms.items()}
        return p

    def shifted(self, c, mono):
        """c * x^mono * self."""
        c = Fraction(c)
        p = Poly.__new__(Poly)
        p.terms = {} if not c else {
            mono_mul(m, mono): x * c for m, x in self.terms.items()}
        return p

    def __repr__(self):
        return f"Poly({poly_str(self)})"


def leading_monomial(p, order):
    return max(p.terms, key=order.key)


def leading_coefficient(p, order):
    return p.terms[leading_monomial(p, order)]


def monic(p, order):
    return p.scaled(Fraction(1) / leading_coefficient(p, order))


def normal_form(p, reducers, order):
    """Remainder of p under full division by the reducers.

    No term of the result is divisible by any reducer's leading term, and
    p minus the result lies in the ideal the reducers generate.
    """
    red = [(leading_monomial(g, order), g) for g in reducers if g]
    work = dict(p.terms)
    rem = {}
    while work:
        m = max(work, key=order.key)
        c = work.pop(m)
        hit = None
        for lt, g in red:
            if mono_divides(lt, m):
                hit = (lt, g)
                break
        if hit is None:
            rem[m] = c
            continue
        lt, g = hit
        shift = mono_div(m, lt)
        f = c / g.terms[lt]
        for gm, gc in g.terms.items():
            if gm == lt:
                continue
            mm = mono_mul(gm, shift)
            v = work.get(mm, Fraction(0)) - f * gc
            if v:
                work[mm] = v
            else:
                work.pop(mm, None)
    return Poly(rem)


def s_polynomial(f, g, order):
    lf, lg = leading_monomial(f, order), leading_monomial(g, order)
    l = mono_lcm(lf, lg)
    return (f.shifted(Fraction(1) / f.terms[lf], mono_div(l, lf))
            - g.shifted(Fraction(1) / g.terms[lg], mono_div(l, lg)))


@dataclass(frozen=True)
class GroebnerBasis:
    polys: tuple
    order: WeightOrder


def buchberger(gens, order):
    """The unique reduced Groebner basis of the ideal the gens generate.

    Classical pair processing ordered by lcm, with the coprime-head and
    chain criteria, followed by minimalization and full tail reduction.
    The zero ideal yields an empty basis.
    """
    G = [monic(g, order) for g in gens if g]
    lt = [leading_monomial(g, order) for g in G]
    pairs = {(i, j) for i in range(len(G)) for j in range(i + 1, len(G))}
    while pairs:
        best = min(pairs, key=lambda ij: (order.key(mono_lcm(lt[ij[0]], lt[ij[1]])),) + ij)
        pairs.discard(best)
        i, j = best
        l = mono_lcm(lt[i], lt[j])
        if l == mono_mul(lt[i], lt[j]):
            continue
        skip = False
        for k in range(len(G)):
            if k in (i, j) or not mono_divides(lt[k], l):
                continue
            if (min(i, k), max(i, k)) not in pairs and (min(j, k), max(j, k)) not in pairs:
                skip = True
                break
        if skip:
            continue
        r = normal_form(s_polynomial(G[i], G[j], order), G, order)
        if r:
            G.append(monic(r, order))
            lt.append(leading_monomial(G[-1], order))
            pairs.update((k, len(G) - 1) for k in range(len(G) - 1))
    # minimal generators: drop heads divisible by another kept head
    idx = sorted(range(len(G)), key=lambda i: order.key(lt[i]))
    kept = []
    for i in idx:
        if not any(mono_divides(lt[j], lt[i]) for j in kept):
            kept.append(i)
    # reduced basis: tails fully reduced against the other members
    polys = [G[i] for i in kept]
    reduced = []
    for i, g in enumerate(polys):
        others = polys[:i] + polys[i + 1:]
        reduced.append(monic(normal_form(g, others, order), order))
    reduced.sort(key=lambda g: order.key(leading_monomial(g, order)))
    return GroebnerBasis(tuple(reduced), order)


def initial_ideal(gb):
    """Leading monomials of a reduced basis; they generate lt of the ideal."""
    return tuple(sorted(leading_monomial(g, gb.order) for g in gb.polys))


def minimal_monomial_generators(monos):
    out = []
    for m in sorted(set(monos), key=lambda m: (sum(m), m)):
        if not any(mono_divides(g, m) for g in out):
            out.append(m)
    return tuple(sorted(out))


def monomial_ideal_equal(gens_a, gens_b):
    a = [tuple(m) for m in gens_a]
    b = [tuple(m) for m in gens_b]
    return (all(any(mono_divides(g, m) for g in b) for m in a)
            and all(any(mono_divides(g, m) for g in a) for m in b))


def staircase(monos):
    """All monomials outside the monomial ideal, canonically sorted.

    Requires a zero-dimensional ideal, i.e. a pure power of every variable
    among the generators; otherwise the staircase is infinite and a
    ValueError is raised.
    """
    gens = minimal_monomial_generators(monos)
    if not gens:
        raise ValueError("zero ideal has an infinite staircase")
    n = len(gens[0])
    bounds = []
    for i in range(n):
        pure = [m[i] for m in gens if all(x == 0 for j, x in enumerate(m) if j != i)]
        if not pure:
            raise ValueError("infinite staircase: no pure power of variable %d" % (i + 1))
        bounds.append(min(pure))
    out = []
    for m in iter_product(*(range(b) for b in bounds)):
        if not any(mono_divides(g, m) for g in gens):
            out.append(m)
    return tuple(sorted(out))


def ideal_equal(gens_a, gens_b, order):
    """Ideal equality, decided by comparing reduced bases."""
    return buchberger(gens_a, order).polys == buchberger(gens_b, order).polys


def default_names(n):
    return tuple("Z%d" % (i + 1) for i in range(n))


def poly_str(p, names=None, order=None):
    """Human form with terms in descending canonical order."""
    if not p:
        return "0"
    n = len(next(iter(p.terms)))
    if names is None:
        names = default_names(n)
    if order is None:
        order = WeightOrder((1,) * n)
    parts = []
    for m in sorted(p.terms, key=order.key, reverse=True):
        c = p.terms[m]
        body = "*".join(
            names[i] if e == 1 else "%s^%d" % (names[i], e)
            for i, e in enumerate(m) if e)
        if not body:
            chunk = str(abs(c))
        elif abs(c) == 1:
            chunk = body
        else:
            chunk = "%s*%s" % (abs(c), body)
        parts.append(("- " if c < 0 else "+ ") + chunk)
    first = parts[0]
    text = ("-" + first[2:]) if first.startswith("- ") else first[2:]
    for part in parts[1:]:
        text += " " + part
    return text


def poly_terms(p, order=None):
    """Serializable (coefficient, exponent) pairs, descending canonical order."""
    if not p:
        return ()
    n = len(next(iter(p.terms)))
    if order is None:
        order = WeightOrder((1,) * n)
    return tuple((str(p.terms[m]), tuple(m))
                 for m in sorted(p.terms, key=order.key, reverse=True))
