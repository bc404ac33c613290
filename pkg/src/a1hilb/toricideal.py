"""Binomial ideals of relations among Laurent monomials.

A list of Laurent monomials (integer exponent vectors) presents an affine
chart; the relations among them form the lattice ideal of the integer
kernel of the exponent matrix, saturated at the product of the variables.
Saturation follows the classical recipe: adjoin one auxiliary variable
inverting that product and eliminate it with a Groebner basis.  Binomials
are stored as exponent pairs (u_plus, u_minus) over the input index set.
"""

from fractions import Fraction

from . import exactlin
from .grobner import Poly, WeightOrder, buchberger


def relation_lattice(gens):
    """Lattice basis of integer vectors u with sum_i u_i * gens_i = 0."""
    if not gens:
        raise ValueError("need at least one monomial")
    n = len(gens[0])
    A = [[g[i] for g in gens] for i in range(n)]
    return exactlin.integer_kernel_basis(A)


def check_relation(gens, binomial):
    """Does the Laurent identity prod gens^u_plus = prod gens^u_minus hold?"""
    up, um = binomial
    if len(up) != len(gens) or len(um) != len(gens):
        raise IndexError("binomial indexes %d generators, got %d"
                         % (max(len(up), len(um)), len(gens)))
    n = len(gens[0])
    acc = [0] * n
    for c, g in zip(up, gens):
        for i in range(n):
            acc[i] += c * g[i]
    for c, g in zip(um, gens):
        for i in range(n):
            acc[i] -= c * g[i]
    return not any(acc)


def _split(u):
    return (tuple(max(x, 0) for x in u), tuple(-min(x, 0) for x in u))


def canonical_binomial(pair):
    up, um = (tuple(pair[0]), tuple(pair[1]))
    return (up, um) if up >= um else (um, up)


def binomial_poly(pair, k=None):
    up, um = pair
    return Poly({tuple(up): Fraction(1), tuple(um): Fraction(-1)})


def poly_to_binomial(p):
    if len(p.terms) != 2:
        raise ValueError("not a binomial: %r" % p)
    (m1, c1), (m2, c2) = sorted(p.terms.items(), reverse=True)
    if c1 + c2 != 0:
        raise ValueError("binomial coefficients are not opposite: %r" % p)
    return (m1, m2) if c1 > 0 else (m2, m1)


def toric_ideal(gens):
    """Generators of the saturated lattice ideal of relations among gens.

    Binomials x^{u+} - x^{u-} from a kernel basis, saturated by adjoining
    t with t * x_1 ... x_k = 1 and eliminating t (weight (1, 0, ..., 0),
    auxiliary variable first).  The result is re-reduced in the x ring and
    every output passes the exact Laurent identity check.
    """
    lattice = relation_lattice(gens)
    if not lattice:
        return ()
    k = len(gens)
    polys = []
    for u in lattice:
        up, um = _split(u)
        polys.append(Poly({(0,) + up: 1, (0,) + um: -1}))
    polys.append(Poly({(1,) + (1,) * k: 1, (0,) * (k + 1): -1}))
    gb = buchberger(polys, WeightOrder((1,) + (0,) * k))
    eliminated = []
    for p in gb.polys:
        if all(m[0] == 0 for m in p.terms):
            eliminated.append(Poly({m[1:]: c for m, c in p.terms.items()}))
    reduced = buchberger(eliminated, WeightOrder((1,) * k))
    out = []
    for p in reduced.polys:
        pair = canonical_binomial(poly_to_binomial(p))
        assert check_relation(gens, pair)
        out.append(pair)
    return tuple(sorted(out))


def binomials_generate_equal_ideals(pairs_a, pairs_b, k):
    """Ideal equality of two binomial systems in k variables."""
    order = WeightOrder((1,) * k)
    a = [binomial_poly(p) for p in pairs_a]
    b = [binomial_poly(p) for p in pairs_b]
    return buchberger(a, order).polys == buchberger(b, order).polys


def binomial_str(pair, labels):
    def side(u):
        body = "*".join(labels[i] if e == 1 else "%s^%d" % (labels[i], e)
                        for i, e in enumerate(u) if e)
        return body or "1"

    return "%s = %s" % (side(pair[0]), side(pair[1]))


def _unit(k, *positions):
    u = [0] * k
    for p in positions:
        u[p] += 1
    return tuple(u)


def core_expected_relations(n, reading="complementary"):
    """Transcription of the claimed core singularity equations.

    Variables are ordered square coordinates first (positions 0..n-1 for
    Z_i^2) then inverted ratios (positions n..2n-1).  The product chain
    t_1 u_1 = t_j u_j is common to both dimensions; the quadratic family
    is t_i t_j = u_i' u_j' over complementary index pairs for n = 4 (the
    'literal' reading pairs the same indices instead and is expected to
    fail the exponent check), and u_i u_j = t_k t_l t_m for n = 5.
    """
    if n not in (4, 5):
        raise ValueError("core relations are transcribed for n = 4 and 5")
    k = 2 * n
    rels = []
    for j in range(1, n):
        rels.append(canonical_binomial((_unit(k, 0, n), _unit(k, j, n + j))))
    if n == 4:
        for i in range(4):
            for j in range(i + 1, 4):
                if reading == "complementary":
                    a, b = [x for x in range(4) if x not in (i, j)]
                    rels.append(canonical_binomial(
                        (_unit(k, i, j), _unit(k, n + a, n + b))))
                elif reading == "literal":
                    rels.append(canonical_binomial(
                        (_unit(k, i, j), _unit(k, n + i, n + j))))
                else:
                    raise ValueError("unknown reading %r" % reading)
    else:
        if reading != "complementary":
            raise ValueError("only the complementary reading exists for n = 5")
        for i in range(5):
            for j in range(i + 1, 5):
                rest = [x for x in range(5) if x not in (i, j)]
                rels.append(canonical_binomial(
                    (_unit(k, n + i, n + j), _unit(k, *rest))))
    return tuple(sorted(set(rels)))
