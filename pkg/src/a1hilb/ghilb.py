"""Chart atlases of the invariant-ideal moduli spaces for n = 4 and 5.

Every full-dimensional cell of the simplicial chart refinement carries an
affine chart whose coordinates are the minimal dual-monoid generators.  A
rational point of a chart determines an explicit ideal; the generators are
expected to be their own reduced Groebner basis under a weight order
interior to the cell's cone, with initial ideal independent of the point
and a monomial staircase that represents every character of the group
exactly once.  This module builds the catalogs, instantiates the ideal
families, and checks those certificates.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import gcd, lcm

from . import cones, exactlin, geom, toricideal
from .grobner import Poly, WeightOrder, buchberger, leading_monomial, monic, \
    monomial_ideal_equal, staircase


@dataclass(frozen=True)
class Chart:
    """A named maximal cell with ordered coordinates and relation templates.

    coords holds the Laurent exponent vectors of the dual-monoid
    generators in table order; relations is empty for simplicial charts
    and the transcription of the quadric/cubic chart equations otherwise.
    """

    name: str
    family: str
    roles: tuple
    cell: geom.Cell
    coords: tuple
    relations: tuple = ()


def _comp(n, used):
    return [x for x in range(1, n + 1) if x not in used]


def _pair_positions(chart):
    """Map a pair {a, b} to the position of its (possibly inverted) ratio."""
    out = {}
    for pos, m in enumerate(chart.coords):
        plus = [i + 1 for i, e in enumerate(m) if e > 0]
        minus = [i + 1 for i, e in enumerate(m) if e < 0]
        if len(plus) == 2 and len(minus) == len(m) - 2:
            out[frozenset(plus)] = pos          # V_ab
        elif len(minus) == 2 and len(plus) == len(m) - 2:
            out[frozenset(minus)] = pos         # V_ab^-1
    return out


def pair_chart_expected_relations(chart):
    """The three quadric relations of a two-deep-vertex chart (family V)."""
    i, m = chart.roles
    j, k, l = _comp(5, (i, m))
    pos = _pair_positions(chart)
    kk = len(chart.coords)

    def unit(*pairs):
        u = [0] * kk
        for p in pairs:
            u[pos[frozenset(p)]] += 1
        return tuple(u)

    rels = [
        (unit((i, j), (k, m)), unit((i, k), (j, m))),
        (unit((i, k), (l, m)), unit((i, l), (k, m))),
        (unit((i, l), (j, m)), unit((i, j), (l, m))),
    ]
    return tuple(sorted(toricideal.canonical_binomial(r) for r in rels))


def full_chart_expected_relations(chart):
    """The quadric and cubic relations of the ten-coordinate chart (VI)."""
    pos = _pair_positions(chart)
    kk = len(chart.coords)

    def unit(*pairs):
        u = [0] * kk
        for p in pairs:
            u[pos[frozenset(p)]] += 1
        return tuple(u)

    rels = set()
    for m in range(1, 6):
        a, b, c, d = _comp(5, (m,))
        pairings = [((a, b), (c, d)), ((a, c), (b, d)), ((a, d), (b, c))]
        for x, y in combinations(pairings, 2):
            rels.add(toricideal.canonical_binomial((unit(*x), unit(*y))))
    for i in range(1, 6):
        rest = _comp(5, (i,))
        for j, l in combinations(rest, 2):
            k, m = [x for x in rest if x not in (j, l)]
            lhs = unit((i, j), (i, l), (k, m))
            rhs = unit((i, k), (i, m), (j, l))
            rels.add(toricideal.canonical_binomial((lhs, rhs)))
    return tuple(sorted(rels))


def _chart_coords(n, family, roles):
    sq = geom.square_monomial
    rat = geom.ratio_monomial
    pr = geom.pair_ratio_monomial
    neg = geom.negate_monomial
    if n == 4:
        (j,) = roles
        k, l, m = _comp(4, (j,))
        if family == "Delta":
            return (rat(4, j), sq(4, k), sq(4, l), sq(4, m))
        if family == "C":
            return (neg(rat(4, j)), pr(4, j, k), pr(4, j, l), pr(4, j, m))
        if family == "Cp":
            return (sq(4, j), pr(4, l, m), pr(4, k, m), pr(4, k, l))
    else:
        if family == "Delta":
            (i,) = roles
            return (rat(5, i),) + tuple(sq(5, x) for x in _comp(5, (i,)))
        if family == "I":
            (i,) = roles
            return (neg(rat(5, i)),) + tuple(pr(5, i, x) for x in _comp(5, (i,)))
        if family == "II":
            i, j = roles
            return (neg(pr(5, i, j)), sq(5, j)) + tuple(
                pr(5, i, x) for x in _comp(5, (i, j)))
        if family == "III":
            j, k = roles
            i, l, m = _comp(5, (j, k))
            return (pr(5, i, m), pr(5, i, l), pr(5, l, m), sq(5, k), sq(5, j))
        if family == "IV":
            i, j, k = roles
            l, m = _comp(5, (i, j, k))
            return (pr(5, i, l), pr(5, i, m), neg(pr(5, i, j)),
                    neg(pr(5, i, k)), neg(pr(5, l, m)))
        if family == "V":
            i, m = roles
            j, k, l = _comp(5, (i, m))
            return (pr(5, i, m), neg(pr(5, i, l)), neg(pr(5, l, m)),
                    neg(pr(5, i, k)), neg(pr(5, i, j)), neg(pr(5, j, m)),
                    neg(pr(5, k, m)))
        if family == "VI":
            return tuple(neg(pr(5, a, b))
                         for a, b in combinations(range(1, 6), 2))
    raise ValueError("unknown chart family %r" % family)


def _chart_name(family, roles):
    if family == "VI":
        return "VI"
    if family == "IV":
        return "IV_%d_%d%d" % roles
    return family + "_" + "".join(str(r) for r in roles)


@lru_cache(maxsize=None)
def chart_catalog(n):
    """All charts for n = 4 (12 charts) or n = 5 (81 charts in 7 families).

    Coordinates are checked against the computed dual-monoid generators of
    each cell; a mismatch is a build error, never skipped.
    """
    if n not in (4, 5):
        raise ValueError("chart catalogs exist for n = 4 and 5 only")
    ctx = geom.lattice_context(n)
    charts = []
    for family, roles, cell in geom.star_chart_cells(n):
        coords = _chart_coords(n, family, roles)
        computed = geom.dual_monoid_generators(ctx, cell)
        if sorted(coords) != sorted(computed):
            raise AssertionError(
                "chart %s coordinates disagree with the dual monoid"
                % _chart_name(family, roles))
        chart = Chart(_chart_name(family, roles), family, roles, cell,
                      coords)
        if family == "V":
            chart = Chart(chart.name, family, roles, cell, coords,
                          pair_chart_expected_relations(chart))
        elif family == "VI":
            chart = Chart(chart.name, family, roles, cell, coords,
                          full_chart_expected_relations(chart))
        charts.append(chart)
    return tuple(sorted(charts, key=lambda c: c.name))


def chart_by_name(n, name):
    for c in chart_catalog(n):
        if c.name == name:
            return c
    raise KeyError("no chart named %r for n=%d" % (name, n))


def coordinate_labels(chart):
    return tuple(geom.monomial_label(m) for m in chart.coords)


# ---------------------------------------------------------------------------
# ideal families

def _e(n, *idx):
    v = [0] * n
    for i in idx:
        v[i - 1] += 1
    return tuple(v)


def _sq_poly(n, a, t):
    return Poly({_e(n, a, a): 1, _e(n): -t})


def _f_poly(n, a, b, g):
    rest = _comp(n, (a, b))
    return Poly({_e(n, a, b): 1, _e(n, *rest): -g})


def _h_poly(n, a, b, g):
    rest = _comp(n, (a, b))
    return Poly({_e(n, *rest): 1, _e(n, a, b): -g})


def valid_chart_point(chart, values):
    """Do the values satisfy the chart's relation templates exactly?"""
    if len(values) != len(chart.coords):
        return False
    vals = [Fraction(v) for v in values]
    for up, um in chart.relations:
        lhs = Fraction(1)
        rhs = Fraction(1)
        for v, e in zip(vals, up):
            lhs *= v ** e
        for v, e in zip(vals, um):
            rhs *= v ** e
        if lhs != rhs:
            return False
    return True


def _consistent(name, *values):
    first = values[0]
    if any(v != first for v in values[1:]):
        raise ValueError("inconsistent derived parameter %s: %s"
                         % (name, ", ".join(str(v) for v in values)))
    return first


def ideal_at(chart, values):
    """Generators of the chart's ideal at a point, in table order.

    Derived square parameters come from the tabulated products of the
    coordinates; when two products are tabulated for the same parameter
    they must agree, which is exactly the chart relation at that point.
    """
    if len(values) != len(chart.coords):
        raise ValueError("expected %d coordinates" % len(chart.coords))
    vals = tuple(Fraction(v) for v in values)
    if chart.relations and not valid_chart_point(chart, vals):
        raise ValueError("point violates the chart relations")
    fam, roles = chart.family, chart.roles
    if fam in ("Delta", "C", "Cp") and len(chart.coords) == 4:
        return _ideal_at_4(fam, roles, vals)
    return _ideal_at_5(fam, roles, vals)


def _ideal_at_4(fam, roles, vals):
    n = 4
    (j,) = roles
    k, l, m = _comp(4, (j,))
    if fam == "Delta":
        uj, tk, tl, tm = vals
        lin = Poly({_e(4, j): 1, _e(4, k, l, m): -uj})
        return (lin, _sq_poly(4, k, tk), _sq_poly(4, l, tl), _sq_poly(4, m, tm))
    if fam == "C":
        ubar, vjk, vjl, vjm = vals
        tj = ubar * vjk * vjl * vjm
        tk, tl, tm = ubar * vjk, ubar * vjl, ubar * vjm
        cubic = Poly({_e(4, k, l, m): 1, _e(4, j): -ubar})
        return (cubic,
                Poly({_e(4, j, k): 1, _e(4, l, m): -vjk}),
                Poly({_e(4, j, l): 1, _e(4, k, m): -vjl}),
                Poly({_e(4, j, m): 1, _e(4, k, l): -vjm}),
                _sq_poly(4, j, tj), _sq_poly(4, k, tk),
                _sq_poly(4, l, tl), _sq_poly(4, m, tm))
    tj, vlm, vkm, vkl = vals
    tk = tj * vkm * vkl
    tl = tj * vlm * vkl
    tm = tj * vkm * vlm
    return (Poly({_e(4, l, m): 1, _e(4, j, k): -vlm}),
            Poly({_e(4, k, m): 1, _e(4, j, l): -vkm}),
            Poly({_e(4, k, l): 1, _e(4, j, m): -vkl}),
            _sq_poly(4, j, tj), _sq_poly(4, k, tk),
            _sq_poly(4, l, tl), _sq_poly(4, m, tm))


def _ideal_at_5(fam, roles, vals):
    n = 5
    if fam == "Delta":
        (i,) = roles
        j, k, l, m = _comp(5, (i,))
        gi, tj, tk, tl, tm = vals
        lin = Poly({_e(5, i): 1, _e(5, j, k, l, m): -gi})
        return (_sq_poly(5, j, tj), _sq_poly(5, k, tk), _sq_poly(5, l, tl),
                _sq_poly(5, m, tm), lin)
    if fam == "I":
        (i,) = roles
        j, k, l, m = _comp(5, (i,))
        g_rest, gij, gik, gil, gim = vals
        t = {j: gij * g_rest, k: gik * g_rest, l: gil * g_rest,
             m: gim * g_rest, i: gij * gik * gil * gim * g_rest ** 2}
        quartic = Poly({_e(5, j, k, l, m): 1, _e(5, i): -g_rest})
        return tuple(_sq_poly(5, a, t[a]) for a in range(1, 6)) + (
            _f_poly(5, i, j, gij), _f_poly(5, i, k, gik),
            _f_poly(5, i, l, gil), _f_poly(5, i, m, gim), quartic)
    if fam == "II":
        i, j = roles
        k, l, m = _comp(5, (i, j))
        g_klm, tj, gik, gil, gim = vals
        t = {j: tj, k: gik * g_klm * tj, l: gil * g_klm * tj,
             m: gim * g_klm * tj, i: gik * gil * gim * tj ** 2 * g_klm}
        return tuple(_sq_poly(5, a, t[a]) for a in range(1, 6)) + (
            _f_poly(5, i, k, gik), _f_poly(5, i, l, gil),
            _f_poly(5, i, m, gim), _h_poly(5, i, j, g_klm))
    if fam == "III":
        j, k = roles
        i, l, m = _comp(5, (j, k))
        gim, gil, glm, tk, tj = vals
        t = {j: tj, k: tk, i: gim * gil * tk * tj,
             l: gil * glm * tk * tj, m: gim * glm * tk * tj}
        return tuple(_sq_poly(5, a, t[a]) for a in range(1, 6)) + (
            _f_poly(5, i, m, gim), _f_poly(5, i, l, gil),
            _f_poly(5, l, m, glm))
    if fam == "IV":
        i, j, k = roles
        l, m = _comp(5, (i, j, k))
        gil, gim, g_klm, g_jlm, g_ijk = vals
        t = {m: gim * g_jlm * g_klm * g_ijk,
             l: gil * g_jlm * g_klm * g_ijk,
             i: gim * gil * g_jlm * g_klm * g_ijk ** 2,
             j: g_jlm * g_ijk, k: g_klm * g_ijk}
        return tuple(_sq_poly(5, a, t[a]) for a in range(1, 6)) + (
            _f_poly(5, i, m, gim), _f_poly(5, i, l, gil),
            _h_poly(5, i, j, g_klm), _h_poly(5, i, k, g_jlm),
            _h_poly(5, l, m, g_ijk))
    if fam == "V":
        i, m = roles
        j, k, l = _comp(5, (i, m))
        g_im, g_jkm, g_ijk, g_jlm, g_klm, g_ikl, g_ijl = vals
        t = {
            i: _consistent("t_%d" % i, g_im * g_ikl * g_jlm * g_ijk,
                           g_im * g_ikl * g_jkm * g_ijl),
            m: _consistent("t_%d" % m, g_im * g_klm * g_jlm * g_ijk,
                           g_im * g_klm * g_jkm * g_ijl),
            l: _consistent("t_%d" % l, g_ikl * g_jlm, g_ijl * g_klm),
            j: _consistent("t_%d" % j, g_ijk * g_jlm, g_ijl * g_jkm),
            k: _consistent("t_%d" % k, g_ijk * g_klm, g_ikl * g_jkm),
        }
        return tuple(_sq_poly(5, a, t[a]) for a in range(1, 6)) + (
            _f_poly(5, i, m, g_im), _h_poly(5, i, l, g_jkm),
            _h_poly(5, i, k, g_jlm), _h_poly(5, i, j, g_klm),
            _h_poly(5, j, m, g_ikl), _h_poly(5, l, m, g_ijk),
            _h_poly(5, k, m, g_ijl))
    if fam == "VI":
        pairs = list(combinations(range(1, 6), 2))
        val_of = {frozenset(p): v for p, v in zip(pairs, vals)}
        t = {}
        for i in range(1, 6):
            rest = _comp(5, (i,))
            exprs = []
            for j, l in combinations(rest, 2):
                k, m = [x for x in rest if x not in (j, l)]
                exprs.append(val_of[frozenset((k, m))]
                             * val_of[frozenset((j, l))])
            t[i] = _consistent("t_%d" % i, *exprs)
        return tuple(_sq_poly(5, a, t[a]) for a in range(1, 6)) + tuple(
            _h_poly(5, a, b, val_of[frozenset((a, b))]) for a, b in pairs)
    raise ValueError("unknown chart family %r" % fam)


# ---------------------------------------------------------------------------
# weights, staircases, regularity

def interior_weight(ctx, cell):
    """Integer weight interior to the cell's cone: sum of vertex primitives."""
    n = ctx.n
    total = [Fraction(0)] * n
    for v in cell.vertices:
        for i, x in enumerate(geom.primitive_vector(ctx, v)):
            total[i] += x
    scale = 1
    for x in total:
        scale = lcm(scale, x.denominator)
    w = [int(x * scale) for x in total]
    g = 0
    for x in w:
        g = gcd(g, x)
    w = tuple(x // g for x in w)
    assert all(x > 0 for x in w)
    return w


def chart_order(ctx, chart, reverse_tiebreak=False):
    return WeightOrder(interior_weight(ctx, chart.cell), reverse_tiebreak)


def chart_initial_monomials(chart):
    """The monomial ideal at the all-zeros point (every template's head)."""
    zeros = (Fraction(0),) * len(chart.coords)
    monos = []
    for p in ideal_at(chart, zeros):
        (mono, coeff), = p.terms.items()
        assert coeff == 1
        monos.append(mono)
    return tuple(sorted(monos))


def _subsets_as_monomials(n, subsets):
    return frozenset(_e(n, *s) for s in subsets)


def golden_staircase(chart):
    """The tabulated staircase of the chart family, as exponent tuples.

    Transcribed from the family tables by index pattern; the family V row
    is symmetrized (its published form breaks the manifest symmetry in the
    complement indices by one entry).
    """
    fam, roles = chart.family, chart.roles
    if len(chart.coords[0]) == 4:
        n = 4
        (j,) = roles
        comp = _comp(4, (j,))
        if fam == "Delta":
            subsets = [s for r in range(4) for s in combinations(comp, r)]
        elif fam == "C":
            subsets = [(), *((x,) for x in range(1, 5)),
                       *combinations(comp, 2)]
        else:
            subsets = [(), *((x,) for x in range(1, 5)),
                       *(((j, x)) for x in comp)]
        return _subsets_as_monomials(4, subsets)
    n = 5
    singles = [(x,) for x in range(1, 6)]
    if fam == "Delta":
        (i,) = roles
        comp = _comp(5, (i,))
        subsets = [s for r in range(5) for s in combinations(comp, r)]
    elif fam == "I":
        (i,) = roles
        comp = _comp(5, (i,))
        subsets = [(), *singles, *combinations(comp, 2), *combinations(comp, 3)]
    elif fam == "II":
        i, j = roles
        rest = _comp(5, (i,))
        klm = _comp(5, (i, j))
        subsets = ([(), (i, j), *singles] + list(combinations(rest, 2))
                   + [t for t in combinations(rest, 3) if t != tuple(klm)])
    elif fam == "III":
        j, k = roles
        comp = _comp(5, (j, k))
        subsets = [(), *singles]
        subsets += [p for p in combinations(range(1, 6), 2)
                    if not set(p) <= set(comp)]
        subsets += [tuple(sorted((x, j, k))) for x in comp]
    elif fam == "IV":
        i, j, k = roles
        l, m = _comp(5, (i, j, k))
        subsets = [(), *singles]
        subsets += [p for p in combinations(range(1, 6), 2)
                    if set(p) not in ({i, l}, {i, m})]
        subsets += [tuple(sorted((j, k, l))), tuple(sorted((j, k, m)))]
    elif fam == "V":
        i, m = roles
        comp = _comp(5, (i, m))
        subsets = [(), *singles]
        subsets += [p for p in combinations(range(1, 6), 2)
                    if set(p) != {i, m}]
        subsets += [tuple(comp)]
    else:
        subsets = [(), *singles, *combinations(range(1, 6), 2)]
    return _subsets_as_monomials(5, subsets)


def g_regular(monos, n):
    """Do the monomials represent every group character exactly once?

    Characters are exponent parities modulo the all-ones vector; the
    count must be 2^(n-1) with no repeats.
    """
    monos = list(monos)
    if len(monos) != 2 ** (n - 1):
        return False
    reps = set()
    for m in monos:
        p = tuple(e % 2 for e in m)
        q = tuple(1 - e for e in p)
        reps.add(min(p, q))
    return len(reps) == len(monos)


# ---------------------------------------------------------------------------
# verification

@dataclass(frozen=True)
class PointCheck:
    values: tuple
    reduced_gb_ok: bool
    initial_ok: bool
    staircase_ok: bool
    g_regular_ok: bool

    @property
    def ok(self):
        return (self.reduced_gb_ok and self.initial_ok
                and self.staircase_ok and self.g_regular_ok)


@dataclass(frozen=True)
class ChartReport:
    name: str
    staircase: tuple
    checks: tuple

    @property
    def ok(self):
        return all(c.ok for c in self.checks)


def check_point(ctx, chart, values, generators=None):
    """The four certificate checks at one point of one chart.

    (a) the instantiated generators are their own reduced Groebner basis
    under the interior weight order, (b) their initial ideal is the
    all-zeros monomial ideal, (c) its staircase matches the family table,
    (d) the staircase is group-regular.  A generator override supports
    negative controls.
    """
    order = chart_order(ctx, chart)
    gens = ideal_at(chart, values) if generators is None else tuple(generators)
    gb = buchberger(gens, order)
    gen_keys = {monic(g, order).key() for g in gens if g}
    reduced_gb_ok = {p.key() for p in gb.polys} == gen_keys
    init = tuple(sorted(leading_monomial(g, order) for g in gb.polys))
    expected_init = chart_initial_monomials(chart)
    initial_ok = monomial_ideal_equal(init, expected_init)
    stairs = staircase(init)
    staircase_ok = frozenset(stairs) == golden_staircase(chart)
    return PointCheck(tuple(values), reduced_gb_ok, initial_ok, staircase_ok,
                      g_regular(stairs, ctx.n))


def verify_chart(ctx, chart, points):
    """Run the four certificate checks at every point; failures are entries."""
    checks = tuple(check_point(ctx, chart, values) for values in points)
    return ChartReport(chart.name, tuple(sorted(golden_staircase(chart))),
                       checks)


def separation_check(ctx, chart, p, q):
    """Reduced bases must coincide exactly when the points coincide."""
    order = chart_order(ctx, chart)
    gp = buchberger(ideal_at(chart, p), order)
    gq = buchberger(ideal_at(chart, q), order)
    same_point = tuple(Fraction(x) for x in p) == tuple(Fraction(x) for x in q)
    return (gp.polys == gq.polys) == same_point


# ---------------------------------------------------------------------------
# transitions between charts

def charts_adjacent(ctx, a, b):
    common = sorted(set(a.cell.vertices) & set(b.cell.vertices))
    if len(common) < ctx.n - 1:
        return False
    return cones.cone_dim([cones.integer_direction(v) for v in common]) == ctx.n - 1


def transition(ctx, chart_a, chart_b):
    """Each coordinate of chart_a as a Laurent monomial in chart_b's.

    Row r of the result is the integer exponent vector expressing
    chart_a.coords[r] over chart_b.coords; exact on the torus where both
    charts overlap.  Requires the cells to share a facet.
    """
    if chart_a.coords == chart_b.coords:
        k = len(chart_a.coords)
        return tuple(tuple(1 if i == j else 0 for j in range(k))
                     for i in range(k))
    if not charts_adjacent(ctx, chart_a, chart_b):
        raise ValueError("charts %s and %s are not adjacent"
                         % (chart_a.name, chart_b.name))
    cols = [[m[i] for m in chart_b.coords] for i in range(ctx.n)]
    rows = []
    for m in chart_a.coords:
        sol = exactlin.solve_integer(cols, list(m))
        if sol is None:
            raise ValueError(
                "coordinate %s of %s is not a Laurent monomial in %s"
                % (geom.monomial_label(m), chart_a.name, chart_b.name))
        rows.append(sol)
    return tuple(rows)


def compose_transitions(t_ab, t_bc):
    """Matrix composition of monomial coordinate maps."""
    return tuple(tuple(sum(r[j] * t_bc[j][c] for j in range(len(t_bc)))
                       for c in range(len(t_bc[0]))) for r in t_ab)


# ---------------------------------------------------------------------------
# sampling support

def free_coordinate_split(chart):
    """A transcendence basis among the coordinates, plus monomial formulas.

    Returns (free_positions, {dependent_position: exponents over the free
    coordinates}).  Simplicial charts are entirely free.  For the others
    the chosen free subset spans the full exponent lattice, so every
    dependent coordinate is an integer Laurent monomial in the free ones
    and any nonzero rational values of the free coordinates extend to a
    point satisfying the chart relations exactly.
    """
    coords = chart.coords
    k = len(coords)
    n = len(coords[0])
    r = exactlin.rank([list(c) for c in coords])
    if r == k:
        return tuple(range(k)), {}
    for free in combinations(range(k), r):
        mat = [[coords[f][i] for f in free] for i in range(n)]
        if exactlin.rank(mat) != r:
            continue
        deps = {}
        for d in range(k):
            if d in free:
                continue
            sol = exactlin.solve_integer(mat, list(coords[d]))
            if sol is None:
                break
            deps[d] = sol
        else:
            return free, deps
    raise ValueError("no monomial transcendence basis among the coordinates")


def extend_free_values(chart, free, deps, free_values):
    """Point of the chart from nonzero values of the free coordinates."""
    values = [Fraction(0)] * len(chart.coords)
    fv = {f: Fraction(v) for f, v in zip(free, free_values)}
    for f in free:
        values[f] = fv[f]
    for d, expo in deps.items():
        acc = Fraction(1)
        for f, e in zip(free, expo):
            acc *= fv[f] ** e
        values[d] = acc
    return tuple(values)
