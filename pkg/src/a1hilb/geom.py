"""Lattices and simplex decompositions for the sign-diagonal groups.

For the group of diagonal matrices with entries +-1 and determinant one in
dimension n, the lattice of one-parameter subgroups is
N = {x in (Z/2)^n : sum x_i in Z} and its dual
M = {a in Z^n : all a_i congruent mod 2} collects the exponent vectors of
invariant Laurent monomials.  Rational polytope decompositions of the
simplex Delta = {x >= 0, sum x_i = 1} describe torus-equivariant
birational models of the quotient singularity.  This module builds the
standard decompositions, validates them, computes dual-monoid generators
and multiplicities, enumerates the unimodular triangulations of the
central core, and assembles their flop graph.
"""

from collections import Counter
from dataclasses import dataclass, field, replace
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, product as iter_product
from math import gcd, lcm

from . import cones, exactlin

FAN_SCHEMA = "a1hilb/fan/v1"

_HALF = Fraction(1, 2)


@dataclass(frozen=True)
class LatticeContext:
    """Ambient dimension together with the lattice pair it determines."""

    n: int

    def basis(self):
        """Rows generating the one-parameter-subgroup lattice inside Q^n."""
        n = self.n
        rows = [unit_vertex(n, 1)]
        rows.extend(edge_midpoint(n, 1, j) for j in range(2, n + 1))
        return tuple(rows)


def lattice_context(n):
    if not 3 <= int(n) <= 5:
        raise ValueError("supported dimensions are 3, 4 and 5")
    return LatticeContext(int(n))


# ---------------------------------------------------------------------------
# distinguished rational points of Delta

def unit_vertex(n, i):
    return tuple(Fraction(1) if j == i else Fraction(0) for j in range(1, n + 1))


def edge_midpoint(n, i, j):
    if i == j:
        raise ValueError("need two distinct indices")
    return tuple(_HALF if k in (i, j) else Fraction(0) for k in range(1, n + 1))


def simplex_center(n):
    return tuple(Fraction(1, n) for _ in range(n))


def facet_barycenter(n, i):
    """Barycenter of the facet of Delta opposite the i-th vertex."""
    return tuple(Fraction(0) if j == i else Fraction(1, n - 1)
                 for j in range(1, n + 1))


def deep_point(n, i):
    """The interior subdivision point (e^i + sum of all e^a) / (n + 1)."""
    return tuple(Fraction(2 if j == i else 1, n + 1) for j in range(1, n + 1))


# ---------------------------------------------------------------------------
# invariant Laurent monomials (exponent vectors in the dual lattice M)

def square_monomial(n, i):
    """Z_i^2."""
    return tuple(2 if j == i else 0 for j in range(1, n + 1))


def ratio_monomial(n, i):
    """Z_i over the product of the other variables."""
    return tuple(1 if j == i else -1 for j in range(1, n + 1))


def pair_ratio_monomial(n, i, j):
    """Z_i Z_j over the product of the other variables."""
    if i == j:
        raise ValueError("need two distinct indices")
    return tuple(1 if k in (i, j) else -1 for k in range(1, n + 1))


def negate_monomial(m):
    return tuple(-x for x in m)


def in_dual_lattice(m):
    """Membership in M: all exponents congruent mod 2."""
    return len({x % 2 for x in m}) <= 1


def monomial_label(m):
    """Readable Laurent monomial, e.g. 'Z1*Z2/(Z3*Z4)'."""
    num = "*".join("Z%d" % (i + 1) if e == 1 else "Z%d^%d" % (i + 1, e)
                   for i, e in enumerate(m) if e > 0)
    den = "*".join("Z%d" % (i + 1) if e == -1 else "Z%d^%d" % (i + 1, -e)
                   for i, e in enumerate(m) if e < 0)
    if not num and not den:
        return "1"
    if not den:
        return num
    return "%s/(%s)" % (num or "1", den)


# ---------------------------------------------------------------------------
# lattice membership

def lattice_member(ctx, v):
    """Is v in N, i.e. every entry a half integer and the sum an integer?"""
    if len(v) != ctx.n:
        raise ValueError("dimension mismatch")
    vs = [Fraction(x) for x in v]
    return (all((2 * x).denominator == 1 for x in vs)
            and sum(vs).denominator == 1)


def primitive_multiple(ctx, v):
    """Least positive integer m with m*v in N."""
    if len(v) != ctx.n:
        raise ValueError("dimension mismatch")
    vs = [Fraction(x) for x in v]
    if not any(vs):
        raise ValueError("zero vector has no primitive multiple")
    m = 1
    for x in vs:
        m = lcm(m, (2 * x).denominator)
    return lcm(m, sum(vs).denominator)


def primitive_vector(ctx, v):
    """The primitive element of N on the ray through v."""
    m = primitive_multiple(ctx, v)
    return tuple(Fraction(x) * m for x in v)


def integral_points_in_delta(ctx):
    """All points of Delta with half-integer coordinates lying in N."""
    grid = (Fraction(0), _HALF, Fraction(1))
    out = []
    for p in iter_product(grid, repeat=ctx.n):
        if sum(p) == 1 and lattice_member(ctx, p):
            out.append(tuple(p))
    return tuple(sorted(out))


# ---------------------------------------------------------------------------
# cells and decompositions

@dataclass(frozen=True)
class Cell:
    """Convex hull of finitely many rational points of Delta."""

    vertices: tuple


def make_cell(vertices):
    vs = sorted({tuple(Fraction(x) for x in v) for v in vertices})
    for v in vs:
        if any(x < 0 for x in v) or sum(v) != 1:
            raise ValueError("cell vertex outside the simplex: %r" % (v,))
    return Cell(tuple(vs))


@lru_cache(maxsize=None)
def cell_rays(cell):
    """Primitive integer direction vectors of the vertices."""
    return tuple(cones.integer_direction(v) for v in cell.vertices)


@lru_cache(maxsize=None)
def cell_cone_dim(cell):
    return cones.cone_dim(cell_rays(cell))


@lru_cache(maxsize=None)
def cell_facets(cell):
    n = len(cell.vertices[0])
    return tuple(cones.facet_normals(cell_rays(cell), n))


def cell_contains(cell, point):
    return cones.cone_contains(cell_facets(cell), cones.integer_direction(point))


def cell_contains_cell(outer, inner):
    facets = cell_facets(outer)
    return all(cones.cone_contains(facets, r) for r in cell_rays(inner))


def delta_cell(ctx):
    return make_cell([unit_vertex(ctx.n, i) for i in range(1, ctx.n + 1)])


def core_cell(ctx):
    """The central core: convex hull of all edge midpoints of Delta."""
    return make_cell([edge_midpoint(ctx.n, i, j)
                      for i, j in combinations(range(1, ctx.n + 1), 2)])


@dataclass(frozen=True)
class Decomposition:
    """Canonical form: sorted vertices, cells as sorted index tuples."""

    vertices: tuple
    cells: tuple
    name: str = field(default="", compare=False)


def make_decomposition(cells, name=""):
    cs = [c if isinstance(c, Cell) else make_cell(c) for c in cells]
    verts = sorted({v for c in cs for v in c.vertices})
    index = {v: i for i, v in enumerate(verts)}
    idx_cells = sorted({tuple(sorted(index[v] for v in c.vertices)) for c in cs})
    if len(idx_cells) != len(cs):
        raise ValueError("duplicate cells in decomposition")
    return Decomposition(tuple(verts), tuple(idx_cells), name)


def decomposition_cells(d):
    return tuple(Cell(tuple(d.vertices[i] for i in c)) for c in d.cells)


def apply_permutation(d, perm):
    """Permute coordinates: entry i of each vertex moves to slot perm[i]."""
    n = len(perm)
    if sorted(perm) != list(range(1, n + 1)):
        raise ValueError("not a permutation of 1..%d" % n)

    def move(v):
        w = [Fraction(0)] * n
        for i, x in enumerate(v):
            w[perm[i] - 1] = x
        return tuple(w)

    cells = [Cell(tuple(sorted(move(v) for v in c.vertices)))
             for c in decomposition_cells(d)]
    return make_decomposition(cells, name=d.name)


# ---------------------------------------------------------------------------
# multiplicity, volume, canonical data

def _covolume_exponent(n):
    # [N : Z^n] = 2^(n-1), so an N-unimodular simplex has |det| = 2^-(n-1)
    return 2 ** (n - 1)


def cell_multiplicity(ctx, cell):
    """Index in N of the lattice spanned by the primitive generators.

    Returns None for full-dimensional cells that are not simplices; raises
    for degenerate cells.
    """
    n = ctx.n
    if cell_cone_dim(cell) != n:
        raise ValueError("cell is not full-dimensional")
    if len(cell.vertices) != n:
        return None
    d = exactlin.det([list(primitive_vector(ctx, v)) for v in cell.vertices])
    m = abs(d) * _covolume_exponent(n)
    assert m.denominator == 1 and m > 0
    return int(m)


def normalized_volume(ctx, cell):
    """Volume in units where an N-unimodular simplex has volume one.

    Uses vertex determinants (vertices all lie at height one), so volumes
    are additive across a decomposition; non-simplicial cells are
    triangulated first.
    """
    n = ctx.n
    scale = _covolume_exponent(n)
    verts = cell.vertices
    if len(verts) == n:
        return abs(exactlin.det([list(v) for v in verts])) * scale
    total = Fraction(0)
    for simp in cones.triangulate_rays(list(cell_rays(cell))):
        total += abs(exactlin.det([list(verts[i]) for i in simp])) * scale
    return total


def canonical_coefficients(ctx, d):
    """Vertex v of the decomposition mapped to primitive_multiple(v) - 1."""
    return {v: primitive_multiple(ctx, v) - 1 for v in d.vertices}


def is_crepant(ctx, d):
    return all(c == 0 for c in canonical_coefficients(ctx, d).values())


def is_smooth(ctx, d):
    return all(cell_multiplicity(ctx, c) == 1 for c in decomposition_cells(d))


def euler_number(ctx, d):
    """Maximal cell count of a smooth crepant decomposition."""
    if not (is_smooth(ctx, d) and is_crepant(ctx, d)):
        raise ValueError("Euler count needs a smooth crepant decomposition")
    return len(d.cells)


# ---------------------------------------------------------------------------
# validation and refinement

@dataclass(frozen=True)
class ValidationReport:
    ok: bool
    issues: tuple


def validate_decomposition(ctx, d, region=None):
    """Check cells are full-dimensional, tile the region, and meet facially.

    The region defaults to Delta; core triangulations validate against the
    core.  Failures name the offending cells, so a bad pair is visible.
    """
    n = ctx.n
    issues = []
    cells = decomposition_cells(d)
    if region is None:
        region = delta_cell(ctx)
    region_facets = cell_facets(region)
    fulldim = []
    for i, c in enumerate(cells):
        if cell_cone_dim(c) != n:
            issues.append("cell %d is not full-dimensional" % i)
            continue
        if not all(cones.cone_contains(region_facets, r) for r in cell_rays(c)):
            issues.append("cell %d leaves the region" % i)
            continue
        fulldim.append(i)
    if len(fulldim) == len(cells):
        vol = sum(normalized_volume(ctx, c) for c in cells)
        expected = normalized_volume(ctx, region)
        if vol != expected:
            issues.append("cells cover normalized volume %s, region has %s"
                          % (vol, expected))
        for i, j in combinations(fulldim, 2):
            a, b = cells[i], cells[j]
            if not cones.meet_in_common_face(cell_rays(a), cell_facets(a),
                                             cell_rays(b), cell_facets(b), n):
                issues.append("cells %d and %d do not meet in a common face"
                              % (i, j))
    return ValidationReport(not issues, tuple(issues))


def refines(ctx, fine, coarse):
    """Is every maximal cell of fine contained in some maximal cell of coarse?"""
    coarse_facets = [cell_facets(c) for c in decomposition_cells(coarse)]
    for c in decomposition_cells(fine):
        rays = cell_rays(c)
        if not any(all(cones.cone_contains(f, r) for r in rays)
                   for f in coarse_facets):
            return False
    return True


def core_restriction(ctx, d):
    """The cells of d lying inside the central core, as a decomposition."""
    core = core_cell(ctx)
    cells = [c for c in decomposition_cells(d) if cell_contains_cell(core, c)]
    return make_decomposition(cells, name=(d.name + "-core") if d.name else "core")


# ---------------------------------------------------------------------------
# standard decompositions

def _corner_cell(n, j):
    return make_cell([unit_vertex(n, j)]
                     + [edge_midpoint(n, i, j) for i in range(1, n + 1) if i != j])


def star_chart_cells(n):
    """(family, roles, cell) triples of the simplicial refinement by charts.

    n = 4 has families Delta, C, Cp indexed by j; n = 5 has the seven
    families Delta, I, II, III, IV, V, VI.  Role tuples fix the instance:
    ambiguous complement roles are assigned in ascending order, which is
    harmless because the affected families are symmetric in them.
    """
    out = []
    if n == 4:
        c = simplex_center(4)
        for j in range(1, 5):
            rest = [x for x in range(1, 5) if x != j]
            out.append(("Delta", (j,), _corner_cell(4, j)))
            out.append(("C", (j,), make_cell(
                [c] + [edge_midpoint(4, j, x) for x in rest])))
            out.append(("Cp", (j,), make_cell(
                [c] + [edge_midpoint(4, a, b) for a, b in combinations(rest, 2)])))
    elif n == 5:
        idx = range(1, 6)
        for i in idx:
            rest = [x for x in idx if x != i]
            out.append(("Delta", (i,), _corner_cell(5, i)))
            out.append(("I", (i,), make_cell(
                [deep_point(5, i)] + [edge_midpoint(5, i, x) for x in rest])))
        for i in idx:
            for j in idx:
                if j == i:
                    continue
                ks = [x for x in idx if x not in (i, j)]
                out.append(("II", (i, j), make_cell(
                    [deep_point(5, i), facet_barycenter(5, j)]
                    + [edge_midpoint(5, i, k) for k in ks])))
        for j, k in combinations(idx, 2):
            comp = [x for x in idx if x not in (j, k)]
            out.append(("III", (j, k), make_cell(
                [facet_barycenter(5, j), facet_barycenter(5, k)]
                + [edge_midpoint(5, a, b) for a, b in combinations(comp, 2)])))
        for i in idx:
            for j, k in combinations([x for x in idx if x != i], 2):
                l, m = [x for x in idx if x not in (i, j, k)]
                out.append(("IV", (i, j, k), make_cell(
                    [deep_point(5, i), facet_barycenter(5, j),
                     facet_barycenter(5, k),
                     edge_midpoint(5, i, l), edge_midpoint(5, i, m)])))
        for i, m in combinations(idx, 2):
            comp = [x for x in idx if x not in (i, m)]
            out.append(("V", (i, m), make_cell(
                [deep_point(5, i), deep_point(5, m), edge_midpoint(5, i, m)]
                + [facet_barycenter(5, x) for x in comp])))
        out.append(("VI", (), make_cell(
            [deep_point(5, a) for a in idx]
            + [facet_barycenter(5, a) for a in idx])))
    else:
        raise ValueError("chart cells exist for n = 4 and 5 only")
    return tuple(out)


_PENTA_CYCLE = ((1, 2), (2, 3), (3, 4), (4, 5), (1, 5))
_D0_PAIRS = ((1, 2), (2, 3), (3, 4), (1, 3), (1, 5))
_E0_PAIRS = ((3, 5), (2, 3), (2, 5), (4, 5), (1, 5))
_TAU = (2, 3, 4, 5, 1)  # the five-cycle sending i to i + 1


def _tau_pairs(pairs, power):
    out = []
    for a, b in pairs:
        for _ in range(power):
            a, b = _TAU[a - 1], _TAU[b - 1]
        out.append((a, b))
    return out


def _cycle_core_cells():
    """The eleven-simplex unimodular core triangulation in dimension five."""
    cells = [make_cell([edge_midpoint(5, a, b) for a, b in _PENTA_CYCLE])]
    for power in range(5):
        cells.append(make_cell([edge_midpoint(5, a, b)
                                for a, b in _tau_pairs(_D0_PAIRS, power)]))
        cells.append(make_cell([edge_midpoint(5, a, b)
                                for a, b in _tau_pairs(_E0_PAIRS, power)]))
    return cells


def _diagonal_core_cells(j):
    """Split the octahedral core along the diagonal paired with j (n = 4)."""
    k, l = [x for x in (1, 2, 3) if x != j]
    diag = [edge_midpoint(4, j, 4), edge_midpoint(4, k, l)]
    square = [p for p in combinations(range(1, 5), 2)
              if set(p) not in ({j, 4}, {k, l})]
    cells = []
    for p, q in combinations(square, 2):
        if len(set(p) & set(q)) == 1:
            cells.append(make_cell(diag + [edge_midpoint(4, *p),
                                           edge_midpoint(4, *q)]))
    return cells


def standard_decomposition(name, n):
    """The named decomposition of Delta.

    Names (case-insensitive): 'xi', 'xi-star' (n = 4, 5), 'xi-1', 'xi-2',
    'xi-3' (n = 4) and 'xi-prime' (n = 5).
    """
    key = str(name).strip().lower().replace("_", "-")
    ctx = lattice_context(n)
    n = ctx.n
    corners = [_corner_cell(n, j) for j in range(1, n + 1)]
    if key == "xi":
        cells = corners + [core_cell(ctx)]
    elif key == "xi-star" and n in (4, 5):
        cells = [cell for _, _, cell in star_chart_cells(n)]
    elif key in ("xi-1", "xi-2", "xi-3") and n == 4:
        cells = corners + _diagonal_core_cells(int(key[-1]))
    elif key == "xi-prime" and n == 5:
        cells = corners + _cycle_core_cells()
    else:
        raise ValueError("unsupported decomposition %r for n=%d" % (name, n))
    return make_decomposition(cells, name=key)


def standard_names(n):
    if n == 3:
        return ("xi",)
    if n == 4:
        return ("xi", "xi-star", "xi-1", "xi-2", "xi-3")
    return ("xi", "xi-star", "xi-prime")


# ---------------------------------------------------------------------------
# dual monoid generators (Hilbert basis of M meeting the dual cone)

def _to_dual_lattice(g):
    return tuple(g) if in_dual_lattice(g) else tuple(2 * x for x in g)


def dual_monoid_generators(ctx, cell):
    """Minimal generating set of M intersected with the dual cone of the cell.

    The dual cone's extreme rays are the facet normals of the cell's cone,
    scaled into M.  Each simplicial piece of a triangulation of the dual
    cone contributes its half-open parallelepiped points; the union
    generates, and the pairwise subtraction test cuts it down to the
    Hilbert basis, which is unique since the cone is pointed.
    """
    n = ctx.n
    if cell_cone_dim(cell) != n:
        raise ValueError("cell is not full-dimensional")
    prim2 = [tuple(int(2 * x) for x in primitive_vector(ctx, v))
             for v in cell.vertices]
    dual_rays = [_to_dual_lattice(g) for g in cones.facet_normals(prim2, n)]
    covol = _covolume_exponent(n)
    gens = set(dual_rays)
    for simp in cones.triangulate_rays(dual_rays):
        R = [dual_rays[i] for i in simp]
        d = exactlin.det(R)
        index = abs(d) // covol
        assert abs(d) % covol == 0
        if index == 1:
            continue
        gens.update(_parallelepiped_points(R, int(d)))
    gens.discard(tuple([0] * n))
    return tuple(sorted(_minimalize_monoid_generators(gens, prim2)))


def _parallelepiped_points(R, d):
    """Dual-lattice points of {sum l_i R_i : 0 <= l_i < 1}, excluding zero."""
    n = len(R)
    cols = [[R[i][j] for i in range(n)] for j in range(n)]  # columns = rays
    # integer adjugate: lattice coordinates of x are adj(cols) x / det
    adj = [[int(x * d) for x in row] for row in _matrix_inverse(cols)]
    sign = 1 if d > 0 else -1
    B = [[sign * x for x in row] for row in adj]
    D = abs(d)
    lo = [sum(min(0, R[i][j]) for i in range(n)) for j in range(n)]
    hi = [sum(max(0, R[i][j]) for i in range(n)) for j in range(n)]
    out = []
    for parity in (0, 1):
        ranges = [[x for x in range(lo[j], hi[j] + 1) if x % 2 == parity]
                  for j in range(n)]
        for x in iter_product(*ranges):
            if not any(x):
                continue
            ok = True
            for row in B:
                y = sum(a * b for a, b in zip(row, x))
                if y < 0 or y >= D:
                    ok = False
                    break
            if ok:
                out.append(tuple(x))
    return out


def _matrix_inverse(A):
    n = len(A)
    M = [[Fraction(A[i][j]) for j in range(n)]
         + [Fraction(1 if k == i else 0) for k in range(n)] for i in range(n)]
    for c in range(n):
        p = next(i for i in range(c, n) if M[i][c])
        M[c], M[p] = M[p], M[c]
        inv = Fraction(1) / M[c][c]
        M[c] = [x * inv for x in M[c]]
        for i in range(n):
            if i != c and M[i][c]:
                f = M[i][c]
                M[i] = [x - f * y for x, y in zip(M[i], M[c])]
    return [row[n:] for row in M]


def _minimalize_monoid_generators(gens, cone_prim2):
    """Keep the elements that are not sums of two nonzero monoid elements."""
    gens = sorted(gens)

    def in_monoid(x):
        return (in_dual_lattice(x)
                and all(exactlin.dot(x, p) >= 0 for p in cone_prim2))

    out = []
    for s in gens:
        reducible = False
        for t in gens:
            if t == s:
                continue
            diff = tuple(a - b for a, b in zip(s, t))
            if any(diff) and in_monoid(diff):
                reducible = True
                break
        if not reducible:
            out.append(s)
    return out


def core_generators(ctx):
    """Dual-monoid generators of the core in the square-then-ratio order.

    Z_1^2 .. Z_n^2 followed by the inverted single ratios; the set agrees
    with dual_monoid_generators(core)."""
    n = ctx.n
    gens = [square_monomial(n, i) for i in range(1, n + 1)]
    gens += [negate_monomial(ratio_monomial(n, i)) for i in range(1, n + 1)]
    if n >= 4:
        assert sorted(gens) == sorted(dual_monoid_generators(ctx, core_cell(ctx)))
    return tuple(gens)


# ---------------------------------------------------------------------------
# enumeration of unimodular core triangulations

def enumerate_core_triangulations(ctx, dominated_only=False):
    """All face-to-face unimodular triangulations of the core on its vertices.

    Exact-cover search: fix the lexicographically least member as a seed,
    then repeatedly cover the least open interior ridge with every
    compatible candidate simplex above the seed.  With dominated_only,
    candidates are restricted to unions of core cells of the chart
    refinement, which characterizes the triangulations it refines.
    """
    n = ctx.n
    core = core_cell(ctx)
    verts = list(core.vertices)
    rays = [cones.integer_direction(v) for v in verts]
    core_facets = cell_facets(core)
    target = normalized_volume(ctx, core)
    assert target.denominator == 1
    target = int(target)

    cands = []
    for sub in combinations(range(len(verts)), n):
        mat = [list(verts[i]) for i in sub]
        if abs(exactlin.det(mat)) * _covolume_exponent(n) == 1:
            cands.append(sub)

    if dominated_only:
        star_core = decomposition_cells(
            core_restriction(ctx, standard_decomposition("xi-star", n)))
        star_vols = [normalized_volume(ctx, c) for c in star_core]
        kept = []
        for sub in cands:
            facets = cones.facet_normals([rays[i] for i in sub], n)
            covered = sum(v for c, v in zip(star_core, star_vols)
                          if all(cones.cone_contains(facets, r)
                                 for r in cell_rays(c)))
            if covered == 1:
                kept.append(sub)
        cands = kept

    cand_facets = {}

    def facets_of(sub):
        if sub not in cand_facets:
            cand_facets[sub] = cones.facet_normals([rays[i] for i in sub], n)
        return cand_facets[sub]

    compat = {}

    def compatible(a, b):
        key = (a, b) if a < b else (b, a)
        if key not in compat:
            compat[key] = cones.meet_in_common_face(
                [rays[i] for i in a], facets_of(a),
                [rays[i] for i in b], facets_of(b), n)
        return compat[key]

    boundary_cache = {}

    def on_boundary(ridge):
        if ridge not in boundary_cache:
            boundary_cache[ridge] = any(
                all(exactlin.dot(g, rays[i]) == 0 for i in ridge)
                for g in core_facets)
        return boundary_cache[ridge]

    results = []
    for si, seed in enumerate(cands):
        chosen = [seed]
        ridge_count = Counter(combinations(seed, n - 1))

        def dfs():
            open_ridges = [r for r, c in ridge_count.items()
                           if c == 1 and not on_boundary(r)]
            if not open_ridges:
                if len(chosen) == target:
                    results.append(tuple(chosen))
                return
            if len(chosen) >= target:
                return
            ridge = min(open_ridges)
            need = set(ridge)
            for ci in range(si + 1, len(cands)):
                s = cands[ci]
                if s in chosen or not need <= set(s):
                    continue
                if not all(compatible(s, t) for t in chosen):
                    continue
                chosen.append(s)
                ok = True
                for rr in combinations(s, n - 1):
                    ridge_count[rr] += 1
                    if ridge_count[rr] > (1 if on_boundary(rr) else 2):
                        ok = False
                if ok:
                    dfs()
                for rr in combinations(s, n - 1):
                    ridge_count[rr] -= 1
                chosen.pop()

        dfs()

    out = []
    seen = set()
    for subs in results:
        dec = make_decomposition([[verts[i] for i in sub] for sub in subs])
        key = (dec.vertices, dec.cells)
        assert key not in seen, "triangulation enumerated twice"
        seen.add(key)
        out.append(dec)
    out.sort(key=lambda d: (d.vertices, d.cells))
    return tuple(replace(d, name="core-%d" % (i + 1))
                 for i, d in enumerate(out))


# ---------------------------------------------------------------------------
# flop graph

@dataclass(frozen=True)
class FlopGraph:
    num_nodes: int
    edges: tuple
    connected: bool


def _simplex_volume(ctx, verts):
    return abs(exactlin.det([list(v) for v in verts])) * _covolume_exponent(ctx.n)


def _flop_related(ctx, cells_a, cells_b):
    """Do two core triangulations differ by retriangulating one convex piece?

    The differing cells of each side must tile one common convex polytope,
    using only its vertices, and induce the same boundary triangulation;
    everything outside is shared by construction.
    """
    n = ctx.n
    d1 = cells_a - cells_b
    d2 = cells_b - cells_a
    if not d1 or not d2:
        return False
    pts = sorted(set().union(*d1) | set().union(*d2))
    dirs = [cones.integer_direction(p) for p in pts]
    if cones.cone_dim(dirs) != n:
        return False
    facets = cones.facet_normals(dirs, n)
    extreme = []
    for p, r in zip(pts, dirs):
        active = [list(g) for g in facets if exactlin.dot(g, r) == 0]
        if active and exactlin.rank(active) == n - 1:
            extreme.append(p)
    if set(extreme) != set(pts):
        return False
    ext_dirs = [cones.integer_direction(p) for p in extreme]
    hull_vol = Fraction(0)
    for simp in cones.triangulate_rays(ext_dirs):
        hull_vol += _simplex_volume(ctx, [extreme[i] for i in simp])
    vol1 = sum(_simplex_volume(ctx, sorted(c)) for c in d1)
    vol2 = sum(_simplex_volume(ctx, sorted(c)) for c in d2)
    if not vol1 == vol2 == hull_vol:
        return False

    def frontier(cells):
        cnt = Counter()
        for c in cells:
            for f in combinations(sorted(c), n - 1):
                cnt[f] += 1
        return {f for f, k in cnt.items() if k == 1}

    return frontier(d1) == frontier(d2)


def flop_graph(ctx, triangulations, validate=True):
    """Graph on the triangulations with edges where a single flop connects.

    An edge joins two triangulations exactly when their differing cells
    tile a common convex subpolytope on its own vertices and agree along
    its boundary.
    """
    core = core_cell(ctx)
    tris = list(triangulations)
    if validate:
        for t in tris:
            rep = validate_decomposition(ctx, t, region=core)
            if not rep.ok or not is_smooth(ctx, t):
                raise ValueError("invalid triangulation input: %s" % (rep.issues,))
    cell_sets = [frozenset(frozenset(c.vertices)
                           for c in decomposition_cells(t)) for t in tris]
    edges = []
    for i, j in combinations(range(len(tris)), 2):
        if _flop_related(ctx, set(cell_sets[i]), set(cell_sets[j])):
            edges.append((i, j))
    parent = list(range(len(tris)))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for i, j in edges:
        parent[find(i)] = find(j)
    connected = len({find(i) for i in range(len(tris))}) <= 1
    return FlopGraph(len(tris), tuple(edges), connected)


# ---------------------------------------------------------------------------
# fan file serialization

def decomposition_to_dict(ctx, d):
    return {
        "schema": FAN_SCHEMA,
        "name": d.name,
        "n": ctx.n,
        "vertices": [[str(x) for x in v] for v in d.vertices],
        "cells": [list(c) for c in d.cells],
    }


def decomposition_from_dict(obj):
    if obj.get("schema") != FAN_SCHEMA:
        raise ValueError("not a fan file (schema %r)" % obj.get("schema"))
    verts = [tuple(Fraction(x) for x in v) for v in obj["vertices"]]
    cells = [[verts[i] for i in c] for c in obj["cells"]]
    n = int(obj["n"])
    return lattice_context(n), make_decomposition(cells, name=obj.get("name", ""))
