"""Exact polyhedral cone computations in low dimension.

Cones are pointed subcones of the closed positive orthant, described by
finite lists of integer direction vectors ("rays").  Facet enumeration is
brute force over ray subsets, intersections use the double description
method seeded with the orthant, and triangulations are recursive pullings.
Dimensions stay at or below 5 and ray counts at or below about 10, so all
of this is fast and, more importantly, exact.
"""

from fractions import Fraction
from itertools import combinations
from math import gcd

from . import exactlin


def integer_direction(v):
    """Scale a rational vector to the primitive integer vector on its ray."""
    scale = 1
    for x in v:
        d = Fraction(x).denominator
        scale = scale * d // gcd(scale, d)
    w = [int(Fraction(x) * scale) for x in v]
    g = 0
    for x in w:
        g = gcd(g, abs(x))
    if g > 1:
        w = [x // g for x in w]
    return tuple(w)


def cone_dim(rays):
    return exactlin.rank([list(r) for r in rays])


def facet_normals(rays, n):
    """Inward primitive facet normals of a full-dimensional pointed cone.

    Every facet is spanned by at least n-1 of the generating rays, so the
    (n-1)-subsets of rays are enumerated; a subset contributes its integer
    kernel direction when that kernel is one-dimensional and all remaining
    rays sit weakly on one side of it.
    """
    rays = [tuple(r) for r in rays]
    if cone_dim(rays) != n:
        raise ValueError("cone is not full-dimensional")
    normals = set()
    for sub in combinations(range(len(rays)), n - 1):
        mat = [list(rays[i]) for i in sub]
        if exactlin.rank(mat) != n - 1:
            continue
        ker = exactlin.integer_kernel_basis(mat)
        if len(ker) != 1:
            continue
        g = integer_direction(ker[0])
        dots = [exactlin.dot(g, r) for r in rays]
        if all(d >= 0 for d in dots):
            normals.add(g)
        elif all(d <= 0 for d in dots):
            normals.add(tuple(-x for x in g))
    return sorted(normals)


def cone_contains(facets, x):
    """Point membership for a full-dimensional cone given by facet normals."""
    return all(exactlin.dot(g, x) >= 0 for g in facets)


def cone_contains_cone(facets, rays):
    return all(cone_contains(facets, r) for r in rays)


def intersect_in_orthant(halfspaces, n):
    """Extreme rays of the positive orthant cut down by inequality normals.

    Double description: start from the orthant rays and add one halfspace
    at a time.  Zero sets are kept exact so the combinatorial adjacency
    test (no third ray dominates the common zero set) is sound.  All cones
    of interest here live inside the orthant, so this computes arbitrary
    intersections of them from their facet normals.
    """
    ortho = [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)]
    H = ortho + [tuple(h) for h in halfspaces]
    rays = [(ortho[i], frozenset(j for j in range(n) if j != i)) for i in range(n)]
    for idx in range(n, len(H)):
        a = H[idx]
        pos, zero, neg = [], [], []
        for r, z in rays:
            d = exactlin.dot(a, r)
            if d > 0:
                pos.append((r, z, d))
            elif d < 0:
                neg.append((r, z, d))
            else:
                zero.append((r, z | {idx}))
        new = []
        for rp, zp, dp in pos:
            for rn, zn, dn in neg:
                common = zp & zn
                adjacent = True
                for r2, z2, *_ in pos + neg + [(r, z, 0) for r, z in zero]:
                    if r2 is rp or r2 is rn:
                        continue
                    if common <= z2:
                        adjacent = False
                        break
                if not adjacent:
                    continue
                vec = integer_direction(
                    tuple(dp * y - dn * x for x, y in zip(rp, rn)))
                zset = frozenset(
                    j for j in range(idx + 1) if exactlin.dot(H[j], vec) == 0)
                new.append((vec, zset))
        rays = zero + [(r, z) for r, z, _ in pos] + new
    return sorted(r for r, _ in rays)


def is_face(sub_rays, cone_rays, cone_facets):
    """Is the cone spanned by sub_rays a face of the cone (rays, facets)?

    The empty set is the zero face.  Otherwise every sub ray must be an
    extreme ray of the cone, and the sub rays must exhaust the smallest
    face of the cone containing them (cut out by the facets vanishing on
    all of them).
    """
    sub = {integer_direction(r) for r in sub_rays}
    if not sub:
        return True
    big = {integer_direction(r) for r in cone_rays}
    if not sub <= big:
        return False
    active = [g for g in cone_facets
              if all(exactlin.dot(g, r) == 0 for r in sub)]
    face = {r for r in big if all(exactlin.dot(g, r) == 0 for g in active)}
    return face == sub


def meet_in_common_face(rays_a, facets_a, rays_b, facets_b, n):
    """Do two full-dimensional cones intersect in a common face of both?"""
    inter = intersect_in_orthant(list(facets_a) + list(facets_b), n)
    return (is_face(inter, rays_a, facets_a)
            and is_face(inter, rays_b, facets_b))


def _project_to_full_rank(rays):
    """Coordinate positions on which the span projects isomorphically."""
    d = cone_dim(rays)
    n = len(rays[0])
    cols = []
    for c in range(n):
        trial = cols + [c]
        if exactlin.rank([[r[j] for j in trial] for r in rays]) == len(trial):
            cols = trial
        if len(cols) == d:
            break
    return [tuple(r[j] for j in cols) for r in rays], d


def triangulate_rays(rays):
    """Triangulation of a pointed cone, as index tuples into `rays`.

    Pulling triangulation from the first ray: cone the apex over the
    recursively triangulated facets that avoid it.  Works in any ambient
    dimension by first projecting the span to full rank.
    """
    rays = [tuple(r) for r in rays]
    proj, d = _project_to_full_rank(rays)
    if len(rays) == d:
        return [tuple(range(d))]
    out = []
    for g in facet_normals(proj, d):
        if exactlin.dot(g, proj[0]) == 0:
            continue
        fac = [i for i in range(len(rays)) if exactlin.dot(g, proj[i]) == 0]
        for simp in triangulate_rays([rays[i] for i in fac]):
            out.append(tuple(sorted((0,) + tuple(fac[i] for i in simp))))
    return sorted(set(out))
