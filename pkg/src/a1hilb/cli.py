"""Command-line verifier, enumerator and exporter for the chart atlases.

Subcommands: verify (full certificate run over a chart catalog), enumerate
(unimodular core triangulations and their flop graph), fan (export a named
decomposition), chart (dump one chart's ideal data at a point).  Output
files are schema-tagged JSON with sorted keys, so identical configurations
produce byte-identical artifacts.  Exit codes: 0 pass, 1 verification
failure, 2 usage error.
"""

import argparse
import json
import random
import sys
from dataclasses import dataclass
from fractions import Fraction

from . import geom, ghilb, toricideal
from .grobner import buchberger, leading_monomial, poly_str, staircase

REPORT_SCHEMA = "a1hilb/report/v1"
ENUM_SCHEMA = "a1hilb/enumerate/v1"
CHART_SCHEMA = "a1hilb/chart/v1"


@dataclass(frozen=True)
class RunConfig:
    command: str
    n: int
    seed: int = 42
    samples: int = 5
    out: str = ""
    filter: str = "all"
    name: str = ""
    chart: str = ""
    point: str = ""


# ---------------------------------------------------------------------------
# deterministic sampling

def random_rational(rng):
    """Signed random rational with numerator and denominator at most 97."""
    return Fraction(rng.randint(1, 97) * rng.choice((1, -1)),
                    rng.randint(1, 97))


def sample_chart_points(chart, rng, generic=5, degenerate=3):
    """All-zeros point, generic points, and degenerate (partly zero) points.

    Non-simplicial charts are sampled through a transcendence basis of the
    coordinates, so the chart relations hold exactly; degenerate points
    zero a random coordinate subset and are kept only when still valid.
    """
    k = len(chart.coords)
    zeros = (Fraction(0),) * k
    points = [zeros]
    free, deps = ghilb.free_coordinate_split(chart)
    generic_points = []
    for _ in range(generic):
        fv = [random_rational(rng) for _ in free]
        generic_points.append(ghilb.extend_free_values(chart, free, deps, fv))
    points.extend(generic_points)
    made = 0
    attempts = 0
    while made < degenerate and attempts < 50 * degenerate:
        attempts += 1
        base = list(generic_points[rng.randrange(len(generic_points))])
        for pos in rng.sample(range(k), rng.randint(1, k - 1)):
            base[pos] = Fraction(0)
        cand = tuple(base)
        if cand in points or not ghilb.valid_chart_point(chart, cand):
            continue
        points.append(cand)
        made += 1
    while made < degenerate:
        # always-valid fallback: a single nonzero free coordinate
        vals = [Fraction(0)] * k
        vals[free[0]] = random_rational(rng)
        points.append(tuple(vals))
        made += 1
    return tuple(points)


# ---------------------------------------------------------------------------
# helpers

def _frac(x):
    return str(Fraction(x))


def _vertex_str(v):
    return [_frac(x) for x in v]


def _write_payload(payload, out):
    text = json.dumps(payload, indent=2, sort_keys=True) + "\n"
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _mono_labels(monos):
    return [geom.monomial_label(m) for m in monos]


def _staircase_labels(monos):
    out = []
    for m in sorted(monos):
        body = "*".join("Z%d" % (i + 1) if e == 1 else "Z%d^%d" % (i + 1, e)
                        for i, e in enumerate(m) if e)
        out.append(body or "1")
    return out


# ---------------------------------------------------------------------------
# verify

_DECOMP_EXPECT = {
    "xi": (True, False),
    "xi-star": (False, True),
    "xi-1": (True, True),
    "xi-2": (True, True),
    "xi-3": (True, True),
    "xi-prime": (True, True),
}


def _expected_star_coefficients(ctx):
    n = ctx.n
    expect = {}
    if n == 4:
        expect[geom.simplex_center(4)] = 1
    else:
        for i in range(1, 6):
            expect[geom.deep_point(5, i)] = 2
            expect[geom.facet_barycenter(5, i)] = 1
    return expect


def _verify_decompositions(ctx, failures):
    n = ctx.n
    section = {}
    decomps = {}
    for name in geom.standard_names(n):
        d = geom.standard_decomposition(name, n)
        decomps[name] = d
        report = geom.validate_decomposition(ctx, d)
        crepant = geom.is_crepant(ctx, d)
        smooth = geom.is_smooth(ctx, d)
        want_crepant, want_smooth = _DECOMP_EXPECT[name]
        entry = {
            "cells": len(d.cells),
            "valid": report.ok,
            "issues": list(report.issues),
            "crepant": crepant,
            "smooth": smooth,
        }
        if not report.ok:
            failures.append("decomposition %s invalid" % name)
        if (crepant, smooth) != (want_crepant, want_smooth):
            failures.append("decomposition %s crepant/smooth mismatch" % name)
        if crepant and smooth:
            euler = geom.euler_number(ctx, d)
            entry["euler"] = euler
            if euler != 2 ** (n - 1):
                failures.append("decomposition %s has Euler count %d"
                                % (name, euler))
        section[name] = entry
    star = decomps["xi-star"]
    coeffs = geom.canonical_coefficients(ctx, star)
    expected = _expected_star_coefficients(ctx)
    coeff_ok = all(coeffs[v] == expected.get(v, 0) for v in star.vertices)
    if not coeff_ok:
        failures.append("xi-star canonical coefficients mismatch")
    section["canonical_coefficients"] = {
        "xi-star": {",".join(_vertex_str(v)): c for v, c in sorted(coeffs.items())},
        "matches_expected": coeff_ok,
    }
    chain = ([("xi-%d" % j, "xi") for j in (1, 2, 3)]
             + [("xi-star", "xi-%d" % j) for j in (1, 2, 3)]
             if n == 4 else
             [("xi-prime", "xi"), ("xi-star", "xi-prime")])
    chain.append(("xi-star", "xi"))
    refinements = []
    for fine, coarse in chain:
        ok = geom.refines(ctx, decomps[fine], decomps[coarse])
        refinements.append({"fine": fine, "coarse": coarse, "holds": ok})
        if not ok:
            failures.append("refinement %s of %s fails" % (fine, coarse))
    section["refinements"] = refinements
    return section


def _verify_core(ctx, failures):
    n = ctx.n
    gens = geom.core_generators(ctx)
    labels = (["t%d" % i for i in range(1, n + 1)]
              + ["u%d" % i for i in range(1, n + 1)])
    computed = toricideal.toric_ideal(gens)
    expected = toricideal.core_expected_relations(n)
    match = toricideal.binomials_generate_equal_ideals(
        computed, expected, 2 * n)
    if not match:
        failures.append("core ideal does not match the expected relations")
    section = {
        "generators": _mono_labels(gens),
        "computed_relations": [toricideal.binomial_str(b, labels)
                               for b in computed],
        "expected_relations": [toricideal.binomial_str(b, labels)
                               for b in expected],
        "ideal_matches_expected": match,
    }
    if n == 4:
        literal = toricideal.core_expected_relations(4, "literal")
        complementary_holds = all(
            toricideal.check_relation(gens, b) for b in expected)
        literal_holds = all(toricideal.check_relation(gens, b)
                            for b in literal)
        section["reading"] = {
            "complementary_exponent_check": complementary_holds,
            "literal_exponent_check": literal_holds,
            "resolved_reading": ("complementary" if complementary_holds
                                 and not literal_holds else "ambiguous"),
        }
        if not complementary_holds or literal_holds:
            failures.append("core relation reading did not resolve as expected")
    else:
        chart_checks = []
        for chart in ghilb.chart_catalog(5):
            if chart.family not in ("V", "VI"):
                continue
            ideal = toricideal.toric_ideal(chart.coords)
            ok = toricideal.binomials_generate_equal_ideals(
                ideal, chart.relations, len(chart.coords))
            chart_checks.append({"chart": chart.name,
                                 "matches_template": ok})
            if not ok:
                failures.append("chart %s presentation mismatch" % chart.name)
        section["chart_presentations"] = chart_checks
    return section


def _verify_charts(ctx, cfg, failures):
    charts = ghilb.chart_catalog(ctx.n)
    rng = random.Random(cfg.seed)
    families = {}
    entries = []
    for chart in charts:
        families[chart.family] = families.get(chart.family, 0) + 1
        points = sample_chart_points(chart, rng, cfg.samples, 3)
        report = ghilb.verify_chart(ctx, chart, points)
        if not report.ok:
            for chk in report.checks:
                if not chk.ok:
                    failures.append("chart %s fails at point (%s)"
                                    % (chart.name,
                                       ",".join(_frac(v) for v in chk.values)))
        entries.append({
            "name": chart.name,
            "family": chart.family,
            "cell_vertices": [_vertex_str(v) for v in chart.cell.vertices],
            "coordinates": list(ghilb.coordinate_labels(chart)),
            "interior_weight": list(ghilb.interior_weight(ctx, chart.cell)),
            "staircase": _staircase_labels(report.staircase),
            "points": [{
                "values": [_frac(v) for v in chk.values],
                "reduced_gb": chk.reduced_gb_ok,
                "initial_ideal": chk.initial_ok,
                "staircase": chk.staircase_ok,
                "g_regular": chk.g_regular_ok,
            } for chk in report.checks],
        })
    return {"count": len(charts), "families": families, "charts": entries}


def run_verify(cfg):
    if cfg.n not in (4, 5):
        print("verify supports n = 4 and 5", file=sys.stderr)
        return 2
    ctx = geom.lattice_context(cfg.n)
    failures = []
    payload = {
        "schema": REPORT_SCHEMA,
        "command": "verify",
        "n": cfg.n,
        "seed": cfg.seed,
        "samples": cfg.samples,
        "decompositions": _verify_decompositions(ctx, failures),
        "core": _verify_core(ctx, failures),
        "charts": _verify_charts(ctx, cfg, failures),
    }
    payload["summary"] = {"failures": failures, "passed": not failures}
    _write_payload(payload, cfg.out)
    print("verify n=%d: %d charts, %s"
          % (cfg.n, payload["charts"]["count"],
             "all checks passed" if not failures
             else "%d failures" % len(failures)))
    return 0 if not failures else 1


# ---------------------------------------------------------------------------
# enumerate

def run_enumerate(cfg):
    if cfg.n not in (3, 4, 5):
        print("enumerate supports n = 3, 4 and 5", file=sys.stderr)
        return 2
    ctx = geom.lattice_context(cfg.n)
    dominated = cfg.filter == "dominated" and cfg.n in (4, 5)
    tris = geom.enumerate_core_triangulations(ctx, dominated_only=dominated)
    graph = geom.flop_graph(ctx, tris)
    payload = {
        "schema": ENUM_SCHEMA,
        "command": "enumerate",
        "n": cfg.n,
        "filter": "dominated" if dominated else "all",
        "count": len(tris),
        "triangulations": [geom.decomposition_to_dict(ctx, t) for t in tris],
        "flop_graph": {
            "nodes": graph.num_nodes,
            "edges": [list(e) for e in graph.edges],
            "connected": graph.connected,
            "complete": len(graph.edges) == len(tris) * (len(tris) - 1) // 2,
        },
    }
    if cfg.n == 5 and dominated:
        payload["expected_count"] = 12
        payload["matches_expected"] = len(tris) == 12
    if cfg.n == 4:
        payload["expected_count"] = 3
        payload["matches_expected"] = len(tris) == 3
    _write_payload(payload, cfg.out)
    print("core triangulations (n=%d, %s): %d"
          % (cfg.n, payload["filter"], len(tris)))
    print("flop graph: %d edges, connected=%s"
          % (len(graph.edges), graph.connected))
    return 0


# ---------------------------------------------------------------------------
# fan and chart dumps

def run_fan(cfg):
    try:
        d = geom.standard_decomposition(cfg.name, cfg.n)
    except ValueError as exc:
        print(str(exc), file=sys.stderr)
        return 2
    ctx = geom.lattice_context(cfg.n)
    _write_payload(geom.decomposition_to_dict(ctx, d), cfg.out)
    print("fan %s (n=%d): %d vertices, %d cells"
          % (d.name, cfg.n, len(d.vertices), len(d.cells)))
    return 0


def _parse_point(text, k):
    parts = [p.strip() for p in text.split(",")]
    if len(parts) != k:
        raise ValueError("expected %d comma-separated rationals" % k)
    return tuple(Fraction(p) for p in parts)


def run_chart(cfg):
    if cfg.n not in (4, 5):
        print("chart supports n = 4 and 5", file=sys.stderr)
        return 2
    try:
        chart = ghilb.chart_by_name(cfg.n, cfg.chart)
    except KeyError as exc:
        print(str(exc), file=sys.stderr)
        return 2
    ctx = geom.lattice_context(cfg.n)
    if cfg.point:
        try:
            values = _parse_point(cfg.point, len(chart.coords))
        except ValueError as exc:
            print(str(exc), file=sys.stderr)
            return 2
        if not ghilb.valid_chart_point(chart, values):
            print("point violates the chart relations", file=sys.stderr)
            return 2
    else:
        rng = random.Random(cfg.seed)
        free, deps = ghilb.free_coordinate_split(chart)
        values = ghilb.extend_free_values(
            chart, free, deps, [random_rational(rng) for _ in free])
    gens = ghilb.ideal_at(chart, values)
    order = ghilb.chart_order(ctx, chart)
    gb = buchberger(gens, order)
    init = tuple(sorted(leading_monomial(g, order) for g in gb.polys))
    stairs = staircase(init)
    payload = {
        "schema": CHART_SCHEMA,
        "command": "chart",
        "n": cfg.n,
        "chart": chart.name,
        "coordinates": list(ghilb.coordinate_labels(chart)),
        "point": [_frac(v) for v in values],
        "ideal": [poly_str(p, order=order) for p in gens],
        "reduced_groebner_basis": [poly_str(p, order=order) for p in gb.polys],
        "initial_ideal": _staircase_labels(init),
        "staircase": _staircase_labels(stairs),
        "g_regular": ghilb.g_regular(stairs, cfg.n),
    }
    _write_payload(payload, cfg.out)
    print("chart %s at (%s)" % (chart.name, ",".join(_frac(v) for v in values)))
    return 0


# ---------------------------------------------------------------------------
# argument parsing

def build_parser():
    parser = argparse.ArgumentParser(
        prog="a1hilb",
        description="exact verification of the sign-diagonal chart atlases")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="run the full certificate suite")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--samples", type=int, default=5)
    p.add_argument("--out", default="")

    p = sub.add_parser("enumerate", help="unimodular core triangulations")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--filter", choices=("all", "dominated"), default="all")
    p.add_argument("--out", default="")

    p = sub.add_parser("fan", help="export a standard decomposition")
    p.add_argument("--name", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--out", default="")

    p = sub.add_parser("chart", help="dump one chart at a point")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--chart", required=True)
    p.add_argument("--point", default="")
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--out", default="")
    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    cfg = RunConfig(
        command=args.command,
        n=args.n,
        seed=getattr(args, "seed", 42),
        samples=max(1, getattr(args, "samples", 5)),
        out=getattr(args, "out", ""),
        filter=getattr(args, "filter", "all"),
        name=getattr(args, "name", ""),
        chart=getattr(args, "chart", ""),
        point=getattr(args, "point", ""),
    )
    runner = {"verify": run_verify, "enumerate": run_enumerate,
              "fan": run_fan, "chart": run_chart}[cfg.command]
    try:
        return runner(cfg)
    except ValueError as exc:
        print(str(exc), file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
