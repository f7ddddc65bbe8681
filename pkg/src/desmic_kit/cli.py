"""Batch verification driver.

Runs the named check suites with fixed inputs, prints a human-readable
summary and optionally a machine-readable JSON report.  Reports are
deterministic: given the same suite, options and data files the JSON
output is byte-identical across runs (wall-clock times are kept on the
in-memory objects but never serialized).
"""

import argparse
import json
import os
import sys
import time
from concurrent.futures import ThreadPoolExecutor

from . import configs as cf
from . import lattices as la
from . import linecomplex as lc
from . import surfaces as sf
from .scalars import Mod, sqrt_minus_one

SUITES = ("identities", "desmic-surface", "line-complex", "symmetry",
          "cremona", "char2", "supersingular", "lattices")

DEFAULT_PRIMES = (13, 17)
DEFAULT_BUDGET = 600.0


class Check:
    """One verification step: id, human anchor, outcome, details."""

    def __init__(self, check_id, anchor, status, details, elapsed=0.0):
        assert status in ("pass", "fail", "evidence-only", "skipped")
        self.id = check_id
        self.anchor = anchor
        self.status = status
        self.details = details
        self.elapsed = elapsed  # in-memory only, never serialized

    def as_dict(self):
        return {"id": self.id, "anchor": self.anchor,
                "status": self.status, "details": self.details}


class VerificationReport:
    """All checks of one suite, merged in a deterministic order."""

    def __init__(self, suite, checks, options):
        ids = [c.id for c in checks]
        assert len(ids) == len(set(ids)), "duplicate check ids"
        self.suite = suite
        self.checks = sorted(checks, key=lambda c: c.id)
        self.options = options

    @property
    def failures(self):
        return [c for c in self.checks if c.status == "fail"]

    @property
    def ok(self):
        return not self.failures

    def as_dict(self):
        return {"schema": 1,
                "suite": self.suite,
                "primes": list(self.options.primes),
                "checks": [c.as_dict() for c in self.checks],
                "failed": len(self.failures),
                "ok": self.ok}

    def to_json(self):
        return json.dumps(self.as_dict(), indent=2, sort_keys=True) + "\n"


class Options:
    def __init__(self, primes=DEFAULT_PRIMES, threads=None, data_dir=None,
                 budget_seconds=DEFAULT_BUDGET):
        self.primes = tuple(primes) if primes else DEFAULT_PRIMES
        self.threads = threads or os.cpu_count() or 1
        self.data_dir = data_dir
        self.budget_seconds = budget_seconds


def _proportional(p, q):
    """Polynomial equality up to one nonzero scalar."""
    if set(p.coeffs) != set(q.coeffs):
        return False
    k = None
    for e, c in p.coeffs.items():
        ratio = c / q.coeffs[e]
        if k is None:
            k = ratio
        elif ratio != k:
            return False
    return True


# ---------------------------------------------------------------------------
# individual checks; each returns (status, details)
# ---------------------------------------------------------------------------

def _ok(cond, details):
    return ("pass" if cond else "fail"), details


def check_desmic_identity():
    lhs, rhs = sf.desmic_identity_parts()
    return _ok(sf.verify_identity(lhs, rhs),
               "product-of-tetrahedra identity holds exactly")


def check_eight_squares():
    lhs, rhs = sf.eight_squares_parts()
    return _ok(sf.verify_identity(lhs, rhs),
               "eight-squares identity holds exactly")


def check_steinerian(char):
    lhs, rhs = sf.steinerian_identity_parts(char)
    return _ok(sf.verify_identity(lhs, rhs),
               "f^2 - f_x f_y f_z = G w^2 in characteristic %d" % char)


def check_desmic_nodes():
    f = sf.desmic_pencil_symbolic()
    good = sum(1 for p in sf.DESMIC_SINGULAR_12 if sf.node_check(f, p))
    return _ok(good == 12, "%d/12 points are ordinary nodes of the "
               "generic pencil member" % good)


def check_desmic_lines():
    f = sf.desmic_pencil_symbolic()
    lines = sf.desmic_lines_16()
    distinct = len(set(l.plucker for l in lines))
    good = sum(1 for l in lines if sf.contains_line(f, l))
    return _ok(distinct == 16 and good == 16,
               "%d distinct base-locus lines, %d contained" % (distinct, good))


def check_desmic_reye():
    iso = cf.config_isomorphic(cf.desmic_surface_config(), cf.reye_config())
    return _ok(iso is not None,
               "node/line incidence is a (12_4, 16_3) Reye configuration")


def check_tangency_computed():
    condition, conic, big = sf.residual_conic_tangency()
    ring = condition.ring
    a, b, u, v = ring.gens()
    two = ring.const(2)
    computed_ok = _proportional(condition, (a + two * b) * u
                                + (two * a + b) * v)
    si, ti, ri = (big.varnames.index(n) for n in ("s", "t", "r"))
    degs = {e[si] + e[ti] + e[ri] for e in conic.coeffs}
    return _ok(computed_ok and degs == {2},
               "tangency condition (a+2b)u + (2a+b)v = 0 confirmed by the "
               "gradient oracle; residual conic is an honest quadric")


def check_tangency_printed():
    # the printed formula, taken at face value: u(b+c) + v(a+b) with
    # c = -a-b, compared against the computed condition
    condition, _, _ = sf.residual_conic_tangency()
    ring = condition.ring
    a, b, u, v = ring.gens()
    printed = (b + (-a - b)) * u + (a + b) * v
    same = _proportional(condition, printed)
    return _ok(same, "computed condition %s the printed formula "
               "u(b+c) + v(a+b)" % ("matches" if same else "differs from"))


def check_complex_nodes():
    inv_p = lc.verify_node_inventory(lc.CompleteIntersection35.plucker())
    inv_k = lc.verify_node_inventory(lc.CompleteIntersection35.klein())
    ok = (inv_p.all_nodes and inv_k.all_nodes
          and len(inv_p.sing1) == 18 and len(inv_p.sing2) == 16)
    return _ok(ok, "18 + 16 = 34 listed points are ordinary nodes in both "
               "coordinate systems")


def check_complex_planes():
    inv = lc.verify_plane_inventory(lc.CompleteIntersection35.plucker())
    ok = (inv.configuration_ok and len(inv.planes) == 24
          and all(c == (3, 4) for c in inv.per_plane))
    return _ok(ok, "24 planes contained; 3+4 nodes per plane, 4 planes per "
               "first-family node, 6 per second-family node")


def check_scan(p, unit_variant):
    count, pts = lc.scan_singular_points(p, unit_variant=unit_variant)
    want = 18 if unit_variant else 34
    label = "unit-coefficient variant" if unit_variant else "complex"
    if count == want and len(set(pts)) == want:
        return ("evidence-only",
                "exhaustive scan of the projective quadric over F_%d finds "
                "exactly %d singular points of the %s" % (p, count, label))
    return ("fail", "scan over F_%d found %d singular points, expected %d"
            % (p, count, want))


def check_scan_matches_list(p):
    one = Mod(1, p)
    i = sqrt_minus_one(p)
    printed = set()
    for pt in lc.klein_nodes_18(i) + lc.klein_nodes_16(i):
        printed.add(tuple(c.v for c in lc._normalize_tuple(
            lc._lift_point(one, pt))))
    _, pts = lc.scan_singular_points(p)
    return _ok(set(pts) == printed,
               "scan output over F_%d equals the reduction of the printed "
               "node list" % p)


def check_symmetry(budget_seconds):
    t0 = time.monotonic()
    rep = lc.monomial_symmetry_group()
    elapsed = time.monotonic() - t0
    ok = (rep.closed and rep.order == 1152
          and rep.node_orbit_sizes == [16, 18]
          and rep.plane_orbit_count == 1)
    if elapsed > budget_seconds:
        return ("fail", "symmetry search exceeded the %.0fs budget"
                % budget_seconds)
    return _ok(ok, "monomial symmetry group closes at order %d with node "
               "orbits %s and %d plane orbit(s)"
               % (rep.order, rep.node_orbit_sizes, rep.plane_orbit_count))


def check_cremona_rewrite():
    rep = lc.project_to_quartic_threefold()
    return _ok(rep["rewrite_identity"] and rep["elimination_identity"],
               "quartic-threefold rewriting and elimination identities hold "
               "exactly")


def check_cremona_nodes():
    rep = lc.project_to_quartic_threefold()
    ok = rep["nodes_ok"] and len(rep["node_flags"]) == 17
    return _ok(ok, "%d listed points verified as nodes of the projected "
               "quartic" % len(rep["node_flags"]))


def check_cremona_lines():
    rep = lc.project_to_quartic_threefold()
    return _ok(rep["singular_lines_ok"],
               "all 4 listed singular lines verified")


def check_rationality_planes():
    return _ok(lc.rationality_planes_check(),
               "the three planes lie on the threefold and meet pairwise in "
               "the listed points")


def check_segre():
    out = lc.segre_isomorphism_check()
    from .scalars import QI
    ok = (out["sum_zero"] and out["lambda"] == QI(24)
          and out["nodes_mod_p"] == 35)
    return _ok(ok, "sum t_i = 0 and sum t_i^3 = 24 * cubic; 35 distinct "
               "nodes over a prime field")


def check_char2_points():
    reports = sf.char2_cremona_singular_points()
    good = sum(1 for r in reports if r.is_singular)
    return _ok(len(reports) == 13 and good == 13,
               "%d/13 singular points verified in the parametric quotient "
               "rings" % good)


def check_char2_a3():
    F = sf.cremona_char2_specialized(0, 0, 1, 1)
    rep = sf.singular_at(F, (0, 0, 0, 1))
    verdict = sf.rdp_an_type(sf.local_series(F, (0, 0, 0, 1)))
    ok = rep.is_singular and verdict == sf.AnVerdict("A", 3)
    return _ok(ok, "specialization (0,0,1,1) has an A_3 point at (0,0,0,1); "
               "detector returned %s%s" % (verdict.kind, verdict.n))


def check_char2_kummer():
    form, lines, reports = sf.kummer_char2_quartic()
    pts = sf.kummer_char2_points()
    a3 = sum(1 for r in reports
             if r.is_singular and r.an_type == sf.AnVerdict("A", 3))
    counts_pt = [sum(1 for l in lines if l.contains(p)) for p in pts]
    counts_ln = [sum(1 for p in pts if l.contains(p)) for l in lines]
    ok = (len(lines) == 4 and all(sf.contains_line(form, l) for l in lines)
          and a3 == 6 and counts_pt == [2] * 6 and counts_ln == [3] * 4)
    return _ok(ok, "4 lines on the surface, 6 A_3 points, (6_2, 4_3) "
               "incidence")


def check_pg24():
    from itertools import combinations
    pg = cf.pg24()
    ok = pg.type_signature == ((21, 5), (21, 5))
    ok = ok and all(len(pg.blocks_of(p) & pg.blocks_of(q)) == 1
                    for p, q in combinations(pg.points, 2))
    return _ok(ok, "plane over the four-element field is a (21_5, 21_5) "
               "configuration with unique joins")


def check_duad_table():
    sysd = cf.duad_syntheme_system()
    same = sysd["table"] == cf.DUAD_TABLE_REFERENCE
    return _ok(same, "6x6 duad/syntheme table is byte-identical to the "
               "reference rendering" if same else
               "6x6 duad/syntheme table differs from the reference")


def check_fibration_tables(data_dir):
    base = cf.supersingular_42_system(data_dir)
    cs, commons = cf.fibration_tables(base)
    ok = (len(commons) == 16 and len(cs.fibrations) == 3
          and all(f["type"] == "D~4"
                  for fib in cs.fibrations for f in fib["fibers"]))
    for fib in cs.fibrations:
        for k in range(len(fib["fibers"])):
            fv = cs.fiber_vector(fib["name"], k)
            ok = ok and cs.vector_pairing(fv, fv) == 0
    return _ok(ok, "three fibration tables validate: five 4-pronged star "
               "fibers each, classes square to zero, 16 common simple "
               "components")


def check_reye_28():
    cs28, cfg, iso = cf.extract_desmic_28()
    ok = (len(cs28.ids) == 28 and cfg.type_signature == ((12, 4), (16, 3))
          and iso is not None)
    return _ok(ok, "28-curve sub-system carries a (12_4, 16_3) configuration "
               "isomorphic to Reye")


def check_ss_divisor(data_dir):
    base = cf.supersingular_42_system(data_dir)
    cs, commons = cf.fibration_tables(base)
    out = la.divisor_pairings(cs, "H")
    pair = out["pairings"]
    centrals = {c for t in cf.FIBRATION_TABLES for c, _ in t[:4]}
    conics = {"1", "6", "16.23.45"}
    contracted = {"16", "16.24.35", "16.25.34"}
    ok = out["self"] == 4
    ok = ok and all(pair[c] == 0 for c in centrals | contracted)
    ok = ok and all(pair[c] == 1 for c in commons)
    ok = ok and all(pair[c] == 2 for c in conics)
    return _ok(ok, "H^2 = 4; H pairs 0 with centrals and contracted curves, "
               "1 with the 16 commons, 2 with the three conics")


def check_ss_profile_printed(data_dir):
    base = cf.supersingular_42_system(data_dir)
    cs, _ = cf.fibration_tables(base)
    out = la.divisor_pairings(cs, "H")
    profile = {}
    for v in out["pairings"].values():
        profile[v] = profile.get(v, 0) + 1
    printed = {0: 15, 1: 16, 2: 3, 3: 8}
    got = ", ".join("%dx%d" % (k, profile[k]) for k in sorted(profile))
    return _ok(profile == printed,
               "pairing profile {%s} vs printed {0x15, 1x16, 2x3, 3x8}"
               % got)


def check_genus_match():
    l1, l2 = la.curve_span_lattice_names()
    out = la.genus_match_indefinite(l1, l2)
    ok = (out["match"] and out["signatures"] == ((1, 18), (1, 18))
          and out["disc_orders"] == (16, 16))
    return _ok(ok, "the two rank-19 presentations share signature (1,18), "
               "discriminant order 16 and isometric discriminant forms")


def check_span_28(data_dir):
    rep = la.lattice_from_curves(cf.kummer_char0_system(data_dir))
    ok = (rep["rank"] == 19 and rep["signature"] == (1, 18)
          and rep["disc_order"] == 16)
    return _ok(ok, "28-curve span has rank %d, signature %s, discriminant "
               "order %d" % (rep["rank"], rep["signature"],
                             rep["disc_order"]))


def check_disc_form_relations():
    u, v = la.fq_u2(), la.fq_v2()
    q1, q5 = la.fq_cyclic(1, 4), la.fq_cyclic(5, 4)
    ok = (not la.fq_isometric(u, v)
          and la.fq_isometric(u.direct_sum(u), v.direct_sum(v))
          and la.fq_isometric(q1.direct_sum(v), q5.direct_sum(u)))
    return _ok(ok, "u != v, u+u = v+v, q_1(4)+v = q_5(4)+u as finite "
               "quadratic forms")


def check_overlattice_chains():
    ch = la.d5_a3_chain()
    ok = abs(ch["E8"].det()) == 1 and abs(ch["D8"].det()) == 4
    ok = ok and la.genus_match_indefinite(
        ch["E8"], la.standard_lattice("E8"))["match"]
    fq_d8, _ = la.disc_form(ch["D8"])
    ok = ok and la.fq_isometric(fq_d8, la.fq_u2())
    for row in ch["d8_basis"]:
        coords = la._coords_in_basis(row, ch["e8_basis"])
        ok = ok and coords is not None and all(
            c.denominator == 1 for c in coords)
    return _ok(ok, "glue over the rank-8 base yields unimodular and "
               "determinant-4 overlattices with the expected forms, nested "
               "as sublattices")


def check_artin_verdicts():
    r1, r2, r3 = (la.artin2_check(s) for s in (1, 2, 3))
    ok = (r1["embeddable"] and r2["embeddable"]
          and not r3["embeddable"] and r3["exhaustive"]
          and r3["candidates"] > 0 and r3["matching"] == 0)
    return _ok(ok, "embeddability verdicts (yes, yes, no); the third case "
               "certified by exhaustive ternary enumeration (%d candidates, "
               "0 matching)" % r3["candidates"])


# ---------------------------------------------------------------------------
# suite assembly
# ---------------------------------------------------------------------------

def _suite_checks(name, opt):
    """The (id, anchor, thunk) list of one suite."""
    if name == "identities":
        return [
            ("identities.desmic", "desmic tetrahedra product identity",
             check_desmic_identity),
            ("identities.eight-squares", "eight-squares identity",
             check_eight_squares),
            ("identities.steinerian-char0", "Steinerian identity over Z",
             lambda: check_steinerian(0)),
            ("identities.steinerian-char2", "Steinerian identity over F_2",
             lambda: check_steinerian(2)),
        ]
    if name == "desmic-surface":
        return [
            ("desmic.nodes-12", "twelve singular points of the pencil",
             check_desmic_nodes),
            ("desmic.lines-16", "sixteen base-locus lines",
             check_desmic_lines),
            ("desmic.reye-incidence", "node/line incidence configuration",
             check_desmic_reye),
            ("desmic.tangency-computed",
             "residual-conic tangency, gradient oracle",
             check_tangency_computed),
            ("desmic.tangency-printed",
             "residual-conic tangency, printed formula",
             check_tangency_printed),
        ]
    if name == "line-complex":
        checks = [
            ("complex.nodes-34", "34 listed nodes", check_complex_nodes),
            ("complex.planes-24", "24 planes and incidence counts",
             check_complex_planes),
        ]
        for p in opt.primes:
            checks.append(("complex.scan-f%d" % p,
                           "exhaustive scan over F_%d" % p,
                           lambda p=p: check_scan(p, False)))
            checks.append(("complex.scan-f%d-unit" % p,
                           "exhaustive scan, unit variant, over F_%d" % p,
                           lambda p=p: check_scan(p, True)))
            checks.append(("complex.scan-f%d-match" % p,
                           "scan agrees with the printed list mod %d" % p,
                           lambda p=p: check_scan_matches_list(p)))
        return checks
    if name == "symmetry":
        return [
            ("symmetry.group-1152", "monomial symmetry group and orbits",
             lambda: check_symmetry(opt.budget_seconds)),
        ]
    if name == "cremona":
        return [
            ("cremona.rewrite", "quartic threefold rewriting identity",
             check_cremona_rewrite),
            ("cremona.nodes-17", "seventeen nodes", check_cremona_nodes),
            ("cremona.singular-lines", "four singular lines",
             check_cremona_lines),
            ("cremona.rationality-planes", "three planes and intersections",
             check_rationality_planes),
            ("cremona.segre", "cubic change of variables",
             check_segre),
        ]
    if name == "char2":
        return [
            ("char2.points-13", "thirteen singular points",
             check_char2_points),
            ("char2.a3-specialization", "A_3 at the special member",
             check_char2_a3),
            ("char2.kummer-model", "four lines and six A_3 points",
             check_char2_kummer),
        ]
    if name == "supersingular":
        return [
            ("ss.pg24", "plane over the four-element field", check_pg24),
            ("ss.duad-table", "duad/syntheme table", check_duad_table),
            ("ss.fibration-tables", "three fibration tables",
             lambda: check_fibration_tables(opt.data_dir)),
            ("ss.reye-28", "28-curve configuration", check_reye_28),
            ("ss.divisor-h", "polarization pairings",
             lambda: check_ss_divisor(opt.data_dir)),
            ("ss.pairing-profile-printed", "printed pairing profile",
             lambda: check_ss_profile_printed(opt.data_dir)),
        ]
    if name == "lattices":
        return [
            ("lat.genus-match", "two presentations of the rank-19 lattice",
             check_genus_match),
            ("lat.span-28", "28-curve span invariants",
             lambda: check_span_28(opt.data_dir)),
            ("lat.disc-forms", "finite quadratic form relations",
             check_disc_form_relations),
            ("lat.overlattice-chains", "overlattice chains",
             check_overlattice_chains),
            ("lat.artin-verdicts", "embeddability verdicts",
             check_artin_verdicts),
        ]
    raise ValueError("unknown suite %r" % name)


def _run_one(item):
    check_id, anchor, thunk = item
    t0 = time.monotonic()
    try:
        status, details = thunk()
    except FileNotFoundError as e:
        status, details = "fail", "data file missing: %s" % e
    except Exception as e:  # a crashed check is a failed check
        status, details = "fail", "%s: %s" % (type(e).__name__, e)
    return Check(check_id, anchor, status, details,
                 elapsed=time.monotonic() - t0)


def run_suite(name, options=None):
    """Run one suite (or "all") and return its VerificationReport."""
    opt = options or Options()
    if name == "all":
        items = [it for s in SUITES for it in _suite_checks(s, opt)]
    else:
        items = _suite_checks(name, opt)
    if opt.threads > 1:
        with ThreadPoolExecutor(max_workers=opt.threads) as pool:
            checks = list(pool.map(_run_one, items))
    else:
        checks = [_run_one(it) for it in items]
    return VerificationReport(name, checks, opt)


# ---------------------------------------------------------------------------
# command line
# ---------------------------------------------------------------------------

def build_parser():
    ap = argparse.ArgumentParser(
        prog="desmic-kit",
        description="run exact verification suites and report the results")
    ap.add_argument("--suite", default="all",
                    choices=SUITES + ("all",))
    ap.add_argument("--prime", type=int, action="append", default=None,
                    help="scan prime, repeatable (default: 13 and 17)")
    ap.add_argument("--json", metavar="PATH", default=None,
                    help="write the JSON report here ('-' for stdout)")
    ap.add_argument("--threads", type=int, default=None,
                    help="max concurrent checks (default: cpu count)")
    ap.add_argument("--data-dir", default=None,
                    help="directory with the curve-system JSON files")
    ap.add_argument("--budget-seconds", type=float, default=DEFAULT_BUDGET,
                    help="time budget for the symmetry search")
    return ap


def main(argv=None):
    args = build_parser().parse_args(argv)
    opt = Options(primes=args.prime, threads=args.threads,
                  data_dir=args.data_dir,
                  budget_seconds=args.budget_seconds)
    report = run_suite(args.suite, opt)

    if args.json == "-":
        sys.stdout.write(report.to_json())
    else:
        for c in report.checks:
            print("[%s] %s (%s): %s"
                  % (c.status, c.id, c.anchor, c.details))
        print("%s: %d checks, %d failed"
              % (report.suite, len(report.checks), len(report.failures)))
        if args.json:
            with open(args.json, "w") as fh:
                fh.write(report.to_json())
    return 0 if report.ok else 1


if __name__ == "__main__":
    sys.exit(main())
