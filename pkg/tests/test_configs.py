"""Tests for incidence configurations, the duad/syntheme structures, the
42-curve system and the curve-system JSON loader."""

import json
from fractions import Fraction
from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import desmic_kit.configs as cf
from desmic_kit.linecomplex import perm_from_cycles


# -- abstract configurations ---------------------------------------------------

def test_reye_config_type_and_model():
    r = cf.reye_config()
    assert r.type_signature == ((12, 4), (16, 3))
    # the line through the center and two opposite vertices is a block
    diag = frozenset({(1, 0, 0, 0), (1, 1, 1, 1), (1, -1, -1, -1)})
    assert diag in set(r.blocks)


def test_reye_point_transitive():
    assert cf.point_transitive(cf.reye_config())


def test_desmic_incidence_is_reye():
    d = cf.desmic_surface_config()
    assert d.type_signature == ((12, 4), (16, 3))
    iso = cf.config_isomorphic(d, cf.reye_config())
    assert iso is not None
    pmap, bmap = iso
    assert cf._check_witness(d, cf.reye_config(), pmap, bmap)


def test_kummer_28_incidence_is_reye():
    k = cf.kummer_abstract_config()
    assert k.type_signature == ((12, 4), (16, 3))
    assert cf.config_isomorphic(k, cf.reye_config()) is not None


def test_isomorphism_type_mismatch_raises():
    with pytest.raises(ValueError):
        cf.config_isomorphic(cf.reye_config(), cf.pg24())


def test_switched_bipartite_graph_is_not_reye():
    # swap one incidence between two disjoint blocks: degrees survive but
    # the structure is no longer a Reye configuration
    r = cf.reye_config()
    blocks = [set(r.points_of(b)) for b in r.blocks]
    a, b = None, None
    for i, j in combinations(range(len(blocks)), 2):
        if not blocks[i] & blocks[j]:
            a, b = i, j
            break
    pa = sorted(blocks[a])[0]
    pb = sorted(blocks[b])[0]
    blocks[a].remove(pa)
    blocks[a].add(pb)
    blocks[b].remove(pb)
    blocks[b].add(pa)
    other = cf.AbstractConfig.from_blocks(r.points,
                                          [frozenset(s) for s in blocks])
    assert other.type_signature == r.type_signature
    assert cf.config_isomorphic(other, r) is None


@settings(max_examples=10, deadline=None)
@given(st.randoms(use_true_random=False))
def test_isomorphism_invariant_under_relabeling(rnd):
    r = cf.reye_config()
    shuffled = list(r.points)
    rnd.shuffle(shuffled)
    perm = dict(zip(r.points, shuffled))
    blocks = [frozenset(perm[p] for p in r.points_of(b)) for b in r.blocks]
    other = cf.AbstractConfig.from_blocks(shuffled, blocks)
    iso = cf.config_isomorphic(other, r)
    assert iso is not None
    # and the relation is symmetric
    assert cf.config_isomorphic(r, other) is not None


# -- coset and determinant configurations --------------------------------------

def test_coset_config_type_and_printed_quadruple():
    c = cf.coset_config()
    assert c.type_signature == ((24, 3), (18, 4))
    quad = frozenset(perm_from_cycles(t)
                     for t in ["(143)", "(132)", "(1432)", "(13)"])
    assert quad in set(c.blocks)
    assert quad in c.blocks_of(perm_from_cycles("(143)"))


def test_coset_config_matches_plane_incidence_on_first_family():
    c = cf.coset_config()
    p = cf.plane_node_config(1)
    assert p.type_signature == ((24, 3), (18, 4))
    assert cf.config_isomorphic(c, p) is not None


def test_determinant_config_counts():
    d = cf.determinant_config()
    assert d.type_signature == ((24, 4), (16, 6))
    for tau in d.points:
        assert len(d.blocks_of(tau)) == 4
    for cell in d.blocks:
        assert len(d.points_of(cell)) == 6


def test_determinant_config_matches_plane_incidence_on_second_family():
    d = cf.determinant_config()
    p = cf.plane_node_config(2)
    assert p.type_signature == ((24, 4), (16, 6))
    assert cf.config_isomorphic(d, p) is not None


# -- the plane over the four-element field -------------------------------------

def test_pg24_counts():
    pg = cf.pg24()
    assert len(pg.points) == 21 and len(pg.blocks) == 21
    assert pg.type_signature == ((21, 5), (21, 5))


def test_pg24_projective_axioms():
    pg = cf.pg24()
    for p, q in combinations(pg.points, 2):
        assert len(pg.blocks_of(p) & pg.blocks_of(q)) == 1
    for l, m in combinations(pg.blocks, 2):
        assert len(pg.points_of(l) & pg.points_of(m)) == 1


# -- duads, synthemes, totals ---------------------------------------------------

EXPECTED_TABLE = (
    ("", "14.25.36", "16.24.35", "13.26.45", "12.34.56", "15.23.46"),
    ("14.25.36", "", "15.26.34", "12.35.46", "16.23.45", "13.24.56"),
    ("16.24.35", "15.26.34", "", "14.23.56", "13.25.46", "12.36.45"),
    ("13.26.45", "12.35.46", "14.23.56", "", "15.24.36", "16.25.34"),
    ("12.34.56", "16.23.45", "13.25.46", "15.24.36", "", "14.26.35"),
    ("15.23.46", "13.24.56", "12.36.45", "16.25.34", "14.26.35", ""),
)


def test_duad_syntheme_table_is_byte_identical():
    sysd = cf.duad_syntheme_system()
    assert sysd["table"] == EXPECTED_TABLE
    # symmetric, as printed
    for i in range(6):
        for j in range(6):
            assert sysd["table"][i][j] == sysd["table"][j][i]
    assert sysd["table"][0][1] == "14.25.36"


def test_totals_cover_and_intersect_once():
    sysd = cf.duad_syntheme_system()
    assert len(sysd["duads"]) == 15 and len(sysd["synthemes"]) == 15
    assert len(sysd["totals"]) == 6
    for label, synths in sysd["totals"].items():
        assert len(synths) == 5
        covered = {d for s in synths for d in s.split(".")}
        assert covered == set(sysd["duads"])
    for a, b in combinations(sorted(sysd["totals"]), 2):
        assert len(set(sysd["totals"][a]) & set(sysd["totals"][b])) == 1


def test_duad_syntheme_incidence_is_15_3():
    ds = cf.duad_syntheme_config()
    assert ds.type_signature == ((15, 3), (15, 3))


# -- the 42-curve system --------------------------------------------------------

def test_six_arc_general_position():
    from desmic_kit.matrices import matrix_rank
    for trip in combinations(cf.SIX_ARC, 3):
        assert matrix_rank([list(r) for r in trip]) == 3


def test_42_curve_labels_and_matrix():
    cs, labels = cf.label_42_curves()
    assert len(cs.ids) == 42 and len(set(cs.ids)) == 42
    assert set(labels["points"]) & set(labels["lines"]) == set()
    # line "12" meets points 1, 2 and the three synthemes containing 12
    mates = [c for c in labels["points"] if cs.pair("12", c) == 1]
    assert sorted(mates) == ["1", "12.34.56", "12.35.46", "12.36.45", "2"]
    # the remaining six lines carry total labels
    totals = [l for l in labels["lines"] if l.startswith("T")]
    assert sorted(totals) == ["T1", "T2", "T3", "T4", "T5", "T6"]
    # matrix invariants
    n = 42
    for a in range(n):
        assert cs.gram[a][a] == -2
        row = [cs.gram[a][b] for b in range(n) if b != a]
        assert set(row) <= {0, 1}
        assert sum(row) == 5
    pts, lns = set(labels["points"]), set(labels["lines"])
    for a, b in combinations(cs.ids, 2):
        if (a in pts) == (b in pts):
            assert cs.pair(a, b) == 0


def test_fibration_tables_validate():
    cs, commons = cf.fibration_tables()
    assert len(commons) == 16
    assert len(cs.fibrations) == 3
    for fib in cs.fibrations:
        assert len(fib["fibers"]) == 5
        for fiber in fib["fibers"]:
            assert fiber["type"] == "D~4"
    # fiber "12": central 12 meets its four printed leaves
    central, leaves = cf.FIBRATION_TABLE_1[0]
    assert central == "12"
    for leaf in leaves:
        assert cs.pair("12", leaf) == 1
    for u, v in combinations(leaves, 2):
        assert cs.pair(u, v) == 0


def test_fiber_classes_square_to_zero():
    cs, _ = cf.fibration_tables()
    for fib in cs.fibrations:
        for k in range(len(fib["fibers"])):
            fv = cs.fiber_vector(fib["name"], k)
            assert cs.vector_pairing(fv, fv) == 0


def test_extract_desmic_28():
    cs28, cfg, iso = cf.extract_desmic_28()
    assert len(cs28.ids) == 28
    assert cfg.type_signature == ((12, 4), (16, 3))
    assert iso is not None
    assert cfg.points == ["12", "13", "14", "15", "26", "36", "46", "56",
                          "23", "45", "T2", "T5"]


# -- curve-system ingestion ------------------------------------------------------

def test_checked_in_data_files_validate():
    cs0 = cf.kummer_char0_system()
    assert len(cs0.ids) == 28
    cs2 = cf.kummer_char2_system()
    assert len(cs2.ids) == 22
    # three fibrations with two nine-component fibers each
    pis = [f for f in cs2.fibrations if f["name"].startswith("pi")]
    assert len(pis) == 3
    for fib in pis:
        assert len(fib["fibers"]) == 2
        for fiber in fib["fibers"]:
            assert fiber["type"] == "D~8"
            assert len(fiber["components"]) == 9


def test_char0_divisor_h():
    cs = cf.kummer_char0_system()
    h = cs.divisor_vector("H")
    assert cs.vector_pairing(h, h) == 4
    for cid in cs.ids:
        want = 1 if cid.startswith("T") else 0
        assert cs.vector_pairing(h, cs.curve_vector(cid)) == want


def test_char2_divisor_h():
    cs = cf.kummer_char2_system()
    h = cs.divisor_vector("H")
    assert cs.vector_pairing(h, h) == 4
    for cid in cs.ids:
        want = 1 if cid.endswith(".0") else 0
        assert cs.vector_pairing(h, cs.curve_vector(cid)) == want


def test_ingest_rejects_bad_fiber(tmp_path):
    with open(cf.data_path("kummer-char0.json")) as fh:
        data = json.load(fh)
    # drop one leaf from the first fiber: its class no longer squares to 0
    data["fibrations"][0]["fibers"][0]["components"].pop()
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps(data))
    with pytest.raises(ValueError, match="f1"):
        cf.ingest_curve_system(str(bad))


def test_ingest_rejects_non_integral_divisor(tmp_path):
    with open(cf.data_path("kummer-char0.json")) as fh:
        data = json.load(fh)
    data["divisors"].append(
        {"name": "bad", "terms": [{"id": "E0", "coeff": "1/2"}]})
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps(data))
    with pytest.raises(ValueError, match="bad"):
        cf.ingest_curve_system(str(bad))


def test_ingest_rejects_unknown_curve(tmp_path):
    with open(cf.data_path("kummer-char0.json")) as fh:
        data = json.load(fh)
    data["intersections"].append(["E0", "nonsense", 1])
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps(data))
    with pytest.raises(ValueError, match="nonsense"):
        cf.ingest_curve_system(str(bad))


def test_divisor_halves_are_fractions():
    cs = cf.kummer_char0_system()
    coeffs = {Fraction(t["coeff"]) for t in cs.divisors[0]["terms"]
              if "id" in t}
    assert coeffs == {Fraction(-1, 2)}
