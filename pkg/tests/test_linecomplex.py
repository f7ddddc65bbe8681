"""Tests for the cubic line complex: equations, nodes, planes, symmetries,
scans, the projected quartic threefold, and the Segre identification."""

from fractions import Fraction

import pytest

import desmic_kit.linecomplex as lc
from desmic_kit.poly import PolyRing
from desmic_kit.projgeom import LineP3, ProjPoint
from desmic_kit.scalars import I, Mod, QI, sqrt_minus_one
from desmic_kit.scan import HAVE_FAST, run_scan
from desmic_kit.surfaces import desmic_lines_16


def coord_point(j):
    return ProjPoint([1 if k == j else 0 for k in range(4)])


# -- nets and the Montesano condition ---------------------------------------

def test_montesano_determinant_gives_the_plucker_cubic():
    det = lc.complex_cubic_from_net(lc.standard_net())
    ci = lc.CompleteIntersection35.plucker()
    pl = lc.plucker_forms_in_ab()
    ring8 = pl[0].ring
    cubic_ab = ci.cubic.poly.subst(dict(zip(lc.PLUCKER_NAMES, pl)), ring8)
    ok, lam = lc._proportional_polys(det, cubic_ab)
    assert ok and lam


def test_three_desmic_nets_cut_the_same_complex():
    scalars = lc.nets_define_same_complex()
    assert set(scalars) == {"n1", "n2", "n3"}
    assert all(scalars.values())


def test_montesano_matrix_rows_for_the_standard_net():
    # rows are the printed symmetric functions of the spanning points
    a = [Fraction(v) for v in (2, 3, 5, 7)]
    b = [Fraction(v) for v in (1, 4, 6, 9)]
    m = lc.montesano_matrix(lc.standard_net(), a, b)
    assert m[0] == [a[0] * a[1] + a[2] * a[3], a[0] * a[2] + a[1] * a[3],
                    a[0] * a[3] + a[1] * a[2]]
    assert m[1] == [b[0] * b[1] + b[2] * b[3], b[0] * b[2] + b[1] * b[3],
                    b[0] * b[3] + b[1] * b[2]]
    assert m[2][0] == (a[0] * b[1] + a[1] * b[0] + a[2] * b[3] + a[3] * b[2])
    assert m[2][1] == (a[0] * b[2] + a[1] * b[3] + a[2] * b[0] + a[3] * b[1])
    assert m[2][2] == (a[0] * b[3] + a[1] * b[2] + a[2] * b[1] + a[3] * b[0])


def test_montesano_tetrahedron_edges_and_base_lines():
    net = lc.standard_net()
    verts = [coord_point(j) for j in range(4)]
    for a in range(4):
        for b in range(a + 1, 4):
            assert lc.montesano_condition(net, LineP3(verts[a], verts[b]))
    for line in desmic_lines_16():
        assert lc.montesano_condition(net, line)


def test_montesano_random_line_is_outside():
    net = lc.standard_net()
    line = LineP3(ProjPoint([3, 1, 4, 1]), ProjPoint([5, 9, 2, 6]))
    assert not lc.montesano_condition(net, line)


def test_montesano_rejects_degenerate_net():
    ring = lc.P3_RING
    x, y, z, w = ring.gens()
    net = (x * y, x * y + x * y, z * w)
    line = LineP3(coord_point(0), coord_point(1))
    with pytest.raises(ValueError):
        lc.montesano_condition(net, line)


# -- coordinate systems ------------------------------------------------------

def test_klein_change_matches_both_equations():
    lam_q, lam_c = lc.klein_change_consistent()
    assert lam_q == QI(4)
    assert lam_c


def test_node_lists_correspond_under_the_coordinate_change():
    assert lc.klein_plucker_node_bijection()


# -- node inventory -----------------------------------------------------------

def test_node_inventory_plucker_rationals():
    inv = lc.verify_node_inventory(lc.CompleteIntersection35.plucker())
    assert inv.all_nodes
    assert len(inv.sing1) == 18 and len(inv.sing2) == 16


def test_node_inventory_klein_gaussian():
    inv = lc.verify_node_inventory(lc.CompleteIntersection35.klein())
    assert inv.all_nodes
    # every report carries a rank-4 restricted quadratic form
    for r in inv.reports1 + inv.reports2:
        assert r.jacobian_rank == 1 and r.restricted_rank == 4


def test_node_inventory_prime_fields():
    for p in (13, 17):
        ci = lc.CompleteIntersection35.klein(i=sqrt_minus_one(p),
                                             one=Mod(1, p))
        assert lc.verify_node_inventory(ci).all_nodes


def test_first_points_of_each_family_are_nodes():
    ci = lc.CompleteIntersection35.plucker()
    assert lc.ci_node_report(ci, (1, 0, 0, 0, 0, 0)).is_node
    assert lc.ci_node_report(ci, (1, 1, 1, 0, 0, 0)).is_node


def test_off_list_point_fails_the_node_test():
    ci = lc.CompleteIntersection35.plucker()
    # a smooth point of the complex: both equations vanish, Jacobian rank 2
    rep = lc.ci_node_report(ci, (0, 1, 0, 0, 0, 1))
    assert rep.on_both and rep.jacobian_rank == 2 and not rep.is_node


# -- plane inventory ----------------------------------------------------------

def test_plane_inventory_plucker():
    inv = lc.verify_plane_inventory(lc.CompleteIntersection35.plucker())
    assert inv.configuration_ok
    assert len(inv.planes) == 24


def test_plane_inventory_klein():
    inv = lc.verify_plane_inventory(lc.CompleteIntersection35.klein())
    assert inv.configuration_ok
    # each plane holds 3+4 = 7 singular points
    assert all(c1 + c2 == 7 for c1, c2 in inv.per_plane)


def test_klein_planes_biject_with_the_printed_labels():
    labels = lc.klein_plane_labels()
    assert len(labels) == 24
    assert sorted(lab for kind, lab in labels) == sorted(
        lc.ALPHA_LABELS + lc.BETA_LABELS)


def test_incidence_coset_example():
    out = lc.incidence_coset_example()
    assert out["labels"] == ["(13)", "(132)", "(143)", "(1432)"]
    assert out["is_left_coset"] or out["is_right_coset"]


# -- symmetry group -----------------------------------------------------------

def test_monomial_symmetry_group():
    rep = lc.monomial_symmetry_group()
    assert rep.order == 1152
    assert rep.node_orbit_sizes == [16, 18]
    assert rep.plane_orbit_count == 1
    assert rep.has_block_swap
    assert rep.closed


# -- scans over prime fields --------------------------------------------------

def test_scan_counts_34_and_18():
    for p in (13, 17):
        count, pts = lc.scan_singular_points(p)
        assert count == 34 and len(set(pts)) == 34
        count_u, pts_u = lc.scan_singular_points(p, unit_variant=True)
        assert count_u == 18 and len(set(pts_u)) == 18


def test_scan_kernel_agrees_with_fallback():
    p = 13
    c = sqrt_minus_one(p).v
    pure = run_scan(p, c, force_pure=True)
    assert run_scan(p, c, force_pure=True) == pure  # idempotent
    assert run_scan(p, c, force_pure=True, partitions=3) == pure
    if HAVE_FAST:
        assert run_scan(p, c) == pure


def test_scan_finds_exactly_the_printed_points_mod_13():
    p = 13
    one = Mod(1, p)
    i = sqrt_minus_one(p)
    printed = set()
    for pt in lc.klein_nodes_18(i) + lc.klein_nodes_16(i):
        printed.add(tuple(c.v for c in lc._normalize_tuple(
            lc._lift_point(one, pt))))
    _, pts = lc.scan_singular_points(p)
    assert set(pts) == printed


@pytest.mark.skipif(not HAVE_FAST, reason="compiled kernel not built")
def test_scan_count_stable_at_29():
    count, _ = lc.scan_singular_points(29)
    assert count == 34


# -- projection and rationality ----------------------------------------------

def test_projected_quartic_identities_nodes_and_lines():
    rep = lc.project_to_quartic_threefold()
    assert rep["rewrite_identity"]
    assert rep["elimination_identity"]
    assert rep["nodes_ok"] and len(rep["node_flags"]) == 17
    assert rep["singular_lines_ok"]


def test_rationality_planes():
    assert lc.rationality_planes_check()


# -- the 35-nodal cubic -------------------------------------------------------

def test_segre_change_of_variables():
    out = lc.segre_isomorphism_check()
    assert out["sum_zero"]
    assert out["lambda"] == QI(24)
    assert out["nodes_mod_p"] == 35
