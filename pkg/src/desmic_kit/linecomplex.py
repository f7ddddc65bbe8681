"""The cubic complex of lines attached to a net of quadrics in P^3.

The complex is a complete intersection of the Grassmannian quadric with a
cubic hypersurface in P^5.  Two coordinate systems are supported: Plucker
coordinates (x1..x6) = (p12,p13,p14,p23,p24,p34), and Klein coordinates
(x1,x2,x3,y1,y2,y3) in which the pair of equations becomes

    x1^2+x2^2+x3^2+y1^2+y2^2+y3^2 = 0,   x1*x2*x3 + i*y1*y2*y3 = 0.

The module verifies the 34 singular points (all ordinary nodes), the 24
planes and their incidence configuration (24_{3+4}, 18_4+16_6), the monomial
symmetry group of order 1152, the projected quartic threefold in P^4 with 17
nodes and 4 singular lines, and the identification with the associated
variety of a 35-nodal cubic in P^6.
"""

from fractions import Fraction
from itertools import permutations, product

from .matrices import matrix_rank, nullspace, rref
from .poly import PolyRing
from .scalars import I, Mod, QI, from_int, one_like, sqrt_minus_one
from .surfaces import Form, _localize_split, eval_coords, node_check


# ---------------------------------------------------------------------------
# nets of quadrics and the Montesano condition
# ---------------------------------------------------------------------------

P3_RING = PolyRing(["x", "y", "z", "w"])


def standard_net(ring=None):
    """The net t1*(xy+zw) + t2*(xz+yw) + t3*(xw+yz)."""
    if ring is None:
        ring = P3_RING
    x, y, z, w = ring.gens()
    return (x * y + z * w, x * z + y * w, x * w + y * z)


def net_n1(ring=None):
    """Net spanned by (x-y)(z+w), (x-z)(y+w), (x-w)(y+z)."""
    if ring is None:
        ring = P3_RING
    x, y, z, w = ring.gens()
    return ((x - y) * (z + w), (x - z) * (y + w), (x - w) * (y + z))


def net_n2(ring=None):
    """Net spanned by (x-y)(z-w), (x-z)(y-w), (x+w)(y+z)."""
    if ring is None:
        ring = P3_RING
    x, y, z, w = ring.gens()
    return ((x - y) * (z - w), (x - z) * (y - w), (x + w) * (y + z))


def net_n3(ring=None):
    """Net spanned by x^2-y^2, x^2-z^2, x^2-w^2."""
    if ring is None:
        ring = P3_RING
    x, y, z, w = ring.gens()
    return (x * x - y * y, x * x - z * z, x * x - w * w)


def _quadric_coeff_vectors(net):
    ring = net[0].ring
    monos = sorted(set(m for q in net for m in q.coeffs))
    zero = ring.one * 0
    return [[q.coeffs.get(m, zero) for m in monos] for q in net]


def _det3(m):
    return (m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
            - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]))


def montesano_matrix(net, a, b):
    """3x3 matrix whose determinant detects lines on quadrics of the net.

    Rows: values of the three quadrics at a, at b, and the polar values
    Q(a+b) - Q(a) - Q(b).  For the standard net this reproduces the classical
    matrix with rows (a1a2+a3a4, a1a3+a2a4, a1a4+a2a3), etc.
    """
    names = net[0].ring.varnames

    def val(q, pt):
        return eval_coords(q, names, list(pt)).constant_coeff()

    ab = [ai + bi for ai, bi in zip(a, b)]
    row_a = [val(q, a) for q in net]
    row_b = [val(q, b) for q in net]
    row_c = [val(q, ab) - ra - rb for q, ra, rb in zip(net, row_a, row_b)]
    return [row_a, row_b, row_c]


def montesano_condition(net, line):
    """True iff the line lies on some quadric of the net (det of the 3x3
    restriction matrix vanishes).  Raises on a degenerate net."""
    if len(net) != 3:
        raise ValueError("net must consist of three quadrics")
    if matrix_rank(_quadric_coeff_vectors(net)) != 3:
        raise ValueError("degenerate net")
    one = one_like(net[0].ring.one)
    a = [c if not isinstance(c, int) else from_int(one, c) for c in line.p.coords]
    b = [c if not isinstance(c, int) else from_int(one, c) for c in line.q.coords]
    return not _det3(montesano_matrix(net, a, b))


def complex_cubic_from_net(net):
    """Equation of the line complex of the net, as a polynomial in the eight
    coordinates a1..a4, b1..b4 of a spanning pair of points.

    Substitutes the parametric line (a1 u + b1 v, ..., a4 u + b4 v) into the
    net and returns the determinant of the 3x3 coefficient matrix.
    """
    ring8 = PolyRing(["a1", "a2", "a3", "a4", "b1", "b2", "b3", "b4"])
    gens = ring8.gens()
    a = gens[:4]
    b = gens[4:]
    names = net[0].ring.varnames

    def sub(q, vec):
        return q.subst(dict(zip(names, vec)), ring8)

    row_a = [sub(q, a) for q in net]
    row_b = [sub(q, b) for q in net]
    ab = [ai + bi for ai, bi in zip(a, b)]
    row_c = [sub(q, ab) - ra - rb for q, ra, rb in zip(net, row_a, row_b)]
    return _det3([row_a, row_b, row_c])


def plucker_forms_in_ab():
    """The six Plucker coordinates as polynomials in a1..a4, b1..b4."""
    ring8 = PolyRing(["a1", "a2", "a3", "a4", "b1", "b2", "b3", "b4"])
    gens = ring8.gens()
    a = gens[:4]
    b = gens[4:]
    idx = ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3))
    return [a[i] * b[j] - a[j] * b[i] for i, j in idx]


def _proportional_polys(f, g):
    """(True, scalar) if f == scalar*g with scalar nonzero, else (False, None)."""
    if f.is_zero() or g.is_zero():
        return (f.is_zero() and g.is_zero(), None)
    m = g.monomials()[0]
    cg = g.coeffs[m]
    cf = f.coeffs.get(m)
    if cf is None:
        return False, None
    lam = cf / cg
    if f == g.scale(lam):
        return True, lam
    return False, None


def nets_define_same_complex():
    """Check that the three nets attached to the desmic pencil, and the
    standard net, all cut out the same cubic complex (equal equations up to a
    nonzero scalar, as polynomials in the spanning-pair coordinates).

    Returns a dict net-name -> scalar relative to the standard net's cubic,
    or raises if some pair fails to be proportional.
    """
    base = complex_cubic_from_net(standard_net())
    out = {}
    for name, net in (("n1", net_n1()), ("n2", net_n2()), ("n3", net_n3())):
        ok, lam = _proportional_polys(complex_cubic_from_net(net), base)
        if not ok:
            raise ValueError("net %s defines a different complex" % name)
        out[name] = lam
    return out


# ---------------------------------------------------------------------------
# the complete intersection in P^5
# ---------------------------------------------------------------------------

PLUCKER_NAMES = ("x1", "x2", "x3", "x4", "x5", "x6")
KLEIN_NAMES = ("x1", "x2", "x3", "y1", "y2", "y3")


def _field_i(one):
    """A designated square root of -1 in the field of `one`."""
    if isinstance(one, Mod):
        return sqrt_minus_one(one.p)
    if isinstance(one, QI):
        return I
    if isinstance(one, (int, Fraction)):
        return I
    raise ValueError("field lacks a designated square root of -1")


class CompleteIntersection35:
    """Quadric and cubic forms cutting the complex out of P^5."""

    def __init__(self, quadric, cubic, coords, i=None, cubic_coeff_is_i=True):
        assert quadric.degree == 2 and cubic.degree == 3
        assert len(quadric.coord_vars) == 6
        self.quadric = quadric
        self.cubic = cubic
        self.coords = coords
        self.char = quadric.char
        self.i = i
        self.cubic_coeff_is_i = cubic_coeff_is_i
        self.ring = quadric.ring
        self.one = quadric.ring.one

    @classmethod
    def plucker(cls, one=Fraction(1)):
        """x1*x6 - x2*x5 + x3*x4 = 0 and
        -x1*x2*x4 + x1*x3*x5 - x2*x3*x6 + x4*x5*x6 = 0
        in coordinates (x1..x6) = (p12,p13,p14,p23,p24,p34)."""
        ring = PolyRing(list(PLUCKER_NAMES), one)
        x1, x2, x3, x4, x5, x6 = ring.gens()
        q = x1 * x6 - x2 * x5 + x3 * x4
        c = -(x1 * x2 * x4) + x1 * x3 * x5 - x2 * x3 * x6 + x4 * x5 * x6
        return cls(Form(q), Form(c), "plucker")

    @classmethod
    def klein(cls, i=None, one=None, unit_variant=False):
        """Sum of the six squares, and x1*x2*x3 + i*y1*y2*y3 (or with
        coefficient 1 when unit_variant is set)."""
        if i is None:
            i = I if one is None else _field_i(one)
        if one is None:
            one = one_like(i)
        ring = PolyRing(list(KLEIN_NAMES), one)
        gens = ring.gens()
        q = ring.zero()
        for g in gens:
            q = q + g * g
        coeff = one if unit_variant else i
        c = gens[0] * gens[1] * gens[2] + (gens[3] * gens[4] * gens[5]).scale(coeff)
        return cls(Form(q), Form(c), "klein", i=i,
                   cubic_coeff_is_i=not unit_variant)


def klein_change_rows(i):
    """Matrix K with (Klein coords) = K * (Plucker coords)."""
    o = one_like(i)
    z = o * 0
    return [
        [o, z, z, z, z, o],
        [z, -o, z, z, o, z],
        [z, z, o, o, z, z],
        [-i, z, z, z, z, i],
        [z, i, z, z, i, z],
        [z, z, -i, i, z, z],
    ]


def klein_change_consistent(i=None):
    """Substituting the Klein linear forms into the Klein equations must
    reproduce the Plucker equations up to nonzero scalars.  Returns the two
    scalars."""
    if i is None:
        i = I
    one = one_like(i)
    ci_p = CompleteIntersection35.plucker(one)
    ci_k = CompleteIntersection35.klein(i=i, one=one)
    rows = klein_change_rows(i)
    ring = ci_p.ring
    gens = ring.gens()
    mapping = {}
    for k, name in enumerate(KLEIN_NAMES):
        f = ring.zero()
        for j in range(6):
            if rows[k][j]:
                f = f + gens[j].scale(rows[k][j])
        mapping[name] = f
    q_img = ci_k.quadric.poly.subst(mapping, ring)
    c_img = ci_k.cubic.poly.subst(mapping, ring)
    ok_q, lam_q = _proportional_polys(q_img, ci_p.quadric.poly)
    ok_c, lam_c = _proportional_polys(c_img, ci_p.cubic.poly)
    if not (ok_q and ok_c):
        raise ValueError("coordinate change does not match the equations")
    return lam_q, lam_c


# ---------------------------------------------------------------------------
# the 34 singular points
# ---------------------------------------------------------------------------

PLUCKER_NODES_18 = [
    (1, 0, 0, 0, 0, 0), (0, 1, 0, 0, 0, 0), (0, 0, 1, 0, 0, 0),
    (0, 0, 0, 1, 0, 0), (0, 0, 0, 0, 1, 0), (0, 0, 0, 0, 0, 1),
    (1, 1, 0, 0, 1, 1), (1, 1, 0, 0, -1, -1), (1, -1, 0, 0, 1, -1),
    (1, -1, 0, 0, -1, 1),
    (1, 0, 1, 1, 0, -1), (1, 0, 1, -1, 0, 1), (1, 0, -1, 1, 0, 1),
    (1, 0, -1, -1, 0, -1),
    (0, 1, 1, 1, 1, 0), (0, 1, 1, -1, -1, 0), (0, 1, -1, 1, -1, 0),
    (0, 1, -1, -1, 1, 0),
]

PLUCKER_NODES_16 = [
    (1, 1, 1, 0, 0, 0), (1, 1, -1, 0, 0, 0), (1, -1, 1, 0, 0, 0),
    (1, -1, -1, 0, 0, 0),
    (1, 0, 0, 1, 1, 0), (1, 0, 0, 1, -1, 0), (1, 0, 0, -1, 1, 0),
    (1, 0, 0, -1, -1, 0),
    (0, 1, 0, 1, 0, 1), (0, 1, 0, 1, 0, -1), (0, 1, 0, -1, 0, 1),
    (0, 1, 0, -1, 0, -1),
    (0, 0, 1, 0, 1, 1), (0, 0, 1, 0, 1, -1), (0, 0, 1, 0, -1, 1),
    (0, 0, 1, 0, -1, -1),
]


def klein_nodes_18(i=None):
    """The 18 singular points in Klein coordinates."""
    if i is None:
        i = I
    o = one_like(i)
    z = o * 0
    m = -i
    return [
        (o, z, z, m, z, z), (z, o, z, z, m, z), (z, z, o, z, z, m),
        (z, z, o, z, z, i), (z, o, z, z, i, z), (o, z, z, i, z, z),
        (o, z, z, z, i, z), (z, o, z, i, z, z), (z, o, z, m, z, z),
        (o, z, z, z, m, z), (z, z, o, m, z, z), (o, z, z, z, z, m),
        (o, z, z, z, z, i), (z, z, o, i, z, z), (z, z, o, z, i, z),
        (z, o, z, z, z, i), (z, o, z, z, z, m), (z, z, o, z, m, z),
    ]


def klein_nodes_16(i=None):
    """The 16 singular points [e1*i, e2*i, e3*i, s1, s2, s3] with the sign
    constraint e1*e2*e3 = s1*s2*s3, normalized so the first coordinate is i."""
    if i is None:
        i = I
    o = one_like(i)
    pts = []
    for e2, e3, s1, s2 in product((1, -1), repeat=4):
        s3 = e2 * e3 * s1 * s2
        pts.append((i, i * (o * e2), i * (o * e3),
                    o * s1, o * s2, o * s3))
    return pts


def _lift_point(one, pt):
    return tuple(from_int(one, c) if isinstance(c, int) else c for c in pt)


def _grad_values(form, pt):
    return [eval_coords(g, form.coord_vars, list(pt)).constant_coeff()
            for g in form.partials()]


class NodeReport:
    """Per-point data for the complete-intersection node test."""

    def __init__(self, point, on_both, jacobian_rank, tangent_lambda,
                 restricted_rank):
        self.point = point
        self.on_both = on_both
        self.jacobian_rank = jacobian_rank
        self.tangent_lambda = tangent_lambda
        self.restricted_rank = restricted_rank

    @property
    def is_node(self):
        return self.on_both and self.jacobian_rank == 1 \
            and self.restricted_rank == 4

    def __repr__(self):
        return ("NodeReport(point=%r, node=%r)" % (self.point, self.is_node))


def ci_node_report(ci, pt):
    """Ordinary-node test at a point of the complete intersection: both
    equations vanish, the 2x6 Jacobian has rank exactly 1, and the quadratic
    part of cubic - lambda*quadric restricted to the tangent space of the
    quadric has rank 4."""
    one = ci.one
    # scale the leading coordinate to 1 so the gradient ratio matches the
    # affine chart used below
    pt = _normalize_tuple(_lift_point(one, pt))
    on2 = ci.quadric.eval_coords(list(pt)).is_zero()
    on3 = ci.cubic.eval_coords(list(pt)).is_zero()
    g2 = _grad_values(ci.quadric, pt)
    g3 = _grad_values(ci.cubic, pt)
    jrank = matrix_rank([g2, g3])
    if not (on2 and on3) or jrank != 1:
        return NodeReport(pt, on2 and on3, jrank, None, 0)
    j = next(k for k, v in enumerate(g2) if v)
    lam = g3[j] / g2[j]
    assert all(b == lam * a for a, b in zip(g2, g3))

    split2, names, _ = _localize_split(ci.quadric, pt)
    split3, names3, _ = _localize_split(ci.cubic, pt)
    assert names == names3
    n = len(names)
    zero = one * 0

    def coeff(split, le):
        p = split.get(le)
        return zero if p is None else p.constant_coeff()

    # local equation g = F3 - lambda*F2 has no constant or linear part
    exps = set(split2) | set(split3)
    lin = [zero] * n
    q2 = {}
    for le in exps:
        c = coeff(split3, le) - lam * coeff(split2, le)
        d = sum(le)
        if d == 0:
            assert not c
        elif d == 1:
            assert not c
        elif d == 2 and c:
            q2[le] = c
        if d == 1:
            k = next(t for t, e in enumerate(le) if e)
            lin[k] = coeff(split2, le)
    assert any(lin), "quadric not smooth at the point"
    tangent = nullspace([lin], one)
    assert len(tangent) == n - 1

    def qval(v):
        total = zero
        for le, c in q2.items():
            t = c
            for vi, ei in zip(v, le):
                for _ in range(ei):
                    t = t * vi
            total = total + t
        return total

    m = len(tangent)
    gram = [[zero] * m for _ in range(m)]
    for a in range(m):
        gram[a][a] = qval(tangent[a]) + qval(tangent[a])
        for b in range(a + 1, m):
            vab = [x + y for x, y in zip(tangent[a], tangent[b])]
            gram[a][b] = gram[b][a] = \
                qval(vab) - qval(tangent[a]) - qval(tangent[b])
    return NodeReport(pt, True, 1, lam, matrix_rank(gram))


class NodeInventory:
    """The 34 singular points, partitioned 18 + 16, with node reports."""

    def __init__(self, sing1, sing2, reports1, reports2):
        assert len(sing1) == 18 and len(sing2) == 16
        self.sing1 = sing1
        self.sing2 = sing2
        self.reports1 = reports1
        self.reports2 = reports2

    @property
    def all_nodes(self):
        return all(r.is_node for r in self.reports1 + self.reports2)


def verify_node_inventory(ci):
    """Check the full printed list of 34 singular points in the coordinate
    system of `ci`; raises if any point fails a check."""
    if ci.coords == "plucker":
        pts1 = [_lift_point(ci.one, p) for p in PLUCKER_NODES_18]
        pts2 = [_lift_point(ci.one, p) for p in PLUCKER_NODES_16]
    else:
        pts1 = klein_nodes_18(ci.i)
        pts2 = klein_nodes_16(ci.i)
    reps1 = [ci_node_report(ci, p) for p in pts1]
    reps2 = [ci_node_report(ci, p) for p in pts2]
    for r in reps1 + reps2:
        if not r.is_node:
            raise ValueError("printed point fails the node test: %r" % (r,))
    return NodeInventory(pts1, pts2, reps1, reps2)


def _normalize_tuple(coords):
    lead = next(c for c in coords if c)
    return tuple(c / lead for c in coords)


def klein_plucker_node_bijection():
    """The coordinate change maps the 34 Plucker nodes bijectively onto the
    34 Klein nodes (up to scale)."""
    rows = klein_change_rows(I)
    imgs = set()
    for pt in PLUCKER_NODES_18 + PLUCKER_NODES_16:
        p = [QI(c) for c in pt]
        img = [sum((rows[k][j] * p[j] for j in range(6)), QI(0))
               for k in range(6)]
        imgs.add(_normalize_tuple(img))
    target = {_normalize_tuple(p) for p in klein_nodes_18() + klein_nodes_16()}
    return imgs == target and len(imgs) == 34


# ---------------------------------------------------------------------------
# the 24 planes and the incidence configuration
# ---------------------------------------------------------------------------

ALPHA_PLANES = [
    ((1, 0, 0, 0, 0, 0), (0, 1, 0, 0, 0, 0), (0, 0, 0, 1, 0, 0)),
    ((1, 0, 0, 0, 0, 0), (0, 0, 1, 0, 0, 0), (0, 0, 0, 0, 1, 0)),
    ((0, 1, 0, 0, 0, 0), (0, 0, 1, 0, 0, 0), (0, 0, 0, 0, 0, 1)),
    ((0, 0, 0, 1, 0, 0), (0, 0, 0, 0, 1, 0), (0, 0, 0, 0, 0, 1)),
    ((1, 1, 0, 1, 0, 0), (1, 0, 1, 0, 1, 0), (0, 1, -1, 0, 0, 1)),
    ((1, 1, 0, 1, 0, 0), (-1, 0, 1, 0, 1, 0), (0, -1, -1, 0, 0, 1)),
    ((1, 1, 0, -1, 0, 0), (1, 0, -1, 0, 1, 0), (0, 1, 1, 0, 0, 1)),
    ((1, 1, 0, -1, 0, 0), (-1, 0, -1, 0, 1, 0), (0, -1, 1, 0, 0, 1)),
    ((1, -1, 0, 1, 0, 0), (1, 0, -1, 0, 1, 0), (0, 1, -1, 0, 0, 1)),
    ((1, -1, 0, 1, 0, 0), (-1, 0, -1, 0, 1, 0), (0, -1, -1, 0, 0, 1)),
    ((1, -1, 0, -1, 0, 0), (1, 0, 1, 0, 1, 0), (0, 1, 1, 0, 0, 1)),
    ((1, -1, 0, -1, 0, 0), (-1, 0, 1, 0, 1, 0), (0, -1, 1, 0, 0, 1)),
]

BETA_PLANES = [
    ((1, 0, 0, 0, 0, 0), (0, 1, 0, 1, 0, 0), (0, 0, 1, 0, 1, 0)),
    ((1, 0, 0, 0, 0, 0), (0, 1, 0, -1, 0, 0), (0, 0, 1, 0, -1, 0)),
    ((0, 1, 0, 0, 0, 0), (1, 0, 0, 1, 0, 0), (0, 0, 1, 0, 0, -1)),
    ((0, 1, 0, 0, 0, 0), (1, 0, 0, -1, 0, 0), (0, 0, 1, 0, 0, 1)),
    ((0, 0, 1, 0, 0, 0), (1, 0, 0, 0, 1, 0), (0, 1, 0, 0, 0, 1)),
    ((0, 0, 1, 0, 0, 0), (1, 0, 0, 0, -1, 0), (0, 1, 0, 0, 0, -1)),
    ((0, 0, 0, 1, 0, 0), (1, 1, 0, 0, 0, 0), (0, 0, 0, 0, 1, 1)),
    ((0, 0, 0, 1, 0, 0), (1, -1, 0, 0, 0, 0), (0, 0, 0, 0, 1, -1)),
    ((0, 0, 0, 0, 1, 0), (1, 0, 1, 0, 0, 0), (0, 0, 0, 1, 0, -1)),
    ((0, 0, 0, 0, 1, 0), (1, 0, -1, 0, 0, 0), (0, 0, 0, 1, 0, 1)),
    ((0, 0, 0, 0, 0, 1), (0, 1, 1, 0, 0, 0), (0, 0, 0, 1, 1, 0)),
    ((0, 0, 0, 0, 0, 1), (0, 1, -1, 0, 0, 0), (0, 0, 0, 1, -1, 0)),
]

ALPHA_LABELS = ["(12)(34)", "(13)(24)", "(14)(23)", "1", "(142)", "(132)",
                "(123)", "(124)", "(143)", "(243)", "(234)", "(134)"]
BETA_LABELS = ["(1342)", "(1243)", "(1432)", "(1234)", "(1423)", "(1324)",
               "(12)", "(34)", "(24)", "(13)", "(23)", "(14)"]


def perm_from_cycles(text):
    """Permutation of {1,2,3,4} from disjoint-cycle notation, as the tuple
    (g(1),g(2),g(3),g(4))."""
    img = {k: k for k in (1, 2, 3, 4)}
    for part in text.replace(")", ")|").split("|"):
        part = part.strip().strip("()")
        if not part or part == "1":
            continue
        cyc = [int(ch) for ch in part]
        for a, b in zip(cyc, cyc[1:] + cyc[:1]):
            img[a] = b
    return tuple(img[k] for k in (1, 2, 3, 4))


def perm_compose(g, h):
    """(g o h)(x) = g(h(x))."""
    return tuple(g[h[x - 1] - 1] for x in (1, 2, 3, 4))


def perm_inverse(g):
    inv = [0] * 4
    for x in (1, 2, 3, 4):
        inv[g[x - 1] - 1] = x
    return tuple(inv)


class PlaneInP5:
    """Plane in P^5 cut by three independent linear forms (covectors)."""

    def __init__(self, covectors, one, label=None):
        self.covectors = [
            tuple(from_int(one, c) if isinstance(c, int) else c for c in cv)
            for cv in covectors]
        self.one = one
        self.label = label
        if matrix_rank([list(c) for c in self.covectors]) != 3:
            raise ValueError("covectors do not cut a plane")
        self.basis = nullspace([list(c) for c in self.covectors], one)
        assert len(self.basis) == 3

    def contains_point(self, pt):
        zero = self.one * 0
        for cv in self.covectors:
            if sum((a * b for a, b in zip(cv, pt)), zero):
                return False
        return True

    def canonical(self):
        r, _ = rref([list(c) for c in self.covectors])
        return tuple(tuple(row) for row in r)


def klein_plane_list(i=None):
    """The 24 planes V(x_k - eps_k*i*y_{sigma(k)}), eps1*eps2*eps3 = 1,
    enumerated over sigma in S3 (lexicographic) and the four sign vectors."""
    if i is None:
        i = I
    one = one_like(i)
    zero = one * 0
    planes = []
    for sigma in permutations((1, 2, 3)):
        for eps in ((1, 1, 1), (1, -1, -1), (-1, 1, -1), (-1, -1, 1)):
            covs = []
            for k in (1, 2, 3):
                cv = [zero] * 6
                cv[k - 1] = one
                cv[2 + sigma[k - 1]] = -(i * (one * eps[k - 1]))
                covs.append(tuple(cv))
            planes.append(PlaneInP5(covs, one,
                                    label=("sigma", sigma, "eps", eps)))
    return planes


def plucker_plane_list(one=Fraction(1)):
    """The printed alpha and beta planes with their permutation labels."""
    planes = []
    for covs, lab in zip(ALPHA_PLANES, ALPHA_LABELS):
        planes.append(PlaneInP5(covs, one, label=("alpha", lab)))
    for covs, lab in zip(BETA_PLANES, BETA_LABELS):
        planes.append(PlaneInP5(covs, one, label=("beta", lab)))
    return planes


def plane_contained(ci, plane):
    """Substitute a parametrization of the plane into both equations."""
    ring3 = PolyRing(["s", "t", "r"], ci.one)
    s, t, r = ring3.gens()
    mapping = {}
    for j, name in enumerate(ci.ring.varnames):
        mapping[name] = (s.scale(plane.basis[0][j]) + t.scale(plane.basis[1][j])
                         + r.scale(plane.basis[2][j]))
    return (ci.quadric.poly.subst(mapping, ring3).is_zero()
            and ci.cubic.poly.subst(mapping, ring3).is_zero())


class PlaneInventory:
    """24 planes with the node incidence matrix."""

    def __init__(self, planes, per_plane, per_node1, per_node2, incidence):
        self.planes = planes
        self.per_plane = per_plane
        self.per_node1 = per_node1
        self.per_node2 = per_node2
        self.incidence = incidence

    @property
    def configuration_ok(self):
        return (all(c == (3, 4) for c in self.per_plane)
                and all(c == 4 for c in self.per_node1)
                and all(c == 6 for c in self.per_node2))


def verify_plane_inventory(ci):
    """Containment of all 24 planes plus the incidence counts of the
    configuration (24_{3+4}, 18_4 + 16_6)."""
    if ci.coords == "plucker":
        planes = plucker_plane_list(ci.one)
        pts1 = [_lift_point(ci.one, p) for p in PLUCKER_NODES_18]
        pts2 = [_lift_point(ci.one, p) for p in PLUCKER_NODES_16]
    else:
        planes = klein_plane_list(ci.i)
        pts1 = klein_nodes_18(ci.i)
        pts2 = klein_nodes_16(ci.i)
    for pl in planes:
        if not plane_contained(ci, pl):
            raise ValueError("plane not contained in the complex: %r"
                             % (pl.label,))
    incidence = {}
    per_plane = []
    n1 = [0] * 18
    n2 = [0] * 16
    for pi, pl in enumerate(planes):
        c1 = c2 = 0
        for k, pt in enumerate(pts1):
            if pl.contains_point(pt):
                c1 += 1
                n1[k] += 1
                incidence[(pi, "s1", k)] = True
        for k, pt in enumerate(pts2):
            if pl.contains_point(pt):
                c2 += 1
                n2[k] += 1
                incidence[(pi, "s2", k)] = True
        per_plane.append((c1, c2))
    return PlaneInventory(planes, per_plane, n1, n2, incidence)


def klein_plane_labels():
    """Match each Klein plane with a printed alpha/beta plane through the
    coordinate change and return the permutation labels, in the order of
    klein_plane_list()."""
    rows = klein_change_rows(I)
    printed = plucker_plane_list(QI(1))
    by_canon = {pl.canonical(): pl.label for pl in printed}
    assert len(by_canon) == 24
    labels = []
    for pl in klein_plane_list():
        pulled = []
        for cv in pl.covectors:
            pulled.append([sum((cv[k] * rows[k][j] for k in range(6)), QI(0))
                           for j in range(6)])
        canon = PlaneInP5(pulled, QI(1)).canonical()
        labels.append(by_canon[canon])
    assert len(set(labels)) == 24
    return labels


def incidence_coset_example():
    """The point (i,0,0,0,0,1) in Klein coordinates lies in exactly four
    planes; their permutation labels form a single coset of the subgroup
    generated by (12) and (34) (left or right depending on the composition
    convention)."""
    pt = (I, QI(0), QI(0), QI(0), QI(0), QI(1))
    planes = klein_plane_list()
    labels = klein_plane_labels()
    hit = [lab for pl, lab in zip(planes, labels) if pl.contains_point(pt)]
    perms = {perm_from_cycles(lab[1]) for lab in hit}
    h1 = {perm_from_cycles(s) for s in ("1", "(12)", "(34)", "(12)(34)")}
    g = next(iter(perms))
    left = {perm_compose(perm_inverse(g), h) for h in perms}
    right = {perm_compose(h, perm_inverse(g)) for h in perms}
    return {
        "labels": sorted(lab[1] for lab in hit),
        "is_left_coset": left == h1,
        "is_right_coset": right == h1,
    }


# ---------------------------------------------------------------------------
# the monomial symmetry group
# ---------------------------------------------------------------------------

class SymmetryReport:
    def __init__(self, order, node_orbit_sizes, plane_orbit_count,
                 has_block_swap, closed, elements):
        self.order = order
        self.node_orbit_sizes = node_orbit_sizes
        self.plane_orbit_count = plane_orbit_count
        self.has_block_swap = has_block_swap
        self.closed = closed
        self.elements = elements


def _canonical_element(pi, exps):
    base = exps[0]
    return (pi, tuple((e - base) % 4 for e in exps))


def _compose_elements(g, h):
    """Matrix product M_g * M_h acting on points as p -> M p with
    (M p)_j = i^{e_j} p_{pi(j)}."""
    pig, eg = g
    pih, eh = h
    pi = tuple(pih[pig[j]] for j in range(6))
    exps = tuple((eg[j] + eh[pig[j]]) % 4 for j in range(6))
    return _canonical_element(pi, exps)


def _apply_element(el, coords):
    pi, exps = el
    out = []
    for j in range(6):
        c = coords[pi[j]]
        for _ in range(exps[j] % 4):
            c = c * I
        out.append(c)
    return tuple(out)


def _element_preserves(el, form):
    """Full symbolic check: form composed with the monomial matrix is a
    nonzero scalar multiple of form."""
    ring = form.ring
    gens = ring.gens()
    pi, exps = el
    unit = [QI(1), I, QI(-1), -I]
    mapping = {name: gens[pi[j]].scale(unit[exps[j] % 4])
               for j, name in enumerate(ring.varnames)}
    ok, _ = _proportional_polys(form.poly.subst(mapping, ring), form.poly)
    return ok


def monomial_symmetry_group(check_closure=True):
    """Exhaustive search over monomial 6x6 matrices with nonzero entries in
    {1, i, -1, -i} preserving both Klein equations up to scalar.

    For a permutation whose image of {1,2,3} is neither {1,2,3} nor {4,5,6},
    the transformed cubic has a monomial outside the support of the cubic
    with a unit coefficient, so no sign choice can work; such permutations
    are skipped after that support check.  Survivors get a full symbolic
    verification.  Reports projective order, node orbit sizes, and the
    number of plane orbits; a closure beyond 1152 is a failure signal.
    """
    elements = set()
    for pi in permutations(range(6)):
        img = frozenset(pi[k] for k in (0, 1, 2))
        if img == frozenset((0, 1, 2)):
            shift = 0
        elif img == frozenset((3, 4, 5)):
            shift = 2
        else:
            continue
        for exps in product(range(4), repeat=6):
            par = exps[0] % 2
            if any(e % 2 != par for e in exps):
                continue
            if (exps[0] + exps[1] + exps[2]
                    - exps[3] - exps[4] - exps[5] - shift) % 4:
                continue
            elements.add(_canonical_element(pi, exps))

    ci = CompleteIntersection35.klein()
    for el in elements:
        assert _element_preserves(el, ci.quadric)
        assert _element_preserves(el, ci.cubic)

    g0 = _canonical_element((3, 4, 5, 0, 1, 2), (2, 2, 2, 0, 0, 0))
    has_g0 = g0 in elements

    closed = True
    if check_closure:
        for g in elements:
            for h in elements:
                if _compose_elements(g, h) not in elements:
                    closed = False
                    break
            if not closed:
                break

    nodes = [tuple(QI(c) if isinstance(c, int) else c for c in pt)
             for pt in klein_nodes_18() + klein_nodes_16()]
    node_keys = [_normalize_tuple(p) for p in nodes]
    orbit_sizes = _orbit_sizes(node_keys, elements, _apply_point)

    planes = klein_plane_list()
    plane_keys = [_plane_key(pl.basis) for pl in planes]
    plane_orbits = len(_orbit_sizes(plane_keys, elements,
                                    _apply_plane_key))

    return SymmetryReport(len(elements), sorted(orbit_sizes),
                          plane_orbits, has_g0, closed, elements)


def _apply_point(el, key):
    return _normalize_tuple(_apply_element(el, key))


def _plane_key(basis):
    r, _ = rref([list(b) for b in basis])
    return tuple(tuple(row) for row in r)


def _apply_plane_key(el, key):
    imgs = [list(_apply_element(el, b)) for b in key]
    r, _ = rref(imgs)
    return tuple(tuple(row) for row in r)


def _orbit_sizes(keys, elements, action):
    todo = set(keys)
    sizes = []
    while todo:
        seed = todo.pop()
        orbit = {seed}
        frontier = [seed]
        while frontier:
            cur = frontier.pop()
            for el in elements:
                img = action(el, cur)
                if img not in orbit:
                    orbit.add(img)
                    frontier.append(img)
        assert orbit <= set(keys), "orbit leaves the verified set"
        todo -= orbit
        sizes.append(len(orbit))
    return sizes


# ---------------------------------------------------------------------------
# scanning over prime fields
# ---------------------------------------------------------------------------

def scan_singular_points(p, unit_variant=False, force_pure=False):
    """Exhaustive search of P^5(F_p) for points where both Klein equations
    vanish and the Jacobian has rank <= 1.  The cubic coefficient is a
    square root of -1 mod p, or 1 when unit_variant is set.

    Evidence-only: the scan certifies the count over F_p, not over the
    rationals.  Returns (count, sorted point list as int tuples)."""
    from .scan import run_scan
    if p % 4 != 1:
        raise ValueError("prime must be 1 mod 4")
    c = 1 if unit_variant else sqrt_minus_one(p).v
    pts = run_scan(p, c, force_pure=force_pure)
    return len(pts), pts


# ---------------------------------------------------------------------------
# projection to a quartic threefold in P^4
# ---------------------------------------------------------------------------

X_RING = PolyRing(["x1", "x2", "x3", "x4", "x5"])

PROJECTED_NODES_17 = [
    (1, 0, 0, 0, 0), (1, 0, 0, 1, 1), (1, 0, 0, -1, 1), (1, 1, 0, 0, 1),
    (1, -1, 0, 0, 1), (1, 0, 0, 1, -1), (1, 0, 0, -1, -1), (1, 1, 0, 0, -1),
    (1, -1, 0, 0, -1), (1, 0, 1, 1, 0), (1, 0, 1, -1, 0), (1, 1, 1, 0, 0),
    (1, -1, 1, 0, 0), (1, 0, -1, 1, 0), (1, 0, -1, -1, 0), (1, 1, -1, 0, 0),
    (1, -1, -1, 0, 0),
]

SINGULAR_LINES_4 = [
    ((1, 0, 0, 0, 0), (0, 1, 0, 0, 0), (0, 0, 0, 1, 0)),
    ((1, 0, 0, 0, 0), (0, 0, 1, 0, 0), (0, 0, 0, 0, 1)),
    ((1, 0, 0, 0, 0), (0, 1, 0, -1, 0), (0, 0, 1, 0, -1)),
    ((1, 0, 0, 0, 0), (0, 1, 0, 1, 0), (0, 0, 1, 0, 1)),
]


def projected_quartic():
    """The quartic threefold obtained by eliminating x6 from the cubic along
    the Grassmannian quadric."""
    x1, x2, x3, x4, x5 = X_RING.gens()
    return (x1 * x1 * x2 * x4 - x1 * x1 * x3 * x5 + x2 * x2 * x3 * x5
            - x2 * x3 * x3 * x4 + x3 * x4 * x4 * x5 - x2 * x4 * x5 * x5)


def _line_on_and_singular(form, covectors):
    one = form.ring.one
    covs = [[from_int(one, c) if isinstance(c, int) else c for c in cv]
            for cv in covectors]
    basis = nullspace(covs, one)
    assert len(basis) == 2
    ring2 = PolyRing(["s", "t"], one)
    s, t = ring2.gens()
    mapping = {name: s.scale(basis[0][j]) + t.scale(basis[1][j])
               for j, name in enumerate(form.ring.varnames)}
    if not form.poly.subst(mapping, ring2).is_zero():
        return False
    return all(g.subst(mapping, ring2).is_zero() for g in form.partials())


def project_to_quartic_threefold():
    """Eliminate x6 and verify: the rewriting identity, the elimination
    identity x1*cubic + X = (x4x5 - x2x3)*quadric, the 17 printed nodes, and
    the four printed singular lines."""
    ci = CompleteIntersection35.plucker()
    x1p, x2p, x3p, x4p, x5p, x6p = ci.ring.gens()
    X = projected_quartic()
    x1, x2, x3, x4, x5 = X_RING.gens()
    rewrite = (x1 * x1 * (x2 * x4 - x3 * x5)
               + (x2 * x3 - x4 * x5) * (x2 * x5 - x3 * x4))
    rewrite_ok = X == rewrite

    mapping = {n: ci.ring.var(n) for n in X_RING.varnames}
    x_in6 = X.subst(mapping, ci.ring)
    elim_ok = (x1p * ci.cubic.poly + x_in6
               == (x4p * x5p - x2p * x3p) * ci.quadric.poly)

    form = Form(X)
    node_flags = [node_check(form, pt) for pt in PROJECTED_NODES_17]
    line_flags = [_line_on_and_singular(form, covs)
                  for covs in SINGULAR_LINES_4]
    return {
        "quartic": X,
        "rewrite_identity": rewrite_ok,
        "elimination_identity": elim_ok,
        "nodes_ok": all(node_flags),
        "node_flags": node_flags,
        "singular_lines_ok": all(line_flags),
    }


RATIONALITY_PLANES = [
    ((0, 1, 0, 0, 0), (0, 0, 1, 0, 0)),
    ((0, 0, 0, 1, 0), (0, 0, 0, 0, 1)),
    ((1, -1, 0, 1, 0), (1, 0, -1, 0, 1)),
]

RATIONALITY_INTERSECTIONS = {
    (0, 1): (1, 0, 0, 0, 0),
    (1, 2): (1, 1, 1, 0, 0),
    (2, 0): (1, 0, 0, -1, -1),
}


def rationality_planes_check():
    """The three planes used in the rationality argument lie on the quartic
    threefold and meet pairwise in the printed points."""
    X = projected_quartic()
    one = X.ring.one
    ring3 = PolyRing(["s", "t", "r"], one)
    s, t, r = ring3.gens()
    bases = []
    for covs in RATIONALITY_PLANES:
        rows = [[from_int(one, c) for c in cv] for cv in covs]
        basis = nullspace(rows, one)
        assert len(basis) == 3
        bases.append(basis)
        mapping = {name: (s.scale(basis[0][j]) + t.scale(basis[1][j])
                          + r.scale(basis[2][j]))
                   for j, name in enumerate(X.ring.varnames)}
        if not X.subst(mapping, ring3).is_zero():
            return False
    for (a, b), printed in RATIONALITY_INTERSECTIONS.items():
        rows = [[from_int(one, c) for c in cv]
                for cv in RATIONALITY_PLANES[a] + RATIONALITY_PLANES[b]]
        ker = nullspace(rows, one)
        if len(ker) != 1:
            return False
        if _normalize_tuple(ker[0]) != _normalize_tuple(
                [from_int(one, c) for c in printed]):
            return False
    return True


# ---------------------------------------------------------------------------
# the 35-nodal cubic in P^6
# ---------------------------------------------------------------------------

def cubic_sevenfold(one=None, i=None):
    """x0*(x1^2+...+x6^2) + x1*x2*x3 + i*x4*x5*x6, the cubic in P^6 whose
    associated variety at [1,0,...,0] is the Klein-form complex."""
    if i is None:
        i = I if one is None else _field_i(one)
    if one is None:
        one = one_like(i)
    ring = PolyRing(["x0", "x1", "x2", "x3", "x4", "x5", "x6"], one)
    g = ring.gens()
    q = ring.zero()
    for k in range(1, 7):
        q = q + g[k] * g[k]
    return Form(g[0] * q + g[1] * g[2] * g[3]
                + (g[4] * g[5] * g[6]).scale(i))


def segre_t_forms(ring):
    """The eight printed linear forms identifying the cubic with the Segre
    cubic in P^6."""
    x0, x1, x2, x3, x4, x5, x6 = ring.gens()
    i = _field_i(ring.one)

    def sc(p, c):
        return p.scale(ring.one * c) if isinstance(c, int) else p.scale(c)

    t0 = sc(x0, 2) + x1 - x2 - x3
    t1 = sc(x0, 2) - x1 + x2 - x3
    t2 = sc(x0, 2) - x1 - x2 + x3
    t3 = sc(x0, 2) + x1 + x2 + x3
    t4 = sc(x0, -2) - sc(x4 + x5 + x6, i)
    t5 = sc(x0, -2) + sc(x4 + x5 - x6, i)
    t6 = sc(x0, -2) + sc(x4 - x5 + x6, i)
    t7 = sc(x0, -2) + sc(-x4 + x5 + x6, i)
    return [t0, t1, t2, t3, t4, t5, t6, t7]


def segre_isomorphism_check(scan_prime=13):
    """The printed linear change takes the cubic to the Segre cubic: the sum
    of the eight forms is zero and the sum of their cubes is one nonzero
    scalar multiple of the cubic.  Also verifies, over F_p, that the 35
    candidate singular points (34 lifted from the complex plus the cone
    point) are distinct ordinary nodes of the cubic."""
    f = cubic_sevenfold()
    ring = f.ring
    ts = segre_t_forms(ring)
    total = ring.zero()
    cubes = ring.zero()
    for t in ts:
        total = total + t
        cubes = cubes + t * t * t
    sum_zero = total.is_zero()
    ok, lam = _proportional_polys(cubes, f.poly)
    if not (sum_zero and ok and lam):
        raise ValueError("printed change of variables fails")

    p = scan_prime
    one = Mod(1, p)
    ip = sqrt_minus_one(p)
    ci = CompleteIntersection35.klein(i=ip, one=one)
    inv = verify_node_inventory(ci)
    fp = cubic_sevenfold(one=one, i=ip)
    seen = set()
    for rep in inv.reports1 + inv.reports2:
        cand = (-rep.tangent_lambda,) + tuple(rep.point)
        if not node_check(fp, cand):
            raise ValueError("lifted point is not a node: %r" % (cand,))
        seen.add(_normalize_tuple(cand))
    cone = (one,) + (one * 0,) * 6
    if not node_check(fp, cone):
        raise ValueError("cone point is not a node")
    seen.add(_normalize_tuple(cone))
    return {"sum_zero": sum_zero, "lambda": lam,
            "nodes_mod_p": len(seen), "prime": p}
