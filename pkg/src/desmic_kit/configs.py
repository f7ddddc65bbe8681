"""Incidence configurations and curve systems.

Covers the abstract side of the toolkit: the Reye configuration and its
avatars, coset and determinant configurations, the projective plane over
the four-element field, Sylvester's duads/synthemes/totals, the 42-curve
system with its fibration tables, and a JSON loader for dual-graph data
(curve systems with intersection matrices, fibers and divisors).
"""

from fractions import Fraction
from itertools import combinations, permutations
import json
import os

from .linecomplex import (PLUCKER_NODES_16, PLUCKER_NODES_18,
                          perm_compose, perm_from_cycles,
                          plucker_plane_list)
from .matrices import matrix_rank
from .projgeom import ProjPoint
from .scalars import F4, F4_ELEMENTS, W
from .surfaces import DESMIC_SINGULAR_12, desmic_lines_16

DATA_DIR = os.path.join(os.path.dirname(__file__), "data")


def data_path(name, data_dir=None):
    return os.path.join(data_dir or DATA_DIR, name)


# ---------------------------------------------------------------------------
# abstract configurations
# ---------------------------------------------------------------------------

class AbstractConfig:
    """A finite incidence structure of type (a_c, b_d): a points each lying
    in exactly c blocks, b blocks each containing exactly d points."""

    def __init__(self, points, blocks, incidence, name=None):
        self.points = list(points)
        self.blocks = list(blocks)
        self.name = name
        pset, bset = set(self.points), set(self.blocks)
        assert len(pset) == len(self.points), "duplicate point labels"
        assert len(bset) == len(self.blocks), "duplicate block labels"
        self.incidence = frozenset(incidence)
        self._blocks_of = {p: set() for p in self.points}
        self._points_of = {b: set() for b in self.blocks}
        for p, b in self.incidence:
            assert p in pset, "unknown point %r" % (p,)
            assert b in bset, "unknown block %r" % (b,)
            self._blocks_of[p].add(b)
            self._points_of[b].add(p)
        degs = {len(s) for s in self._blocks_of.values()}
        sizes = {len(s) for s in self._points_of.values()}
        assert len(degs) == 1, "point degrees not uniform: %s" % degs
        assert len(sizes) == 1, "block sizes not uniform: %s" % sizes
        self.c = degs.pop()
        self.d = sizes.pop()

    @classmethod
    def from_blocks(cls, points, block_sets, name=None):
        """Build from a list of point sets; blocks are labeled 0..n-1."""
        blocks = list(range(len(block_sets)))
        inc = {(p, b) for b, s in enumerate(block_sets) for p in s}
        return cls(points, blocks, inc, name=name)

    @property
    def type_signature(self):
        return ((len(self.points), self.c), (len(self.blocks), self.d))

    def blocks_of(self, p):
        return frozenset(self._blocks_of[p])

    def points_of(self, b):
        return frozenset(self._points_of[b])

    def __repr__(self):
        (a, c), (b, d) = self.type_signature
        return "AbstractConfig(%s: (%d_%d, %d_%d))" % (
            self.name or "?", a, c, b, d)


def _codegrees(cfg):
    """For each pair of points, the number of blocks containing both."""
    out = {}
    for p, q in combinations(cfg.points, 2):
        n = len(cfg._blocks_of[p] & cfg._blocks_of[q])
        out[(p, q)] = out[(q, p)] = n
    return out


def _refined_colors(cfg):
    """Stable coloring of points and blocks by iterated neighborhoods.

    The colors are canonical (built from nested tuples only), so they are
    directly comparable between two configurations.
    """
    pcol = {p: ("P",) for p in cfg.points}
    bcol = {b: ("B",) for b in cfg.blocks}
    while True:
        npcol = {p: (pcol[p], tuple(sorted(bcol[b]
                                           for b in cfg._blocks_of[p])))
                 for p in cfg.points}
        nbcol = {b: (bcol[b], tuple(sorted(pcol[p]
                                           for p in cfg._points_of[b])))
                 for b in cfg.blocks}
        stable = (len(set(npcol.values())) == len(set(pcol.values()))
                  and len(set(nbcol.values())) == len(set(bcol.values())))
        pcol, bcol = npcol, nbcol
        if stable:
            return pcol, bcol


def _check_witness(A, B, pmap, bmap):
    if set(pmap) != set(A.points) or set(pmap.values()) != set(B.points):
        return False
    if len(pmap) != len(set(pmap.values())):
        return False
    if set(bmap) != set(A.blocks) or set(bmap.values()) != set(B.blocks):
        return False
    if len(bmap) != len(set(bmap.values())):
        return False
    return {(pmap[p], bmap[b]) for p, b in A.incidence} == B.incidence


def _isomorphism_search(A, B, seed=None):
    """Backtracking point-map search; returns (pmap, bmap) or None.

    seed is an optional list of forced (point of A, point of B) pairs,
    used for automorphism questions.
    """
    if A.type_signature != B.type_signature:
        raise ValueError("configuration type mismatch: %s vs %s"
                         % (A.type_signature, B.type_signature))
    pcolA, bcolA = _refined_colors(A)
    pcolB, bcolB = _refined_colors(B)

    def hist(col):
        h = {}
        for c in col.values():
            h[c] = h.get(c, 0) + 1
        return h

    if hist(pcolA) != hist(pcolB) or hist(bcolA) != hist(bcolB):
        return None
    codA, codB = _codegrees(A), _codegrees(B)

    seed = list(seed or [])
    for p, q in seed:
        if pcolA[p] != pcolB[q]:
            return None

    # assign rarest colors first, then points adjacent to assigned ones
    ha = hist(pcolA)
    free = [p for p in A.points if p not in {s[0] for s in seed}]
    order = [s[0] for s in seed] + sorted(
        free, key=lambda p: (ha[pcolA[p]], repr(p)))
    forced = dict(seed)
    used = set(forced.values())
    assign = dict(forced)

    by_pointset = {frozenset(B._points_of[b]): b for b in B.blocks}

    def block_map_for(pmap):
        """Derive the block map from a point map, or None if some block
        image is not a block (codegree consistency alone does not force
        block preservation)."""
        bmap = {}
        for b in A.blocks:
            s = frozenset(pmap[p] for p in A._points_of[b])
            if s not in by_pointset:
                return None
            bmap[b] = by_pointset[s]
        if len(set(bmap.values())) != len(A.blocks):
            return None
        return bmap

    def extend(k):
        if k == len(order):
            yield dict(assign)
            return
        p = order[k]
        if p in forced:
            yield from extend(k + 1)
            return
        for q in B.points:
            if q in used or pcolB[q] != pcolA[p]:
                continue
            ok = all(codA[(p, p2)] == codB[(q, q2)]
                     for p2, q2 in assign.items() if p2 != p)
            if not ok:
                continue
            assign[p] = q
            used.add(q)
            yield from extend(k + 1)
            del assign[p]
            used.discard(q)

    # seeds count as already assigned for the codegree checks
    for p, q in seed:
        assign[p] = q
    for pmap in extend(0):
        bmap = block_map_for(pmap)
        if bmap is None:
            continue
        if _check_witness(A, B, pmap, bmap):
            return pmap, bmap
    return None


def config_isomorphic(A, B):
    """An explicit isomorphism (point map, block map) between two
    configurations, or None when an exhaustive search rules one out.
    Raises ValueError when the type signatures differ."""
    return _isomorphism_search(A, B)


def automorphism_sending(cfg, p, q):
    """An automorphism of cfg taking point p to point q, or None."""
    return _isomorphism_search(cfg, cfg, seed=[(p, q)])


def point_transitive(cfg):
    """Whether the automorphism group acts transitively on points."""
    base = cfg.points[0]
    return all(automorphism_sending(cfg, base, q) is not None
               for q in cfg.points[1:])


# ---------------------------------------------------------------------------
# the Reye configuration and its geometric/abstract avatars
# ---------------------------------------------------------------------------

def _collinear(p, q, r):
    return matrix_rank([[Fraction(v) for v in row]
                        for row in (p, q, r)]) <= 2


def reye_config():
    """(12_4, 16_3) from the cube model: 8 vertices, the center, and the
    3 points at infinity of the edge directions; 12 edges + 4 diagonals."""
    vertices = [(1, sx, sy, sz) for sx in (1, -1) for sy in (1, -1)
                for sz in (1, -1)]
    center = (1, 0, 0, 0)
    infinity = [(0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1)]
    points = vertices + [center] + infinity
    lines = set()
    for p, q in combinations(points, 2):
        on = frozenset(r for r in points if _collinear(p, q, r))
        if len(on) == 3:
            lines.add(on)
    assert len(lines) == 16
    inc = {(p, b) for b in lines for p in b}
    return AbstractConfig(points, sorted(lines, key=sorted), inc,
                          name="reye")


def desmic_surface_config():
    """Incidence of the 12 singular points of the desmic quartic with the
    16 lines common to the pencil."""
    nodes = [tuple(p) for p in DESMIC_SINGULAR_12]
    pts = [ProjPoint(list(p)) for p in nodes]
    block_sets = []
    for ln in desmic_lines_16():
        block_sets.append([n for n, pt in zip(nodes, pts)
                           if ln.contains(pt)])
    cfg = AbstractConfig.from_blocks(nodes, block_sets, name="desmic")
    assert cfg.type_signature == ((12, 4), (16, 3))
    return cfg


def kummer_abstract_config(system=None):
    """(12_4, 16_3) read off a 28-curve Kummer-style system: the twelve
    disjoint curves as points, the sixteen exceptional curves as blocks,
    incident when the curves meet."""
    cs = system or kummer_char0_system()
    pts = [c for c in cs.ids if not c.startswith("T")]
    blocks = [c for c in cs.ids if c.startswith("T")]
    assert len(pts) == 12 and len(blocks) == 16
    inc = {(p, b) for p in pts for b in blocks if cs.pair(p, b) == 1}
    return AbstractConfig(pts, blocks, inc, name="kummer-28")


# ---------------------------------------------------------------------------
# coset and determinant configurations
# ---------------------------------------------------------------------------

def _s4():
    return sorted(permutations((1, 2, 3, 4)))


def _subgroup(generators):
    elems = {(1, 2, 3, 4)}
    frontier = list(elems)
    while frontier:
        g = frontier.pop()
        for h in generators:
            gh = perm_compose(g, h)
            if gh not in elems:
                elems.add(gh)
                frontier.append(gh)
    return elems


COSET_SUBGROUP_GENERATORS = [
    [perm_from_cycles("(12)"), perm_from_cycles("(34)")],
    [perm_from_cycles("(13)"), perm_from_cycles("(24)")],
    [perm_from_cycles("(14)"), perm_from_cycles("(23)")],
]


def coset_config():
    """(24_3, 18_4): the 24 permutations of four letters against the 18
    cosets of the three order-4 subgroups generated by pairs of disjoint
    transpositions.  The coset side is fixed so that the quadruple
    {(143),(132),(1432),(13)} is one block."""
    elements = _s4()
    marker = frozenset(perm_from_cycles(t)
                       for t in ["(143)", "(132)", "(1432)", "(13)"])
    for side in ("right", "left"):
        blocks = set()
        for gens in COSET_SUBGROUP_GENERATORS:
            h = _subgroup(gens)
            for g in elements:
                if side == "right":
                    blocks.add(frozenset(perm_compose(x, g) for x in h))
                else:
                    blocks.add(frozenset(perm_compose(g, x) for x in h))
        if marker in blocks:
            inc = {(p, b) for b in blocks for p in b}
            cfg = AbstractConfig(elements, sorted(blocks, key=sorted),
                                 inc, name="cosets")
            assert cfg.type_signature == ((24, 3), (18, 4))
            return cfg
    raise AssertionError("printed coset quadruple not found on either side")


def plane_node_config(family):
    """Incidence of the 24 planes on the singular complex with one family
    of its singular points: family 1 (18 points, 3 per plane) or family 2
    (16 points, 4 per plane)."""
    assert family in (1, 2)
    one = Fraction(1)
    planes = plucker_plane_list(one)
    nodes = PLUCKER_NODES_18 if family == 1 else PLUCKER_NODES_16
    pts = list(range(len(planes)))
    inc = set()
    for k, pl in enumerate(planes):
        for nd in nodes:
            if pl.contains_point([one * v for v in nd]):
                inc.add((k, nd))
    cfg = AbstractConfig(pts, list(nodes), inc,
                         name="planes-vs-family-%d" % family)
    want = ((24, 3), (18, 4)) if family == 1 else ((24, 4), (16, 6))
    assert cfg.type_signature == want
    return cfg


DETERMINANT_CELL_LABELS = ((1, 14, 12, 7),
                           (15, 2, 5, 10),
                           (9, 8, 3, 16),
                           (6, 11, 13, 4))


def determinant_config():
    """(24_4, 16_6): the 24 monomials of a 4x4 determinant against the 16
    matrix cells, with the cells carrying the printed labels 1..16."""
    cells = [DETERMINANT_CELL_LABELS[r][c]
             for r in range(4) for c in range(4)]
    monomials = list(permutations(range(4)))
    inc = {(tau, DETERMINANT_CELL_LABELS[r][tau[r]])
           for tau in monomials for r in range(4)}
    cfg = AbstractConfig(monomials, cells, inc, name="determinant")
    assert cfg.type_signature == ((24, 4), (16, 6))
    return cfg


# ---------------------------------------------------------------------------
# the projective plane over the four-element field
# ---------------------------------------------------------------------------

_F4_ZERO = F4(0)
_F4_ONE = F4(1)


def _pg2_reps():
    pts = [(_F4_ONE, a, b) for a in F4_ELEMENTS for b in F4_ELEMENTS]
    pts += [(_F4_ZERO, _F4_ONE, a) for a in F4_ELEMENTS]
    pts.append((_F4_ZERO, _F4_ZERO, _F4_ONE))
    return pts


def pg24():
    """The projective plane over the field with four elements: 21 points,
    21 lines, five points per line and five lines per point."""
    pts = _pg2_reps()
    lines = _pg2_reps()

    def on(p, l):
        s = p[0] * l[0] + p[1] * l[1] + p[2] * l[2]
        return s == _F4_ZERO

    inc = {(p, l) for p in pts for l in lines if on(p, l)}
    cfg = AbstractConfig(pts, lines, inc, name="pg(2,4)")
    assert cfg.type_signature == ((21, 5), (21, 5))
    return cfg


# ---------------------------------------------------------------------------
# duads, synthemes and totals
# ---------------------------------------------------------------------------

def _duad_str(d):
    a, b = sorted(d)
    return "%d%d" % (a, b)


def _syntheme_str(s):
    return ".".join(sorted(_duad_str(d) for d in s))


# the printed symmetric table of common synthemes: entry (i, j) is the one
# syntheme shared by totals i and j (1-based)
TOTALS_TABLE = {
    (1, 2): "14.25.36", (1, 3): "16.24.35", (1, 4): "13.26.45",
    (1, 5): "12.34.56", (1, 6): "15.23.46",
    (2, 3): "15.26.34", (2, 4): "12.35.46", (2, 5): "16.23.45",
    (2, 6): "13.24.56",
    (3, 4): "14.23.56", (3, 5): "13.25.46", (3, 6): "12.36.45",
    (4, 5): "15.24.36", (4, 6): "16.25.34",
    (5, 6): "14.26.35",
}
for (_i, _j), _v in list(TOTALS_TABLE.items()):
    TOTALS_TABLE[(_j, _i)] = _v


def duad_syntheme_system():
    """Duads, synthemes and totals on six letters, with the totals labeled
    T1..T6 so that the pairwise-intersection table reproduces the printed
    one entry for entry.

    Returns a dict with keys: duads (15 strings), synthemes (15 strings),
    totals (label -> sorted list of 5 syntheme strings), table (6x6 tuple
    of strings, empty on the diagonal)."""
    letters = range(1, 7)
    duads = [frozenset(d) for d in combinations(letters, 2)]
    assert len(duads) == 15

    def matchings(rest):
        if not rest:
            yield []
            return
        a = min(rest)
        for b in sorted(rest - {a}):
            for tail in matchings(rest - {a, b}):
                yield [frozenset({a, b})] + tail

    synthemes = [frozenset(m) for m in matchings(set(letters))]
    assert len(synthemes) == 15

    # a total is five pairwise duad-disjoint synthemes covering all duads
    disjoint = {(s, t) for s in synthemes for t in synthemes
                if s is not t and not (s & t)}
    totals = []
    for combo in combinations(synthemes, 5):
        if all((s, t) in disjoint for s, t in combinations(combo, 2)):
            totals.append(frozenset(combo))
    assert len(totals) == 6
    for t in totals:
        covered = set().union(*[set(s) for s in t])
        assert covered == set(duads)
    for s, t in combinations(totals, 2):
        assert len(s & t) == 1

    # find the labeling that reproduces the printed table
    labeling = None
    for perm in permutations(range(6)):
        ok = True
        for i, j in combinations(range(6), 2):
            common = next(iter(totals[perm[i]] & totals[perm[j]]))
            if _syntheme_str(common) != TOTALS_TABLE[(i + 1, j + 1)]:
                ok = False
                break
        if ok:
            labeling = perm
            break
    assert labeling is not None, "printed table inconsistent with totals"

    labeled = {"T%d" % (k + 1): totals[labeling[k]] for k in range(6)}
    table = tuple(
        tuple("" if i == j else TOTALS_TABLE[(i + 1, j + 1)]
              for j in range(6))
        for i in range(6))
    # double-check the rendered table against the labeled totals
    for i, j in permutations(range(6), 2):
        common = next(iter(labeled["T%d" % (i + 1)]
                           & labeled["T%d" % (j + 1)]))
        assert table[i][j] == _syntheme_str(common)
    return {
        "duads": sorted(_duad_str(d) for d in duads),
        "synthemes": sorted(_syntheme_str(s) for s in synthemes),
        "totals": {k: sorted(_syntheme_str(s) for s in v)
                   for k, v in labeled.items()},
        "table": table,
        "_synthemes_raw": synthemes,
        "_totals_raw": labeled,
    }


def duad_syntheme_config():
    """The (15_3, 15_3) incidence of duads with the synthemes containing
    them."""
    sysd = duad_syntheme_system()
    duads = sysd["duads"]
    synthemes = sysd["synthemes"]
    inc = {(d, s) for d in duads for s in synthemes if d in s.split(".")}
    cfg = AbstractConfig(duads, synthemes, inc, name="duad-syntheme")
    assert cfg.type_signature == ((15, 3), (15, 3))
    return cfg


# ---------------------------------------------------------------------------
# curve systems
# ---------------------------------------------------------------------------

_AFFINE_MULTS = {
    "D~4": [1, 1, 1, 1, 2],
    "D~8": [1, 1, 1, 1, 2, 2, 2, 2, 2],
    "E~6": [1, 1, 1, 2, 2, 2, 3],
    "E~7": [1, 1, 2, 2, 2, 3, 3, 4],
    "E~8": [1, 2, 2, 3, 3, 4, 4, 5, 6],
}


class CurveSystem:
    """Finitely many curves with a symmetric integer intersection matrix,
    plus optional fibration and divisor records."""

    def __init__(self, ids, gram, fibrations=None, divisors=None):
        self.ids = list(ids)
        self.index = {c: k for k, c in enumerate(self.ids)}
        assert len(self.index) == len(self.ids), "duplicate curve ids"
        self.gram = [list(row) for row in gram]
        n = len(self.ids)
        assert len(self.gram) == n and all(len(r) == n for r in self.gram)
        for a in range(n):
            for b in range(n):
                assert self.gram[a][b] == self.gram[b][a], \
                    "intersection matrix not symmetric at %s, %s" % (
                        self.ids[a], self.ids[b])
        self.fibrations = list(fibrations or [])
        self.divisors = list(divisors or [])

    def pair(self, a, b):
        return self.gram[self.index[a]][self.index[b]]

    def _as_vector(self, terms):
        """terms: iterable of (curve id, rational coefficient)."""
        v = [Fraction(0)] * len(self.ids)
        for cid, coeff in terms:
            v[self.index[cid]] += Fraction(coeff)
        return v

    def vector_pairing(self, u, v):
        n = len(self.ids)
        return sum(u[a] * self.gram[a][b] * v[b]
                   for a in range(n) for b in range(n))

    def fiber_vector(self, fibration_name, which=0):
        for fib in self.fibrations:
            if fib["name"] == fibration_name:
                comps = fib["fibers"][which]["components"]
                return self._as_vector(
                    (c["id"], c["mult"]) for c in comps)
        raise KeyError("no fibration named %r" % fibration_name)

    def divisor_vector(self, name):
        """Expand a divisor record; "class" terms contribute the class of
        a fiber of the named fibration (represented by its first fiber)."""
        for div in self.divisors:
            if div["name"] != name:
                continue
            v = [Fraction(0)] * len(self.ids)
            for term in div["terms"]:
                coeff = Fraction(term["coeff"])
                if "class" in term:
                    fv = self.fiber_vector(term["class"])
                    v = [a + coeff * b for a, b in zip(v, fv)]
                else:
                    v[self.index[term["id"]]] += coeff
            return v
        raise KeyError("no divisor named %r" % name)

    def curve_vector(self, cid):
        v = [Fraction(0)] * len(self.ids)
        v[self.index[cid]] = Fraction(1)
        return v

    def _check_fiber(self, fname, k, fiber):
        comps = fiber["components"]
        cids = [c["id"] for c in comps]
        mults = [c["mult"] for c in comps]
        where = "fiber %d of %s" % (k, fname)
        assert len(set(cids)) == len(cids), \
            "%s lists a curve twice" % where
        ftype = fiber.get("type")
        if ftype is not None:
            want = _AFFINE_MULTS.get(ftype)
            if want is None and ftype.startswith("A~"):
                want = [1] * (int(ftype[2:]) + 1)
            if want is None and ftype.startswith("D~"):
                n = int(ftype[2:])
                want = [1, 1, 1, 1] + [2] * (n - 3)
            if want is None:
                raise ValueError("%s: unknown fiber type %r"
                                 % (where, ftype))
            if sorted(mults) != want:
                raise ValueError(
                    "%s: multiplicities %s do not match type %s"
                    % (where, sorted(mults), ftype))
        # connectivity of the component graph
        adj = {a: {b for b in cids
                   if b != a and self.pair(a, b) != 0} for a in cids}
        seen = {cids[0]}
        frontier = [cids[0]]
        while frontier:
            a = frontier.pop()
            for b in adj[a]:
                if b not in seen:
                    seen.add(b)
                    frontier.append(b)
        if seen != set(cids):
            raise ValueError("%s is not connected" % where)
        fv = self._as_vector(zip(cids, mults))
        sq = self.vector_pairing(fv, fv)
        if sq != 0:
            raise ValueError("%s: F^2 = %s, expected 0" % (where, sq))
        for cid in cids:
            val = self.vector_pairing(fv, self.curve_vector(cid))
            if val != 0:
                raise ValueError("%s: F . %s = %s, expected 0"
                                 % (where, cid, val))

    def validate(self, minus_two=True):
        """Check the declared invariants; raises ValueError naming the
        offending fiber/curve/divisor on failure."""
        if minus_two:
            for cid in self.ids:
                if self.pair(cid, cid) != -2:
                    raise ValueError("curve %s has self-intersection %s"
                                     % (cid, self.pair(cid, cid)))
        for fib in self.fibrations:
            for k, fiber in enumerate(fib["fibers"]):
                self._check_fiber(fib["name"], k, fiber)
        for div in self.divisors:
            dv = self.divisor_vector(div["name"])
            for cid in self.ids:
                val = self.vector_pairing(dv, self.curve_vector(cid))
                if val.denominator != 1:
                    raise ValueError(
                        "divisor %s pairs non-integrally with %s: %s"
                        % (div["name"], cid, val))
        return self


def ingest_curve_system(path):
    """Load and validate a curve system from its JSON file."""
    with open(path) as fh:
        data = json.load(fh)
    for key in data:
        if key not in ("curves", "intersections", "fibrations",
                       "divisors"):
            raise ValueError("unknown top-level key %r" % key)
    if "curves" not in data:
        raise ValueError("missing 'curves'")
    ids, selfints = [], {}
    for rec in data["curves"]:
        if set(rec) != {"id", "self"}:
            raise ValueError("bad curve record %r" % (rec,))
        ids.append(rec["id"])
        selfints[rec["id"]] = rec["self"]
    n = len(ids)
    index = {c: k for k, c in enumerate(ids)}
    if len(index) != n:
        raise ValueError("duplicate curve ids")
    gram = [[0] * n for _ in range(n)]
    for c in ids:
        gram[index[c]][index[c]] = selfints[c]
    for entry in data.get("intersections", []):
        if len(entry) != 3:
            raise ValueError("bad intersection entry %r" % (entry,))
        a, b, val = entry
        if a not in index or b not in index:
            raise ValueError("intersection names unknown curve: %r"
                             % (entry,))
        if a == b:
            raise ValueError("self-intersections belong in 'curves': %r"
                             % (entry,))
        if gram[index[a]][index[b]] != 0:
            raise ValueError("intersection %s.%s given twice" % (a, b))
        gram[index[a]][index[b]] = gram[index[b]][index[a]] = int(val)
    fibrations = data.get("fibrations", [])
    for fib in fibrations:
        if set(fib) != {"name", "fibers"}:
            raise ValueError("bad fibration record %r" % (fib.get("name"),))
        for fiber in fib["fibers"]:
            for comp in fiber["components"]:
                if comp["id"] not in index:
                    raise ValueError(
                        "fibration %s names unknown curve %r"
                        % (fib["name"], comp["id"]))
    divisors = data.get("divisors", [])
    for div in divisors:
        for term in div["terms"]:
            keys = set(term)
            if keys not in ({"id", "coeff"}, {"class", "coeff"}):
                raise ValueError("bad divisor term %r in %s"
                                 % (term, div["name"]))
            if "id" in term and term["id"] not in index:
                raise ValueError("divisor %s names unknown curve %r"
                                 % (div["name"], term["id"]))
            Fraction(term["coeff"])  # must parse
    cs = CurveSystem(ids, gram, fibrations, divisors)
    return cs.validate()


def kummer_char0_system(data_dir=None):
    return ingest_curve_system(data_path("kummer-char0.json", data_dir))


def kummer_char2_system(data_dir=None):
    return ingest_curve_system(
        data_path("kummer-char2-ordinary.json", data_dir))


# ---------------------------------------------------------------------------
# the 42-curve system
# ---------------------------------------------------------------------------

SIX_ARC = ((F4(1), F4(0), F4(0)),
           (F4(0), F4(1), F4(0)),
           (F4(0), F4(0), F4(1)),
           (F4(1), F4(1), F4(1)),
           (F4(1), W, W * W),
           (F4(1), W * W, W))


def _f4_line_through(p, q):
    """The covector of the line through two points of the plane, scaled to
    the lexicographically first normalized representative."""
    # solve p.l = q.l = 0 for l up to scale
    for rep in _pg2_reps():
        if (p[0] * rep[0] + p[1] * rep[1] + p[2] * rep[2] == _F4_ZERO
                and q[0] * rep[0] + q[1] * rep[1] + q[2] * rep[2]
                == _F4_ZERO):
            return rep
    raise AssertionError("no line through the two points")


def label_42_curves():
    """The 42-curve system: 21 exceptional curves over the points of the
    plane and 21 line transforms, labeled by letters 1..6, duads,
    synthemes and totals via the fixed 6-arc.

    Returns (CurveSystem, labeling dict)."""
    pts = _pg2_reps()
    arc = list(SIX_ARC)
    for trip in combinations(arc, 3):
        assert matrix_rank([list(r) for r in trip]) == 3, \
            "three arc points collinear"

    # duad lines
    line_label = {}
    for i, j in combinations(range(6), 2):
        rep = _f4_line_through(arc[i], arc[j])
        lbl = "%d%d" % (i + 1, j + 1)
        assert rep not in line_label, "two duads give the same line"
        line_label[rep] = lbl

    def on(p, l):
        return p[0] * l[0] + p[1] * l[1] + p[2] * l[2] == _F4_ZERO

    # point labels: arc points get letters, the rest get the syntheme of
    # the duad lines through them
    point_label = {}
    for k, a in enumerate(arc):
        point_label[a] = "%d" % (k + 1)
    sysd = duad_syntheme_system()
    syntheme_strs = set(sysd["synthemes"])
    for p in pts:
        if p in point_label:
            continue
        duads = sorted(lbl for rep, lbl in line_label.items()
                       if on(p, rep))
        assert len(duads) == 3, "non-arc point on %d duad lines" % \
            len(duads)
        s = ".".join(duads)
        assert s in syntheme_strs, "duads through point do not match: %s" % s
        point_label[p] = s
    assert len(set(point_label.values())) == 21

    # total lines: the six lines missing every arc point
    totals = {k: set(v) for k, v in sysd["totals"].items()}
    for l in _pg2_reps():
        if l in line_label:
            continue
        synths = sorted(point_label[p] for p in pts if on(p, l))
        assert len(synths) == 5
        match = [k for k, v in totals.items() if v == set(synths)]
        assert len(match) == 1, "line does not match a unique total"
        line_label[l] = match[0]
    assert len(set(line_label.values())) == 21

    plabels = [point_label[p] for p in pts]
    llabels = [line_label[l] for l in _pg2_reps()]
    ids = plabels + llabels
    n = 42
    gram = [[0] * n for _ in range(n)]
    for k in range(n):
        gram[k][k] = -2
    for a, p in enumerate(pts):
        for b, l in enumerate(_pg2_reps()):
            if on(p, l):
                gram[a][21 + b] = gram[21 + b][a] = 1
    cs = CurveSystem(ids, gram)
    cs.validate()
    # the lifted (21_5) property
    for a in range(21):
        assert sum(gram[a][21 + b] for b in range(21)) == 5
        assert sum(gram[21 + b][a] for b in range(21)) == 5
        assert all(gram[a][b] == 0 for b in range(21) if b != a)
    for a in range(21, 42):
        assert all(gram[a][b] == 0 for b in range(21, 42) if b != a)
    return cs, {"points": plabels, "lines": llabels}


# the three fibration tables: (column header, four leaves) per column
FIBRATION_TABLE_1 = (
    ("12", ("12.35.46", "12.34.56", "12.36.45", "2")),
    ("13", ("13.25.46", "13.24.56", "3", "13.26.45")),
    ("14", ("4", "14.23.56", "14.25.36", "14.26.35")),
    ("15", ("15.23.46", "5", "15.24.36", "15.26.34")),
    ("16", ("6", "16.23.45", "16.24.35", "16.25.34")),
)
FIBRATION_TABLE_2 = (
    ("26", ("2", "13.26.45", "14.26.35", "15.26.34")),
    ("36", ("12.36.45", "3", "14.25.36", "15.24.36")),
    ("46", ("12.35.46", "13.25.46", "4", "15.23.46")),
    ("56", ("12.34.56", "13.24.56", "14.23.56", "5")),
    ("16", ("1", "16.23.45", "16.24.35", "16.25.34")),
)
FIBRATION_TABLE_3 = (
    ("23", ("2", "3", "14.23.56", "15.23.46")),
    ("45", ("4", "5", "12.36.45", "13.26.45")),
    ("T2", ("12.35.46", "13.24.56", "14.25.36", "15.26.34")),
    ("T5", ("12.34.56", "13.25.46", "14.26.35", "15.24.36")),
    ("16", ("1", "6", "16.24.35", "16.25.34")),
)
FIBRATION_TABLES = (FIBRATION_TABLE_1, FIBRATION_TABLE_2,
                    FIBRATION_TABLE_3)


def fibration_tables(curve_system=None):
    """The three fibration tables, validated against the 42-curve
    intersection matrix: each column is an affine 4-pronged star (central
    = the header, four leaves of multiplicity one), the fiber class
    squares to zero, and the sixteen simple components of the first four
    fibers agree across the three fibrations.

    Returns (CurveSystem with fibration records attached, commons set)."""
    cs = curve_system
    if cs is None:
        cs, _ = label_42_curves()
    fibrations = []
    commons = None
    for t, table in enumerate(FIBRATION_TABLES):
        fibers = []
        for central, leaves in table:
            for leaf in leaves:
                assert cs.pair(central, leaf) == 1, \
                    "central %s misses leaf %s" % (central, leaf)
            for u, v in combinations(leaves, 2):
                assert cs.pair(u, v) == 0, \
                    "leaves %s, %s meet" % (u, v)
            comps = [{"id": central, "mult": 2}]
            comps += [{"id": leaf, "mult": 1} for leaf in leaves]
            fibers.append({"type": "D~4", "components": comps})
        fibrations.append({"name": "f%d" % (t + 1), "fibers": fibers})
        simple = set()
        for central, leaves in table[:4]:
            simple.update(leaves)
        assert len(simple) == 16
        if commons is None:
            commons = simple
        else:
            assert commons == simple, \
                "simple components differ between tables"
    h_terms = [{"class": "f%d" % (t + 1), "coeff": "1"} for t in range(3)]
    h_terms += [{"id": c, "coeff": "-1/2"} for c in sorted(commons)]
    out = CurveSystem(cs.ids, cs.gram, fibrations=fibrations,
                      divisors=[{"name": "H", "terms": h_terms}])
    out.validate()
    return out, commons


# fixed rendering of the 6x6 duad/syntheme table, for byte-identity checks
DUAD_TABLE_REFERENCE = (
    ("", "14.25.36", "16.24.35", "13.26.45", "12.34.56", "15.23.46"),
    ("14.25.36", "", "15.26.34", "12.35.46", "16.23.45", "13.24.56"),
    ("16.24.35", "15.26.34", "", "14.23.56", "13.25.46", "12.36.45"),
    ("13.26.45", "12.35.46", "14.23.56", "", "15.24.36", "16.25.34"),
    ("12.34.56", "16.23.45", "13.25.46", "15.24.36", "", "14.26.35"),
    ("15.23.46", "13.24.56", "12.36.45", "16.25.34", "14.26.35", ""),
)


def supersingular_42_system(data_dir=None):
    """The 42-curve system, loaded from its cached JSON file; the file is
    generated from the labeling on first use."""
    path = data_path("supersingular-42.json", data_dir)
    if not os.path.exists(path):
        cs, _ = fibration_tables()
        data = {
            "curves": [{"id": c, "self": -2} for c in cs.ids],
            "intersections": [
                [a, b, cs.pair(a, b)]
                for k, a in enumerate(cs.ids)
                for b in cs.ids[k + 1:] if cs.pair(a, b)],
            "fibrations": cs.fibrations,
            "divisors": cs.divisors,
        }
        with open(path, "w") as fh:
            json.dump(data, fh, indent=1, sort_keys=True)
            fh.write("\n")
    return ingest_curve_system(path)


def extract_desmic_28():
    """The 12 central curves of the first four fibers plus their 16 common
    simple components, as a sub curve system and the induced (12_4, 16_3)
    configuration, checked isomorphic to the Reye configuration.

    Returns (CurveSystem, AbstractConfig, isomorphism with Reye)."""
    cs, commons = fibration_tables()
    centrals = [central for table in FIBRATION_TABLES
                for central, _ in table[:4]]
    assert centrals == ["12", "13", "14", "15", "26", "36", "46", "56",
                        "23", "45", "T2", "T5"]
    keep = centrals + sorted(commons)
    idx = [cs.index[c] for c in keep]
    sub = [[cs.gram[a][b] for b in idx] for a in idx]
    cs28 = CurveSystem(keep, sub)
    inc = {(c, e) for c in centrals for e in commons
           if cs28.pair(c, e) == 1}
    cfg = AbstractConfig(centrals, sorted(commons), inc, name="desmic-28")
    assert cfg.type_signature == ((12, 4), (16, 3))
    iso = config_isomorphic(cfg, reye_config())
    assert iso is not None, "28-curve configuration is not Reye"
    return cs28, cfg, iso
