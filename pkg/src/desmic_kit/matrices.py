"""Exact matrix algebra: integer matrices with Smith normal form, fraction-free
determinants and Pfaffians over polynomial rings, rational inertia, and small
generic linear-algebra helpers over any exact field."""

from fractions import Fraction

from .poly import MultiPoly


class IntMatrix:
    """Rectangular matrix of arbitrary-precision integers."""

    __slots__ = ("rows",)

    def __init__(self, rows):
        rows = [list(r) for r in rows]
        if rows:
            n = len(rows[0])
            assert all(len(r) == n for r in rows), "ragged rows"
            assert all(isinstance(x, int) for r in rows for x in r)
        self.rows = rows

    @property
    def nrows(self):
        return len(self.rows)

    @property
    def ncols(self):
        return len(self.rows[0]) if self.rows else 0

    @classmethod
    def identity(cls, n):
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    def __getitem__(self, ij):
        return self.rows[ij[0]][ij[1]]

    def __eq__(self, other):
        return isinstance(other, IntMatrix) and self.rows == other.rows

    def __mul__(self, other):
        assert self.ncols == other.nrows
        return IntMatrix([[sum(self.rows[i][k] * other.rows[k][j]
                               for k in range(self.ncols))
                           for j in range(other.ncols)]
                          for i in range(self.nrows)])

    def transpose(self):
        return IntMatrix([list(c) for c in zip(*self.rows)])

    def det(self):
        assert self.nrows == self.ncols
        return _int_det([list(r) for r in self.rows])

    def __repr__(self):
        return "IntMatrix(%r)" % (self.rows,)


def _int_det(a):
    """Fraction-free (Bareiss) determinant of an integer matrix (mutates a)."""
    n = len(a)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k]:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1] if n else 1


def det_poly_matrix(m):
    """Exact determinant of a square matrix with entries in one ring
    (polynomials, or any exact field scalars).  Fraction-free Bareiss is
    used for polynomial entries to avoid rational-function blowup."""
    n = len(m)
    if any(len(r) != n for r in m):
        raise ValueError("non-square matrix")
    if n == 0:
        raise ValueError("empty matrix")
    a = [list(r) for r in m]
    sample = a[0][0]
    if isinstance(sample, MultiPoly):
        ring = sample.ring
        one = ring.const(1)
        div = lambda f, g: f.divexact(g)
        is_zero = lambda f: f.is_zero()
    else:
        one = None
        div = lambda f, g: f / g
        is_zero = lambda f: not f
    sign = 1
    prev = None
    for k in range(n - 1):
        if is_zero(a[k][k]):
            for i in range(k + 1, n):
                if not is_zero(a[i][k]):
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return sample * 0 if one is None else sample.ring.zero()
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = a[i][j] * a[k][k] - a[i][k] * a[k][j]
                a[i][j] = num if prev is None else div(num, prev)
        prev = a[k][k]
    d = a[n - 1][n - 1]
    return -d if sign < 0 else d


def pfaffian_poly_matrix(m):
    """Pfaffian of an alternating matrix (zero diagonal, skew; in char 2
    this means symmetric with zero diagonal).  Pf(M)^2 = det(M)."""
    n = len(m)
    if n % 2:
        raise ValueError("odd-size alternating matrix")
    sample = m[0][0]
    zero = sample * 0 if not isinstance(sample, MultiPoly) else sample.ring.zero()
    for i in range(n):
        if m[i][i] != zero:
            raise ValueError("nonzero diagonal")
        for j in range(n):
            if m[i][j] != -m[j][i]:
                raise ValueError("matrix not alternating")
    return _pf(m, list(range(n)), zero)


def _pf(m, idx, zero):
    if not idx:
        return zero + 1 if not isinstance(zero, MultiPoly) else zero.ring.const(1)
    i0 = idx[0]
    total = zero
    for pos in range(1, len(idx)):
        j = idx[pos]
        a = m[i0][j]
        if a == zero:
            continue
        rest = idx[1:pos] + idx[pos + 1:]
        sub = _pf(m, rest, zero)
        term = a * sub
        if pos % 2 == 0:  # sign (-1)^(pos+1); pos=1 positive
            term = -term
        total = total + term
    return total


def smith_normal_form(m):
    """Smith normal form: returns (D, U, V) with U*M*V = D, U and V
    unimodular, and the diagonal of D a divisibility chain d1 | d2 | ..."""
    a = [list(r) for r in (m.rows if isinstance(m, IntMatrix) else m)]
    nr = len(a)
    nc = len(a[0]) if a else 0
    u = [[1 if i == j else 0 for j in range(nr)] for i in range(nr)]
    v = [[1 if i == j else 0 for j in range(nc)] for i in range(nc)]

    def row_op(i, j, c):  # row i += c * row j
        for k in range(nc):
            a[i][k] += c * a[j][k]
        for k in range(nr):
            u[i][k] += c * u[j][k]

    def col_op(i, j, c):  # col i += c * col j
        for k in range(nr):
            a[k][i] += c * a[k][j]
        for k in range(nc):
            v[k][i] += c * v[k][j]

    def row_swap(i, j):
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]

    def col_swap(i, j):
        for k in range(nr):
            a[k][i], a[k][j] = a[k][j], a[k][i]
        for k in range(nc):
            v[k][i], v[k][j] = v[k][j], v[k][i]

    t = 0
    while t < min(nr, nc):
        # find pivot: smallest nonzero abs value in remaining block
        piv = None
        for i in range(t, nr):
            for j in range(t, nc):
                if a[i][j] and (piv is None or abs(a[i][j]) < abs(a[piv[0]][piv[1]])):
                    piv = (i, j)
        if piv is None:
            break
        row_swap(t, piv[0])
        col_swap(t, piv[1])
        dirty = False
        for i in range(t + 1, nr):
            if a[i][t]:
                q = a[i][t] // a[t][t]
                row_op(i, t, -q)
                if a[i][t]:
                    dirty = True
        for j in range(t + 1, nc):
            if a[t][j]:
                q = a[t][j] // a[t][t]
                col_op(j, t, -q)
                if a[t][j]:
                    dirty = True
        if dirty:
            continue
        # pivot must divide every remaining entry
        ok = True
        for i in range(t + 1, nr):
            for j in range(t + 1, nc):
                if a[i][j] % a[t][t]:
                    row_op(t, i, 1)
                    ok = False
                    break
            if not ok:
                break
        if ok:
            if a[t][t] < 0:
                for k in range(nc):
                    a[t][k] = -a[t][k]
                for k in range(nr):
                    u[t][k] = -u[t][k]
            t += 1
    return IntMatrix(a), IntMatrix(u), IntMatrix(v)


def smith_invariants(m):
    """Nonzero diagonal invariant factors d1 | d2 | ... of m."""
    d, _, _ = smith_normal_form(m)
    out = []
    for i in range(min(d.nrows, d.ncols)):
        if d.rows[i][i]:
            out.append(d.rows[i][i])
    return out


def inertia_signature(m):
    """Exact inertia (n_plus, n_zero, n_minus) of a symmetric rational matrix
    via symmetric Gaussian elimination over the rationals."""
    n = len(m)
    a = [[Fraction(x) for x in r] for r in m]
    for i in range(n):
        for j in range(n):
            if a[i][j] != a[j][i]:
                raise ValueError("matrix not symmetric")
    pos = neg = zero = 0
    live = list(range(n))
    while live:
        k = next((i for i in live if a[i][i] != 0), None)
        if k is None:
            # all diagonal zero: look for off-diagonal pivot pair
            pair = None
            for i in live:
                for j in live:
                    if i != j and a[i][j] != 0:
                        pair = (i, j)
                        break
                if pair:
                    break
            if pair is None:
                zero += len(live)
                break
            i, j = pair
            # symmetric congruence: row/col i += row/col j makes a[i][i]=2a[i][j]
            for t in range(n):
                a[i][t] += a[j][t]
            for t in range(n):
                a[t][i] += a[t][j]
            continue
        d = a[k][k]
        if d > 0:
            pos += 1
        else:
            neg += 1
        live.remove(k)
        for i in live:
            if a[i][k] == 0:
                continue
            f = a[i][k] / d
            for j in live:
                a[i][j] -= f * a[k][j]
            a[i][k] = Fraction(0)
        for j in live:
            a[k][j] = Fraction(0)
    return pos, zero, neg


# -- generic exact linear algebra over a field -------------------------------

def rref(rows):
    """Reduced row echelon form over any exact field.  Returns (rref_rows,
    pivot_columns).  Rows are lists of field elements (truthiness = nonzero)."""
    a = [list(r) for r in rows]
    nr = len(a)
    nc = len(a[0]) if a else 0
    pivots = []
    r = 0
    for c in range(nc):
        piv = next((i for i in range(r, nr) if a[i][c]), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = a[r][c]
        a[r] = [x / inv for x in a[r]]
        for i in range(nr):
            if i != r and a[i][c]:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == nr:
            break
    return a, pivots


def matrix_rank(rows):
    _, pivots = rref(rows)
    return len(pivots)


def nullspace(rows, one):
    """Basis of the right kernel over the field containing `one`."""
    a, pivots = rref(rows)
    nc = len(rows[0]) if rows else 0
    free = [c for c in range(nc) if c not in pivots]
    basis = []
    zero = one * 0
    for fc in free:
        vec = [zero] * nc
        vec[fc] = one
        for r, pc in enumerate(pivots):
            vec[pc] = -a[r][fc]
        basis.append(vec)
    return basis


def solve_linear(rows, rhs, one):
    """One solution x of A x = rhs over the field, or None if inconsistent."""
    nc = len(rows[0]) if rows else 0
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    a, pivots = rref(aug)
    zero = one * 0
    for r in range(len(a)):
        if all(not x for x in a[r][:nc]) and a[r][nc]:
            return None
    x = [zero] * nc
    for r, pc in enumerate(pivots):
        if pc == nc:
            return None
        x[pc] = a[r][nc]
    return x
