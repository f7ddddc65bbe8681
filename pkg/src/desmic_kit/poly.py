"""Sparse multivariate polynomials, truncated power series, rational functions.

A polynomial is a map from exponent tuples to nonzero scalar coefficients,
tied to a PolyRing that fixes the variable names and the coefficient field.
Everything is exact; no floats anywhere.
"""

from fractions import Fraction

from .scalars import char_of, from_int, one_like


class PolyRing:
    """Polynomial ring k[x1,...,xn]: variable names plus the field's one."""

    def __init__(self, varnames, one=Fraction(1)):
        self.varnames = tuple(varnames)
        self.one = one
        self.zero_exp = (0,) * len(self.varnames)
        self.char = char_of(one)

    def nvars(self):
        return len(self.varnames)

    def var(self, name):
        i = self.varnames.index(name)
        e = [0] * len(self.varnames)
        e[i] = 1
        return MultiPoly(self, {tuple(e): self.one})

    def gens(self):
        return tuple(self.var(v) for v in self.varnames)

    def const(self, c):
        if isinstance(c, int):
            c = from_int(self.one, c)
        if not c:
            return MultiPoly(self, {})
        return MultiPoly(self, {self.zero_exp: c})

    def zero(self):
        return MultiPoly(self, {})

    def __eq__(self, other):
        return (isinstance(other, PolyRing)
                and self.varnames == other.varnames
                and self.one == other.one)

    def __hash__(self):
        return hash(self.varnames)

    def __repr__(self):
        return "PolyRing(%s)" % (",".join(self.varnames))


class MultiPoly:
    """Sparse polynomial: dict exponent-tuple -> nonzero coefficient."""

    __slots__ = ("ring", "coeffs")

    def __init__(self, ring, coeffs):
        self.ring = ring
        self.coeffs = {e: c for e, c in coeffs.items() if c}

    # -- basic structure ---------------------------------------------------

    def is_zero(self):
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def degree(self):
        """Total degree; -1 for the zero polynomial."""
        if not self.coeffs:
            return -1
        return max(sum(e) for e in self.coeffs)

    def degree_in(self, name):
        i = self.ring.varnames.index(name)
        if not self.coeffs:
            return -1
        return max(e[i] for e in self.coeffs)

    def is_homogeneous(self):
        degs = {sum(e) for e in self.coeffs}
        return len(degs) <= 1

    def constant_coeff(self):
        return self.coeffs.get(self.ring.zero_exp, self.ring.one * 0)

    def coeff_of(self, exp):
        return self.coeffs.get(tuple(exp), self.ring.one * 0)

    def monomials(self):
        return sorted(self.coeffs)

    # -- arithmetic --------------------------------------------------------

    def _lift(self, other):
        if isinstance(other, MultiPoly):
            if other.ring != self.ring:
                raise ValueError("mixed polynomial rings")
            return other
        if isinstance(other, int):
            return self.ring.const(other)
        try:
            one_like(other)
        except TypeError:
            return NotImplemented
        return MultiPoly(self.ring, {self.ring.zero_exp: self.ring.one * other})

    def __add__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        new = dict(self.coeffs)
        for e, c in o.coeffs.items():
            s = new.get(e)
            s = c if s is None else s + c
            if s:
                new[e] = s
            elif e in new:
                del new[e]
        return MultiPoly(self.ring, new)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly(self.ring, {e: -c for e, c in self.coeffs.items()})

    def __sub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return -self + other

    def __mul__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        prod = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in o.coeffs.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                c = c1 * c2
                s = prod.get(e)
                s = c if s is None else s + c
                if s:
                    prod[e] = s
                elif e in prod:
                    del prod[e]
        return MultiPoly(self.ring, prod)

    __rmul__ = __mul__

    def scale(self, c):
        return MultiPoly(self.ring, {e: v * c for e, v in self.coeffs.items()})

    def __pow__(self, n):
        assert isinstance(n, int) and n >= 0
        r = self.ring.const(1)
        b = self
        while n:
            if n & 1:
                r = r * b
            b = b * b
            n >>= 1
        return r

    def __eq__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        return self.coeffs == o.coeffs

    def __hash__(self):
        return hash((self.ring.varnames, frozenset(self.coeffs.items())))

    # -- calculus / evaluation ----------------------------------------------

    def diff(self, name):
        """Formal partial derivative (char-2 safe: coefficients multiply
        by the integer exponent image in the field, possibly zero)."""
        i = self.ring.varnames.index(name)
        new = {}
        for e, c in self.coeffs.items():
            if e[i] == 0:
                continue
            k = from_int(self.ring.one, e[i])
            if not k:
                continue
            e2 = list(e)
            e2[i] -= 1
            new[tuple(e2)] = new.get(tuple(e2), self.ring.one * 0) + c * k
        return MultiPoly(self.ring, new)

    def evaluate(self, values):
        """Evaluate at a point; `values` maps every variable name to a scalar."""
        vals = [values[v] for v in self.ring.varnames]
        total = self.ring.one * 0
        for e, c in self.coeffs.items():
            t = c
            for vi, ei in zip(vals, e):
                for _ in range(ei):
                    t = t * vi
            total = total + t
        return total

    def subst(self, mapping, target_ring=None):
        """Substitute polynomials for variables.

        mapping: variable name -> MultiPoly in the target ring.  Every
        variable that actually occurs must be covered.
        """
        if target_ring is None:
            some = next(iter(mapping.values()))
            target_ring = some.ring if isinstance(some, MultiPoly) else self.ring
        out = target_ring.zero()
        for e, c in self.coeffs.items():
            term = target_ring.const(1).scale(target_ring.one * c) \
                if not isinstance(c, MultiPoly) else None
            if term is None:
                raise ValueError("nested polynomial coefficients unsupported")
            for name, ei in zip(self.ring.varnames, e):
                if ei == 0:
                    continue
                if name not in mapping:
                    raise ValueError("substitution misses variable %r" % name)
                g = mapping[name]
                if not isinstance(g, MultiPoly):
                    g = target_ring.const(1).scale(target_ring.one * g)
                if g.ring != target_ring:
                    raise ValueError("substitution targets mix rings")
                term = term * g ** ei
            out = out + term
        return out

    def divexact(self, g):
        """Exact division self / g; raises if g does not divide exactly."""
        if g.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        r = self
        q = self.ring.zero()
        glt = max(g.coeffs)
        glc = g.coeffs[glt]
        while r.coeffs:
            rlt = max(r.coeffs)
            diff = tuple(a - b for a, b in zip(rlt, glt))
            if any(d < 0 for d in diff):
                raise ValueError("inexact polynomial division")
            c = r.coeffs[rlt] / glc
            t = MultiPoly(self.ring, {diff: c})
            q = q + t
            r = r - t * g
        return q

    def homogeneous_part(self, d):
        return MultiPoly(self.ring,
                         {e: c for e, c in self.coeffs.items() if sum(e) == d})

    def map_coeffs(self, fn, new_ring):
        return MultiPoly(new_ring, {e: fn(c) for e, c in self.coeffs.items()})

    def __repr__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for e in sorted(self.coeffs, reverse=True):
            c = self.coeffs[e]
            mono = "*".join("%s^%d" % (v, k) if k > 1 else v
                            for v, k in zip(self.ring.varnames, e) if k)
            parts.append("(%s)%s" % (c, "*" + mono if mono else ""))
        return " + ".join(parts)


def poly_subst(f, mapping):
    """Compose f with a variable -> polynomial map (all targets in one ring)."""
    rings = {g.ring for g in mapping.values() if isinstance(g, MultiPoly)}
    if len(rings) > 1:
        raise ValueError("substitution targets mix rings")
    target = rings.pop() if rings else f.ring
    return f.subst(mapping, target)


def poly_gcd_content(f):
    """Monomial content of f: the largest monomial dividing every term."""
    if f.is_zero():
        return f.ring.zero_exp
    mins = None
    for e in f.coeffs:
        mins = e if mins is None else tuple(min(a, b) for a, b in zip(mins, e))
    return mins


def prem(f, g, name):
    """Pseudo-remainder of f by g viewed as polynomials in the variable
    `name`; lc(g)^k * f = q*g + prem for some k.  Used for membership tests
    modulo a single relation without rational-function coefficients."""
    i = f.ring.varnames.index(name)
    dg = g.degree_in(name)
    if dg < 0:
        raise ZeroDivisionError("pseudo-division by zero")
    lc_g = _coeff_in(g, i, dg)
    r = f
    while True:
        dr = r.degree_in(name)
        if dr < dg or r.is_zero():
            return r
        lc_r = _coeff_in(r, i, dr)
        shift = [0] * f.ring.nvars()
        shift[i] = dr - dg
        mono = MultiPoly(f.ring, {tuple(shift): f.ring.one})
        r = r * lc_g - lc_r * mono * g


def _coeff_in(f, i, d):
    """Coefficient of (variable i)^d in f, as a polynomial in the rest."""
    new = {}
    for e, c in f.coeffs.items():
        if e[i] == d:
            e2 = list(e)
            e2[i] = 0
            new[tuple(e2)] = c
    return MultiPoly(f.ring, new)


def coeff_in(f, name, d):
    return _coeff_in(f, f.ring.varnames.index(name), d)


class RatFunc:
    """Fraction of two polynomials over one ring (a rational function).

    Only light normalization (monomial content) is applied; equality is
    decided by cross-multiplication, which is exact.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        if den is None:
            den = num.ring.const(1)
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if num.ring != den.ring:
            raise ValueError("mixed rings")
        cn, cd = poly_gcd_content(num), poly_gcd_content(den)
        common = tuple(min(a, b) for a, b in zip(cn, cd))
        if any(common):
            mono = MultiPoly(num.ring, {common: num.ring.one})
            num = num.divexact(mono)
            den = den.divexact(mono)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, *a):
        raise AttributeError("RatFunc is immutable")

    @property
    def char(self):
        return self.num.ring.char

    def one(self):
        r = self.num.ring
        return RatFunc(r.const(1))

    def _lift(self, other):
        if isinstance(other, RatFunc):
            return other
        if isinstance(other, MultiPoly):
            return RatFunc(other)
        if isinstance(other, int):
            return RatFunc(self.num.ring.const(other))
        return NotImplemented

    def __add__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        return RatFunc(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(-self.num, self.den)

    def __sub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return -self + other

    def __mul__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        return RatFunc(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        if o.num.is_zero():
            raise ZeroDivisionError("division by zero rational function")
        return RatFunc(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other):
        o = self._lift(other)
        return o / self

    def __pow__(self, e):
        assert isinstance(e, int)
        if e < 0:
            return (RatFunc(self.den, self.num)) ** (-e)
        return RatFunc(self.num ** e, self.den ** e)

    def __eq__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        return self.num * o.den == o.num * self.den

    def __bool__(self):
        return not self.num.is_zero()

    def __hash__(self):
        if self.den == self.den.ring.const(1):
            return hash(self.num)
        return hash((self.num, "ratfunc"))

    def __repr__(self):
        return "(%s)/(%s)" % (self.num, self.den)


class PowerSeriesTrunc:
    """Power series truncated at total degree N (terms of degree > N dropped)."""

    DEFAULT_TRUNC = 8

    __slots__ = ("ring", "N", "coeffs")

    def __init__(self, ring, coeffs, N=DEFAULT_TRUNC):
        self.ring = ring
        self.N = N
        self.coeffs = {e: c for e, c in coeffs.items() if c and sum(e) <= N}

    @classmethod
    def from_poly(cls, f, N=DEFAULT_TRUNC):
        return cls(f.ring, f.coeffs, N)

    def to_poly(self):
        return MultiPoly(self.ring, dict(self.coeffs))

    def is_zero(self):
        return not self.coeffs

    def order(self):
        """Lowest total degree of a nonzero term; None if zero to truncation."""
        if not self.coeffs:
            return None
        return min(sum(e) for e in self.coeffs)

    def _lift(self, other):
        if isinstance(other, PowerSeriesTrunc):
            assert other.ring == self.ring and other.N == self.N
            return other
        if isinstance(other, MultiPoly):
            return PowerSeriesTrunc(self.ring, other.coeffs, self.N)
        if isinstance(other, int):
            return PowerSeriesTrunc.from_poly(self.ring.const(other), self.N)
        return NotImplemented

    def __add__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        new = dict(self.coeffs)
        for e, c in o.coeffs.items():
            s = new.get(e)
            s = c if s is None else s + c
            if s:
                new[e] = s
            elif e in new:
                del new[e]
        return PowerSeriesTrunc(self.ring, new, self.N)

    __radd__ = __add__

    def __neg__(self):
        return PowerSeriesTrunc(self.ring,
                                {e: -c for e, c in self.coeffs.items()}, self.N)

    def __sub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        return self + (-o)

    def __mul__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        prod = {}
        for e1, c1 in self.coeffs.items():
            d1 = sum(e1)
            for e2, c2 in o.coeffs.items():
                if d1 + sum(e2) > self.N:
                    continue
                e = tuple(a + b for a, b in zip(e1, e2))
                c = c1 * c2
                s = prod.get(e)
                s = c if s is None else s + c
                if s:
                    prod[e] = s
                elif e in prod:
                    del prod[e]
        return PowerSeriesTrunc(self.ring, prod, self.N)

    __rmul__ = __mul__

    def __pow__(self, n):
        assert isinstance(n, int) and n >= 0
        r = PowerSeriesTrunc.from_poly(self.ring.const(1), self.N)
        b = self
        while n:
            if n & 1:
                r = r * b
            b = b * b
            n >>= 1
        return r

    def __eq__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        return self.coeffs == o.coeffs

    def subst(self, mapping):
        """Substitute a series with zero constant term for each variable."""
        for g in mapping.values():
            if isinstance(g, PowerSeriesTrunc) and g.coeffs.get(g.ring.zero_exp):
                raise ValueError("substituted series must have zero constant term")
        out = PowerSeriesTrunc(self.ring, {}, self.N)
        for e, c in self.coeffs.items():
            term = PowerSeriesTrunc.from_poly(self.ring.const(1), self.N)
            term = PowerSeriesTrunc(self.ring,
                                    {self.ring.zero_exp: c}, self.N)
            for name, ei in zip(self.ring.varnames, e):
                if ei == 0:
                    continue
                g = mapping.get(name)
                if g is None:
                    g = PowerSeriesTrunc.from_poly(self.ring.var(name), self.N)
                elif isinstance(g, MultiPoly):
                    g = PowerSeriesTrunc.from_poly(g, self.N)
                term = term * g ** ei
            out = out + term
        return out

    def __repr__(self):
        return "O(%d) series %r" % (self.N, self.to_poly())
