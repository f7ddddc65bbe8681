"""Exact scalar arithmetic: prime fields, Gaussian rationals, F_4.

Plain rationals are represented by fractions.Fraction (or int); the classes
here supply the remaining field variants.  All values are immutable and
hashable, and arithmetic accepts plain ints on either side.
"""

from fractions import Fraction


def xgcd(a, b):
    """Extended gcd: returns (g, s, t) with g = s*a + t*b."""
    s0, s1, t0, t1 = 1, 0, 0, 1
    while b:
        q, r = divmod(a, b)
        a, b = b, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    return a, s0, t0


class Mod:
    """Element of the prime field GF(p)."""

    __slots__ = ("v", "p")

    def __init__(self, v, p):
        assert p >= 2
        if isinstance(v, Mod):
            assert v.p == p
            v = v.v
        object.__setattr__(self, "v", v % p)
        object.__setattr__(self, "p", p)

    def __setattr__(self, *a):
        raise AttributeError("Mod is immutable")

    def _lift(self, other):
        if isinstance(other, Mod):
            if other.p != self.p:
                raise ValueError("mixed moduli")
            return other
        if isinstance(other, int):
            return Mod(other, self.p)
        if isinstance(other, Fraction):
            return Mod(other.numerator, self.p) / Mod(other.denominator, self.p)
        return NotImplemented

    def __add__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        return Mod(self.v + o.v, self.p)

    __radd__ = __add__

    def __neg__(self):
        return Mod(-self.v, self.p)

    def __sub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        return Mod(self.v - o.v, self.p)

    def __rsub__(self, other):
        return -self + other

    def __mul__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        return Mod(self.v * o.v, self.p)

    __rmul__ = __mul__

    def inverse(self):
        g, s, _ = xgcd(self.v, self.p)
        if g != 1:
            raise ZeroDivisionError("not invertible mod %d" % self.p)
        return Mod(s, self.p)

    def __truediv__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, e):
        assert isinstance(e, int)
        if e < 0:
            return self.inverse() ** (-e)
        return Mod(pow(self.v, e, self.p), self.p)

    def __eq__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        return self.v == o.v

    def __bool__(self):
        return self.v != 0

    def __hash__(self):
        return hash((self.v, self.p, "Mod"))

    def __repr__(self):
        return "Mod(%d, %d)" % (self.v, self.p)


def sqrt_minus_one(p):
    """The canonical square root of -1 in GF(p): the smallest one.

    Requires p = 1 mod 4.
    """
    if p % 4 != 1:
        raise ValueError("no square root of -1 mod %d" % p)
    best = None
    for x in range(2, p):
        if x * x % p == p - 1:
            best = x
            break
    return Mod(best, p)


class QI:
    """Gaussian rational a + b*i, a and b arbitrary-precision rationals."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        object.__setattr__(self, "re", Fraction(re))
        object.__setattr__(self, "im", Fraction(im))

    def __setattr__(self, *a):
        raise AttributeError("QI is immutable")

    @staticmethod
    def _lift(other):
        if isinstance(other, QI):
            return other
        if isinstance(other, (int, Fraction)):
            return QI(other)
        return NotImplemented

    def __add__(self, other):
        o = QI._lift(other)
        if o is NotImplemented:
            return NotImplemented
        return QI(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __neg__(self):
        return QI(-self.re, -self.im)

    def __sub__(self, other):
        o = QI._lift(other)
        if o is NotImplemented:
            return NotImplemented
        return QI(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        return -self + other

    def __mul__(self, other):
        o = QI._lift(other)
        if o is NotImplemented:
            return NotImplemented
        return QI(self.re * o.re - self.im * o.im,
                  self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def conj(self):
        return QI(self.re, -self.im)

    def norm(self):
        return self.re * self.re + self.im * self.im

    def inverse(self):
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("0 in Q(i)")
        return QI(self.re / n, -self.im / n)

    def __truediv__(self, other):
        o = QI._lift(other)
        if o is NotImplemented:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, e):
        assert isinstance(e, int)
        if e < 0:
            return self.inverse() ** (-e)
        r = QI(1)
        b = self
        while e:
            if e & 1:
                r = r * b
            b = b * b
            e >>= 1
        return r

    def __eq__(self, other):
        o = QI._lift(other)
        if o is NotImplemented:
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __bool__(self):
        return self.re != 0 or self.im != 0

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im, "QI"))

    def __repr__(self):
        if self.im == 0:
            return "QI(%s)" % self.re
        return "QI(%s, %s)" % (self.re, self.im)


I = QI(0, 1)


class F4:
    """Element a + b*w of the field with four elements, w^2 = w + 1."""

    __slots__ = ("a", "b")

    def __init__(self, a=0, b=0):
        object.__setattr__(self, "a", a % 2)
        object.__setattr__(self, "b", b % 2)

    def __setattr__(self, *a):
        raise AttributeError("F4 is immutable")

    @staticmethod
    def _lift(other):
        if isinstance(other, F4):
            return other
        if isinstance(other, int):
            return F4(other)
        return NotImplemented

    def __add__(self, other):
        o = F4._lift(other)
        if o is NotImplemented:
            return NotImplemented
        return F4(self.a ^ o.a, self.b ^ o.b)

    __radd__ = __add__
    __sub__ = __add__
    __rsub__ = __add__

    def __neg__(self):
        return self

    def __mul__(self, other):
        o = F4._lift(other)
        if o is NotImplemented:
            return NotImplemented
        # (a+bw)(c+dw) = ac + (ad+bc)w + bd w^2,  w^2 = w+1
        a, b, c, d = self.a, self.b, o.a, o.b
        return F4((a * c + b * d) % 2, (a * d + b * c + b * d) % 2)

    __rmul__ = __mul__

    def inverse(self):
        if not self:
            raise ZeroDivisionError("0 in F4")
        # x^3 = 1 for x != 0, so x^-1 = x^2
        return self * self

    def __truediv__(self, other):
        o = F4._lift(other)
        if o is NotImplemented:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, e):
        assert isinstance(e, int)
        if e < 0:
            return self.inverse() ** (-e)
        r = F4(1)
        b = self
        while e:
            if e & 1:
                r = r * b
            b = b * b
            e >>= 1
        return r

    def __eq__(self, other):
        o = F4._lift(other)
        if o is NotImplemented:
            return NotImplemented
        return self.a == o.a and self.b == o.b

    def __bool__(self):
        return self.a != 0 or self.b != 0

    def __hash__(self):
        return hash((self.a, self.b, "F4"))

    def __repr__(self):
        return {(0, 0): "F4(0)", (1, 0): "F4(1)",
                (0, 1): "w", (1, 1): "w+1"}[(self.a, self.b)]


W = F4(0, 1)

F4_ELEMENTS = (F4(0), F4(1), W, W + 1)


def char_of(x):
    """Characteristic of the field a sample element lives in."""
    if isinstance(x, Mod):
        return x.p
    if isinstance(x, F4):
        return 2
    if isinstance(x, (int, Fraction, QI)):
        return 0
    # rational function fields and similar wrappers expose .char
    ch = getattr(x, "char", None)
    if ch is not None:
        return ch() if callable(ch) else ch
    raise TypeError("unknown scalar type %r" % type(x))


def one_like(x):
    """Multiplicative identity of the field of x."""
    if isinstance(x, Mod):
        return Mod(1, x.p)
    if isinstance(x, F4):
        return F4(1)
    if isinstance(x, QI):
        return QI(1)
    if isinstance(x, (int, Fraction)):
        return Fraction(1)
    o = getattr(x, "one", None)
    if o is not None:
        return o() if callable(o) else o
    raise TypeError("unknown scalar type %r" % type(x))


def from_int(one, n):
    """Image of the integer n in the field whose identity is `one`."""
    if n >= 0:
        r = one * 0
        for _ in range(n):
            r = r + one
        return r
    return -from_int(one, -n)
