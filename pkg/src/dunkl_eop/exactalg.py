"""Exact algebra over the rationals.

Three layers, all immutable:

* :class:`Poly` -- dense polynomials in ``z`` with :class:`fractions.Fraction`
  coefficients (index = degree).
* :class:`RatFunc` -- reduced rational functions ``num/den`` in ``z`` with a
  monic denominator, so equality is plain field comparison.
* :class:`QRFunc` -- quasi-rational functions of ``x``::

      x**rho * exp(s*z/2) * (R0(z) + x*R1(z)),    z = x**2

  This class is closed under d/dx, products, reciprocals and (for ``rho == 0``)
  the reflection ``x -> -x``.  Every wavefunction and operator image in the
  package lives here.

Canonical form for :class:`QRFunc` keeps ``0 <= rho < 1``: integer powers of
``x`` are absorbed into the parity parts (an odd power swaps them).
"""
from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Union

Rat = Fraction

Scalar = Union[int, Fraction]


def as_rat(value) -> Fraction:
    """Coerce an int, Fraction or ``"p/q"`` string to a Fraction.

    Floats are rejected on purpose: parameters must stay exact.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"expected an exact rational, got {type(value).__name__}")


class Poly:
    """Dense polynomial in ``z`` with exact rational coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        c = [as_rat(a) for a in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs = tuple(c)

    @classmethod
    def _raw(cls, coeffs: tuple) -> "Poly":
        # coeffs already Fractions and trimmed
        p = object.__new__(cls)
        p.coeffs = coeffs
        return p

    @classmethod
    def const(cls, c) -> "Poly":
        return cls((c,))

    @classmethod
    def monomial(cls, k: int, c=1) -> "Poly":
        return cls([0] * k + [c])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lead(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == Poly.const(other).coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"Poly({self})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mono = "" if k == 0 else ("z" if k == 1 else f"z^{k}")
            if mono and c == 1:
                terms.append(mono)
            elif mono and c == -1:
                terms.append("-" + mono)
            elif mono:
                terms.append(f"({c})*{mono}" if c.denominator != 1 or c < 0 else f"{c}*{mono}")
            else:
                terms.append(str(c))
        return " + ".join(terms)

    def __neg__(self):
        return Poly._raw(tuple(-a for a in self.coeffs))

    def __add__(self, other):
        other = _to_poly(other)
        if other is None:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, v in enumerate(b):
            out[i] += v
        return Poly(out)

    __radd__ = __add__

    def __sub__(self, other):
        other = _to_poly(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return Poly._raw(())
            return Poly._raw(tuple(a * other for a in self.coeffs))
        if not isinstance(other, Poly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly._raw(())
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x == 0:
                continue
            for j, y in enumerate(b):
                out[i + j] += x * y
        return Poly._raw(tuple(out))

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power of a polynomial")
        out = Poly.const(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __divmod__(self, other):
        other = _to_poly(other)
        if other is None:
            return NotImplemented
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        db = other.degree
        lead = other.lead
        if len(rem) - 1 < db:
            return Poly._raw(()), self
        quot = [Fraction(0)] * (len(rem) - db)
        bc = other.coeffs
        for k in range(len(rem) - 1 - db, -1, -1):
            q = rem[k + db] / lead
            quot[k] = q
            if q:
                for j in range(db + 1):
                    rem[k + j] -= q * bc[j]
        return Poly(quot), Poly(rem[:db])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def exact_div(self, other: "Poly") -> "Poly":
        q, r = divmod(self, other)
        if r:
            raise ArithmeticError(f"{other} does not divide {self}")
        return q

    def monic(self) -> "Poly":
        if not self.coeffs:
            return self
        lead = self.lead
        if lead == 1:
            return self
        return Poly._raw(tuple(a / lead for a in self.coeffs))

    def derivative(self) -> "Poly":
        return Poly._raw(tuple(k * a for k, a in enumerate(self.coeffs) if k))

    def reflect_arg(self) -> "Poly":
        """Coefficients of ``p(-z)``."""
        return Poly._raw(tuple(-a if k % 2 else a for k, a in enumerate(self.coeffs)))

    def shift_z(self, k: int) -> "Poly":
        """Multiply by ``z**k`` (k >= 0)."""
        if not self.coeffs or k == 0:
            return self
        return Poly._raw((Fraction(0),) * k + self.coeffs)

    def lowest_power(self) -> int:
        for k, a in enumerate(self.coeffs):
            if a:
                return k
        return 0

    def __call__(self, x):
        """Evaluate with Horner's rule; exact for Fractions, float otherwise."""
        if isinstance(x, (int, Fraction)):
            acc = Fraction(0)
            for a in reversed(self.coeffs):
                acc = acc * x + a
            return acc
        acc = 0.0
        for a in reversed(self.float_coeffs()):
            acc = acc * x + a
        return acc

    def float_coeffs(self) -> tuple:
        return tuple(float(a) for a in self.coeffs)


def _to_poly(value):
    if isinstance(value, Poly):
        return value
    if isinstance(value, (int, Fraction)):
        return Poly.const(value)
    return None


Z = Poly((0, 1))
ONE = Poly((1,))


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic gcd; ``gcd(0, 0) == 0``."""
    a, b = a.monic(), b.monic()
    while b:
        a, b = b, (a % b).monic()
    return a


def poly_arith(a: Poly, b: Poly, op: str):
    """Dispatch helper: ``op`` in {add, sub, mul, divmod, gcd}."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "divmod":
        return divmod(a, b)
    if op == "gcd":
        return poly_gcd(a, b)
    raise ValueError(f"unknown polynomial operation {op!r}")


class RatFunc:
    """Reduced rational function of ``z`` with monic denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        num = _to_poly(num) if not isinstance(num, Poly) else num
        if num is None:
            raise TypeError("numerator must be a Poly or rational scalar")
        if den is None:
            den = ONE
        else:
            den = _to_poly(den) if not isinstance(den, Poly) else den
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if num.is_zero():
            self.num, self.den = num, ONE
            return
        if den.degree > 0:
            g = poly_gcd(num, den)
            if g.degree > 0:
                num = num.exact_div(g)
                den = den.exact_div(g)
        lead = den.lead
        if lead != 1:
            num = num * (1 / lead)
            den = den.monic()
        self.num, self.den = num, den

    @classmethod
    def _raw(cls, num: Poly, den: Poly) -> "RatFunc":
        r = object.__new__(cls)
        r.num, r.den = num, den
        return r

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __bool__(self):
        return not self.num.is_zero()

    def is_poly(self) -> bool:
        return self.den.degree == 0

    def __eq__(self, other):
        if not isinstance(other, RatFunc):
            other = _to_ratfunc(other)
            if other is None:
                return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __repr__(self):
        if self.den == ONE:
            return f"RatFunc({self.num})"
        return f"RatFunc(({self.num}) / ({self.den}))"

    def __neg__(self):
        return RatFunc._raw(-self.num, self.den)

    def __add__(self, other):
        other = _to_ratfunc(other)
        if other is None:
            return NotImplemented
        if other.is_zero():
            return self
        if self.is_zero():
            return other
        if self.den == other.den:
            return RatFunc(self.num + other.num, self.den)
        g = poly_gcd(self.den, other.den)
        if g.degree > 0:
            d1 = self.den.exact_div(g)
            d2 = other.den.exact_div(g)
            return RatFunc(self.num * d2 + other.num * d1, self.den * d2)
        return RatFunc(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __sub__(self, other):
        other = _to_ratfunc(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return RatFunc._raw(Poly(), ONE)
            return RatFunc._raw(self.num * as_rat(other), self.den)
        other = _to_ratfunc(other)
        if other is None:
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return RatFunc._raw(Poly(), ONE)
        # cross-cancel before multiplying to keep degrees small
        g1 = poly_gcd(self.num, other.den)
        g2 = poly_gcd(other.num, self.den)
        n1, d2 = self.num, other.den
        if g1.degree > 0:
            n1, d2 = n1.exact_div(g1), d2.exact_div(g1)
        n2, d1 = other.num, self.den
        if g2.degree > 0:
            n2, d1 = n2.exact_div(g2), d1.exact_div(g2)
        return RatFunc._raw(n1 * n2, d1 * d2)

    __rmul__ = __mul__

    def reciprocal(self) -> "RatFunc":
        if self.is_zero():
            raise ZeroDivisionError("reciprocal of zero rational function")
        return RatFunc(self.den, self.num)

    def __truediv__(self, other):
        other = _to_ratfunc(other)
        if other is None:
            return NotImplemented
        return self * other.reciprocal()

    def __rtruediv__(self, other):
        return _to_ratfunc(other) * self.reciprocal()

    def __pow__(self, k: int):
        if k < 0:
            return self.reciprocal() ** (-k)
        return RatFunc._raw(self.num ** k, self.den ** k)

    def derivative(self) -> "RatFunc":
        n, d = self.num, self.den
        if d.degree == 0:
            return RatFunc._raw(n.derivative(), d)
        return RatFunc(n.derivative() * d - n * d.derivative(), d * d)

    def shift_z(self, k: int) -> "RatFunc":
        """Multiply by ``z**k`` for any integer ``k``."""
        if k == 0 or self.is_zero():
            return self
        if k > 0:
            return RatFunc(self.num.shift_z(k), self.den)
        return RatFunc(self.num, self.den.shift_z(-k))

    def reflect_arg(self) -> "RatFunc":
        """``R(-z)``."""
        return RatFunc(self.num.reflect_arg(), self.den.reflect_arg())

    def __call__(self, z):
        d = self.den(z)
        if d == 0:
            raise ZeroDivisionError(f"denominator vanishes at z = {z}")
        return self.num(z) / d

    def num_degree_below_den(self) -> bool:
        return self.is_zero() or self.num.degree < self.den.degree


def _to_ratfunc(value):
    if isinstance(value, RatFunc):
        return value
    if isinstance(value, Poly):
        return RatFunc._raw(value, ONE)
    if isinstance(value, (int, Fraction)):
        return RatFunc._raw(Poly.const(value), ONE)
    return None


def ratfunc_normalize(num: Poly, den: Poly) -> RatFunc:
    return RatFunc(num, den)


RZERO = RatFunc(0)
RONE = RatFunc(1)
RZ = RatFunc(Z)


class QRFunc:
    """``x**rho * exp(s*z/2) * (even_part(z) + x*odd_part(z))`` with ``z = x**2``.

    The zero function has the canonical representative ``rho = s = 0`` and is
    compatible with every other function under addition.
    """

    __slots__ = ("rho", "s", "even_part", "odd_part")

    def __init__(self, rho=0, s=0, even_part=RZERO, odd_part=RZERO):
        rho, s = as_rat(rho), as_rat(s)
        even = _to_ratfunc(even_part)
        odd = _to_ratfunc(odd_part)
        if even is None or odd is None:
            raise TypeError("parity parts must be RatFunc, Poly or rational scalars")
        if even.is_zero() and odd.is_zero():
            self.rho, self.s, self.even_part, self.odd_part = Fraction(0), Fraction(0), RZERO, RZERO
            return
        k = math.floor(rho)
        if k:
            rho -= k
            if k % 2 == 0:
                even, odd = even.shift_z(k // 2), odd.shift_z(k // 2)
            else:
                # x**k = x * z**((k-1)//2) and x*(A + xB) = zB + xA
                h = (k - 1) // 2
                even, odd = odd.shift_z(h + 1), even.shift_z(h)
        self.rho, self.s, self.even_part, self.odd_part = rho, s, even, odd

    @classmethod
    def gaussian(cls, s=-1, even_part=RONE, odd_part=RZERO, rho=0) -> "QRFunc":
        return cls(rho, s, even_part, odd_part)

    @classmethod
    def x_power(cls, k) -> "QRFunc":
        return cls(k, 0, RONE)

    @classmethod
    def even(cls, r, s=0) -> "QRFunc":
        return cls(0, s, r)

    def is_zero(self) -> bool:
        return self.even_part.is_zero() and self.odd_part.is_zero()

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        if not isinstance(other, QRFunc):
            return NotImplemented
        return (self.rho == other.rho and self.s == other.s
                and self.even_part == other.even_part and self.odd_part == other.odd_part)

    def __hash__(self):
        return hash((self.rho, self.s, self.even_part, self.odd_part))

    def __repr__(self):
        return (f"QRFunc(rho={self.rho}, s={self.s}, even={self.even_part!r}, "
                f"odd={self.odd_part!r})")

    def _check_compatible(self, other: "QRFunc"):
        if self.s != other.s:
            raise ValueError(f"incompatible Gaussian factors: s={self.s} vs s={other.s}")
        if self.rho != other.rho:
            raise ValueError(f"incompatible x-power classes: rho={self.rho} vs rho={other.rho}")

    def __add__(self, other):
        if not isinstance(other, QRFunc):
            return NotImplemented
        if other.is_zero():
            return self
        if self.is_zero():
            return other
        self._check_compatible(other)
        return QRFunc(self.rho, self.s, self.even_part + other.even_part,
                      self.odd_part + other.odd_part)

    def __neg__(self):
        return QRFunc(self.rho, self.s, -self.even_part, -self.odd_part)

    def __sub__(self, other):
        if not isinstance(other, QRFunc):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, QRFunc):
            a0, a1 = self.even_part, self.odd_part
            b0, b1 = other.even_part, other.odd_part
            even = a0 * b0 + (a1 * b1).shift_z(1)
            odd = a0 * b1 + a1 * b0
            return QRFunc(self.rho + other.rho, self.s + other.s, even, odd)
        r = _to_ratfunc(other)
        if r is None:
            return NotImplemented
        return QRFunc(self.rho, self.s, self.even_part * r, self.odd_part * r)

    __rmul__ = __mul__

    def times_x(self, k=1) -> "QRFunc":
        """Multiply by ``x**k`` (k any rational)."""
        if self.is_zero():
            return self
        return QRFunc(self.rho + as_rat(k), self.s, self.even_part, self.odd_part)

    def reciprocal(self) -> "QRFunc":
        a, b = self.even_part, self.odd_part
        if a.is_zero() and b.is_zero():
            raise ZeroDivisionError("reciprocal of the zero function")
        norm = a * a - (b * b).shift_z(1)
        return QRFunc(-self.rho, -self.s, a / norm, -b / norm)

    def __truediv__(self, other):
        if isinstance(other, QRFunc):
            return self * other.reciprocal()
        r = _to_ratfunc(other)
        if r is None:
            return NotImplemented
        return self * r.reciprocal()

    def derivative(self) -> "QRFunc":
        """Exact d/dx.

        d/dx[x**r e^{sz/2} R(z)] = x**(r-1) e^{sz/2} [r R + s z R + 2 z R'].
        """
        if self.is_zero():
            return self
        rho, s = self.rho, self.s

        def term(r, part):
            if part.is_zero():
                return RZERO
            out = part * r if r else RZERO
            out = out + (part * s + part.derivative() * 2).shift_z(1)
            return out

        t0 = term(rho, self.even_part)
        t1 = term(rho + 1, self.odd_part)
        return QRFunc(rho - 1, s, t0, t1)

    def reflect(self) -> "QRFunc":
        if self.is_zero():
            return self
        if self.rho != 0:
            raise ValueError(f"reflection undefined for rho = {self.rho}")
        return QRFunc(0, self.s, self.even_part, -self.odd_part)

    def even_component(self) -> "QRFunc":
        self._require_rho0()
        return QRFunc(0, self.s, self.even_part)

    def odd_component(self) -> "QRFunc":
        self._require_rho0()
        return QRFunc(0, self.s, RZERO, self.odd_part)

    def parity(self):
        """+1 / -1 for pure parity, 0 for mixed, None for the zero function."""
        self._require_rho0()
        if self.is_zero():
            return None
        if self.odd_part.is_zero():
            return 1
        if self.even_part.is_zero():
            return -1
        return 0

    def _require_rho0(self):
        if self.rho != 0 and not self.is_zero():
            raise ValueError(f"parity operations need rho = 0, got rho = {self.rho}")


QZERO = QRFunc()


def qr_derivative(f: QRFunc) -> QRFunc:
    return f.derivative()


def qr_reflect(f: QRFunc) -> QRFunc:
    return f.reflect()


def qr_combine(a: QRFunc, b: QRFunc, op: str = "add", ca=1, cb=1) -> QRFunc:
    """``ca*a + cb*b`` (``op='add'``) or ``ca*a - cb*b`` (``op='sub'``)."""
    if op not in ("add", "sub"):
        raise ValueError(f"unknown combination {op!r}")
    left, right = a * as_rat(ca), b * as_rat(cb)
    if not left.is_zero() and not right.is_zero():
        left._check_compatible(right)
    return left + right if op == "add" else left - right
