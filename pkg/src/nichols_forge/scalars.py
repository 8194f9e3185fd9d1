"""Exact coefficient arithmetic.

Rationals are :class:`fractions.Fraction`.  On top of them this module adds
Gaussian rationals (needed for square roots such as ``sqrt(-1)``) and
polynomials in the two deformation parameters ``Lambda`` and ``Gamma``
with Gaussian-rational coefficients.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational as _RationalABC
from typing import Dict, Iterable, Tuple, Union

Rational = Fraction

Scalar = Union[int, Fraction, "GaussRational"]


def to_fraction(value) -> Fraction:
    """Parse ints, Fractions and strings such as ``"-3/4"``."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    if isinstance(value, _RationalABC):
        return Fraction(value.numerator, value.denominator)
    raise TypeError(f"cannot interpret {value!r} as an exact rational")


def exact_div(a, b):
    """Exact division that keeps plain ints when the quotient is integral."""
    if isinstance(a, int) and isinstance(b, int):
        if b == 0:
            raise ZeroDivisionError("division by zero")
        q, r = divmod(a, b)
        return q if r == 0 else Fraction(a, b)
    if isinstance(b, int):
        b = Fraction(b)
    return a / b


class GaussRational:
    """An element ``re + im*i`` of Q(i)."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = to_fraction(re)
        self.im = to_fraction(im)

    @classmethod
    def coerce(cls, value) -> "GaussRational":
        if isinstance(value, GaussRational):
            return value
        return cls(value, 0)

    # arithmetic -----------------------------------------------------------
    def __add__(self, other):
        if isinstance(other, GaussRational):
            return GaussRational(self.re + other.re, self.im + other.im)
        if isinstance(other, (int, Fraction)):
            return GaussRational(self.re + other, self.im)
        return NotImplemented

    __radd__ = __add__

    def __neg__(self):
        return GaussRational(-self.re, -self.im)

    def __sub__(self, other):
        if isinstance(other, (GaussRational, int, Fraction)):
            return self + (-other)
        return NotImplemented

    def __rsub__(self, other):
        if isinstance(other, (int, Fraction)):
            return GaussRational(other - self.re, -self.im)
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, GaussRational):
            return GaussRational(self.re * other.re - self.im * other.im,
                                 self.re * other.im + self.im * other.re)
        if isinstance(other, (int, Fraction)):
            return GaussRational(self.re * other, self.im * other)
        return NotImplemented

    __rmul__ = __mul__

    def conjugate(self) -> "GaussRational":
        return GaussRational(self.re, -self.im)

    def norm(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    def inverse(self) -> "GaussRational":
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("inverse of zero")
        return GaussRational(self.re / n, -self.im / n)

    def __truediv__(self, other):
        if isinstance(other, GaussRational):
            return self * other.inverse()
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("division by zero")
            return GaussRational(self.re / other, self.im / other)
        return NotImplemented

    def __rtruediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return GaussRational(other) * self.inverse()
        return NotImplemented

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        result = GaussRational(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # comparison / hashing ---------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, GaussRational):
            return self.re == other.re and self.im == other.im
        if isinstance(other, (int, Fraction)):
            return self.im == 0 and self.re == other
        return NotImplemented

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def is_real(self) -> bool:
        return self.im == 0

    def simplify(self):
        """Return a plain int/Fraction when the value is real."""
        if self.im != 0:
            return self
        if self.re.denominator == 1:
            return self.re.numerator
        return self.re

    def __repr__(self):
        return f"GaussRational({self})"

    def __str__(self):
        if self.im == 0:
            return str(self.re)
        if self.re == 0:
            return f"{self.im}*i"
        sign = "+" if self.im > 0 else "-"
        return f"{self.re}{sign}{abs(self.im)}*i"

    # serialization ------------------------------------------------------------
    def to_json(self) -> dict:
        return {"re": _frac_str(self.re), "im": _frac_str(self.im)}

    @classmethod
    def from_json(cls, data) -> "GaussRational":
        if isinstance(data, dict):
            return cls(data.get("re", "0"), data.get("im", "0"))
        return parse_scalar(data)


I = GaussRational(0, 1)


def _frac_str(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def parse_scalar(text) -> GaussRational:
    """Parse ``"3/4"``, ``"-1"``, ``"i"``, ``"-2*i"``, ``"1/2+3/4*i"``."""
    if isinstance(text, GaussRational):
        return text
    if isinstance(text, (int, Fraction)):
        return GaussRational(text)
    if isinstance(text, dict):
        return GaussRational.from_json(text)
    s = str(text).replace(" ", "")
    if not s:
        raise ValueError("empty scalar")
    if not s.endswith("i"):
        return GaussRational(Fraction(s))
    body = s[:-1].rstrip("*")
    # split at the last sign that is not the leading one
    cut = max(body.rfind("+", 1), body.rfind("-", 1))
    if cut > 0 and body[cut - 1] not in "eE/":
        re_part, im_part = body[:cut], body[cut:]
    else:
        re_part, im_part = "0", body
    if im_part in ("", "+"):
        im_part = "1"
    elif im_part == "-":
        im_part = "-1"
    return GaussRational(Fraction(re_part), Fraction(im_part))


def scalar_to_str(x) -> str:
    if isinstance(x, GaussRational):
        return str(x)
    return str(to_fraction(x))


def gauss_sqrt(x) -> GaussRational | None:
    """Exact square root in Q(i), or ``None`` when there is none.

    For ``x = p + qi`` a root ``a + bi`` needs ``|x|`` rational, then
    ``a^2 = (p + |x|)/2`` and ``b^2 = (|x| - p)/2``.  The root with ``a > 0``
    (or ``b > 0`` when ``a = 0``) is returned.
    """
    x = GaussRational.coerce(x)
    norm = _frac_sqrt(x.re * x.re + x.im * x.im)
    if norm is None:
        return None
    a = _frac_sqrt((x.re + norm) / 2)
    b = _frac_sqrt((norm - x.re) / 2)
    if a is None or b is None:
        return None
    if x.im < 0:
        b = -b
    return GaussRational(a, b)


def _frac_sqrt(x: Fraction) -> Fraction | None:
    from math import isqrt
    n, d = x.numerator, x.denominator
    rn, rd = isqrt(n), isqrt(d)
    if rn * rn == n and rd * rd == d:
        return Fraction(rn, rd)
    return None


Monomial = Tuple[int, int]


class ParamScalar:
    """Polynomial in ``Lambda`` and ``Gamma`` over Q(i).

    Terms are stored sparsely as ``{(a, b): coefficient}`` for
    ``Lambda**a * Gamma**b``; zero coefficients are never stored.
    Instances are immutable.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Dict[Monomial, object] | None = None):
        clean = {}
        if terms:
            for mono, c in terms.items():
                c = _norm_coef(c)
                if c:
                    clean[(int(mono[0]), int(mono[1]))] = c
        self._terms = clean
        self._hash = None

    @classmethod
    def const(cls, c) -> "ParamScalar":
        return cls({(0, 0): c})

    @classmethod
    def coerce(cls, value) -> "ParamScalar":
        if isinstance(value, ParamScalar):
            return value
        return cls.const(value)

    @property
    def terms(self) -> Dict[Monomial, object]:
        return dict(self._terms)

    def __iter__(self):
        return iter(sorted(self._terms.items()))

    def is_zero(self) -> bool:
        return not self._terms

    __bool__ = lambda self: bool(self._terms)

    def degree(self) -> int:
        return max((a + b for a, b in self._terms), default=-1)

    def constant_value(self):
        if any(m != (0, 0) for m in self._terms):
            raise ValueError(f"{self} is not constant")
        return self._terms.get((0, 0), 0)

    def is_constant(self) -> bool:
        return all(m == (0, 0) for m in self._terms)

    def __add__(self, other):
        other = _as_param(other)
        if other is None:
            return NotImplemented
        out = dict(self._terms)
        for m, c in other._terms.items():
            out[m] = out.get(m, 0) + c
        return ParamScalar(out)

    __radd__ = __add__

    def __neg__(self):
        return ParamScalar({m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        other = _as_param(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _as_param(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = _as_param(other)
        if other is None:
            return NotImplemented
        if not self._terms or not other._terms:
            return ZERO
        out: Dict[Monomial, object] = {}
        for (a1, b1), c1 in self._terms.items():
            for (a2, b2), c2 in other._terms.items():
                key = (a1 + a2, b1 + b2)
                out[key] = out.get(key, 0) + c1 * c2
        return ParamScalar(out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, ParamScalar):
            other = other.constant_value()
        return ParamScalar({m: _div_coef(c, other) for m, c in self._terms.items()})

    def __pow__(self, k: int):
        result = ONE
        for _ in range(k):
            result = result * self
        return result

    def __eq__(self, other):
        other = _as_param(other)
        if other is None:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def evaluate(self, lam=0, gam=0):
        """Substitute ``Lambda=lam`` and ``Gamma=gam``."""
        total = 0
        for (a, b), c in self._terms.items():
            total = total + c * _ipow(lam, a) * _ipow(gam, b)
        return _norm_coef(total)

    def __repr__(self):
        return f"ParamScalar({self})"

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for (a, b), c in sorted(self._terms.items(), reverse=True):
            mono = "*".join(
                s for s in (
                    "L" if a == 1 else (f"L^{a}" if a else ""),
                    "G" if b == 1 else (f"G^{b}" if b else ""),
                ) if s
            )
            cs = scalar_to_str(c)
            if not mono:
                parts.append(cs)
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"({cs})*{mono}")
        return " + ".join(parts)

    def to_json(self) -> dict:
        rows = []
        for (a, b), c in sorted(self._terms.items()):
            g = GaussRational.coerce(c)
            rows.append([a, b, _frac_str(g.re), _frac_str(g.im)])
        return {"poly": rows}

    @classmethod
    def from_json(cls, data) -> "ParamScalar":
        if isinstance(data, dict) and "poly" in data:
            return cls({(a, b): GaussRational(re, im) for a, b, re, im in data["poly"]})
        return cls.const(parse_scalar(data))


def _norm_coef(c):
    if isinstance(c, GaussRational):
        return c.simplify()
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


def _div_coef(c, d):
    if isinstance(c, GaussRational) or isinstance(d, GaussRational):
        return GaussRational.coerce(c) / GaussRational.coerce(d)
    return exact_div(c, d)


def _ipow(x, k: int):
    result = 1
    for _ in range(k):
        result = result * x
    return result


def _as_param(value) -> ParamScalar | None:
    if isinstance(value, ParamScalar):
        return value
    if isinstance(value, (int, Fraction, GaussRational)):
        return ParamScalar.const(value)
    return None


ZERO = ParamScalar()
ONE = ParamScalar.const(1)
LAMBDA = ParamScalar({(1, 0): 1})
GAMMA = ParamScalar({(0, 1): 1})


def scalar_arithmetic(a, b, op: str) -> ParamScalar:
    """Dispatch ``add``/``mul``/``neg`` on :class:`ParamScalar` operands."""
    a = ParamScalar.coerce(a)
    if op == "add":
        return a + ParamScalar.coerce(b)
    if op == "mul":
        return a * ParamScalar.coerce(b)
    if op == "neg":
        return -a
    raise ValueError(f"unknown op {op!r}")


def evaluate(p, lam, gam):
    return ParamScalar.coerce(p).evaluate(lam, gam)


def field_values(values: Iterable) -> list:
    """Simplify a batch of Gaussian rationals to ints/Fractions where real."""
    return [_norm_coef(v) for v in values]
