"""Dense univariate polynomials over exact rationals.

RatPoly is the second coefficient ring next to Fraction: it carries the
symbolic parameter of polynomial families (Bernoulli/Euler polynomials and
friends) through the same sequence code paths that produce plain numbers.
All arithmetic is exact; there is no floating-point anywhere.
"""
from __future__ import annotations

from fractions import Fraction


def _as_fraction(v) -> Fraction:
    if isinstance(v, Fraction):
        return v
    if isinstance(v, int):
        return Fraction(v)
    raise TypeError(f"not a rational scalar: {v!r}")


class RatPoly:
    """Polynomial in one indeterminate with Fraction coefficients.

    Coefficients are stored dense, index = degree, trailing zeros stripped;
    the zero polynomial has an empty coefficient tuple. Instances are
    immutable and interoperate with int/Fraction scalars on either side of
    +, -, *, / and ==.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs=()):
        cs = [_as_fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "_coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("RatPoly is immutable")

    @classmethod
    def const(cls, v) -> "RatPoly":
        return cls((_as_fraction(v),))

    @classmethod
    def x(cls) -> "RatPoly":
        """The indeterminate itself."""
        return cls((Fraction(0), Fraction(1)))

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return self._coeffs

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self._coeffs) - 1

    def is_zero(self) -> bool:
        return not self._coeffs

    def is_constant(self) -> bool:
        return len(self._coeffs) <= 1

    def constant_value(self) -> Fraction:
        """Value of a constant polynomial (0 for the zero polynomial)."""
        if not self.is_constant():
            raise ValueError("polynomial is not constant")
        return self._coeffs[0] if self._coeffs else Fraction(0)

    def coeff(self, k: int) -> Fraction:
        return self._coeffs[k] if 0 <= k < len(self._coeffs) else Fraction(0)

    @staticmethod
    def _coerce(other):
        if isinstance(other, RatPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return RatPoly((other,))
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        n = max(len(self._coeffs), len(o._coeffs))
        return RatPoly(self.coeff(k) + o.coeff(k) for k in range(n))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        n = max(len(self._coeffs), len(o._coeffs))
        return RatPoly(self.coeff(k) - o.coeff(k) for k in range(n))

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __neg__(self):
        return RatPoly(-c for c in self._coeffs)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.is_zero() or o.is_zero():
            return RatPoly()
        out = [Fraction(0)] * (len(self._coeffs) + len(o._coeffs) - 1)
        for i, a in enumerate(self._coeffs):
            if a == 0:
                continue
            for j, b in enumerate(o._coeffs):
                out[i + j] += a * b
        return RatPoly(out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        # scalar division only; polynomial divisors are not part of the ring contract
        if isinstance(other, RatPoly):
            if other.is_constant() and not other.is_zero():
                other = other.constant_value()
            else:
                return NotImplemented
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("division of RatPoly by zero")
            inv = Fraction(1, 1) / other
            return RatPoly(c * inv for c in self._coeffs)
        return NotImplemented

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("RatPoly powers must be nonnegative integers")
        result = RatPoly((Fraction(1),))
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self._coeffs == o._coeffs

    def __hash__(self):
        # constants hash like their Fraction value so mixed-ring dict keys behave
        if self.is_constant():
            return hash(self.constant_value())
        return hash(self._coeffs)

    def evaluate(self, x) -> Fraction:
        """Horner evaluation at a rational point."""
        x = _as_fraction(x)
        acc = Fraction(0)
        for c in reversed(self._coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> "RatPoly":
        return RatPoly(k * self._coeffs[k] for k in range(1, len(self._coeffs)))

    def compose_affine(self, a, b) -> "RatPoly":
        """Substitute a*x + b for the indeterminate."""
        a = _as_fraction(a)
        b = _as_fraction(b)
        inner = RatPoly((b, a))
        acc = RatPoly()
        for c in reversed(self._coeffs):
            acc = acc * inner + c
        return acc

    def __repr__(self):
        return f"RatPoly({list(self._coeffs)!r})"

    def __str__(self):
        if self.is_zero():
            return "0"
        parts = []
        for k in range(self.degree, -1, -1):
            c = self._coeffs[k]
            if c == 0:
                continue
            if k == 0:
                term = str(c)
            else:
                mag = "" if abs(c) == 1 else f"{abs(c)}*"
                var = "x" if k == 1 else f"x^{k}"
                term = f"{mag}{var}"
                if c < 0:
                    term = "-" + term
            if not parts:
                parts.append(term)
            elif term.startswith("-"):
                parts.append("- " + term[1:])
            else:
                parts.append("+ " + term)
        return " ".join(parts)


ZERO = RatPoly()
ONE = RatPoly.const(1)
X = RatPoly.x()
