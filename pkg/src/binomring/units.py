"""The unit group {f : f(0) != 0} under the binomial product.

Inverses, integer and rational powers, unique m-th roots (the group is
torsion-free, so roots are unique when they exist over the rationals), the
membership flags for the standard subgroups, and the direct-sum
decomposition f = v * w * c with v geometric, w vanishing at 1, c scalar.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import NotAUnitError, NotInvertibleInRingError, RootNotRepresentableError
from .poly import RatPoly
from .seqcore import TruncSeq, _pascal_row, bullet, make_eps, make_named, scale


def _unit_reciprocal(v) -> Fraction:
    """1/f(0) for a unit leading coefficient; polynomial units must be constants."""
    if isinstance(v, RatPoly):
        if v.is_zero():
            raise NotAUnitError("f(0) = 0")
        if not v.is_constant():
            raise NotInvertibleInRingError(f"f(0) = {v} is not a constant polynomial")
        v = v.constant_value()
    if v == 0:
        raise NotAUnitError("f(0) = 0")
    return Fraction(1, 1) / v


def inverse(f: TruncSeq) -> TruncSeq:
    """Convolution inverse: g(0) = 1/f(0), g(k) = -(1/f(0)) sum_{m=1}^{k} C(k,m) f(m) g(k-m).

    The sum runs through m = k so that the f(k) g(0) term is included; this is
    what (f * g)(k) = 0 forces for every k >= 1.
    """
    r = _unit_reciprocal(f[0])
    g = [r]
    fv = f.values
    for k in range(1, len(fv)):
        row = _pascal_row(k)
        total = fv[1] * g[k - 1] * row[1]
        for m in range(2, k + 1):
            total = total + row[m] * fv[m] * g[k - m]
        g.append(-r * total)
    return TruncSeq(g)


def power_int(f: TruncSeq, n: int) -> TruncSeq:
    """n-fold bullet power; f^0 = e, negative n inverts f^|n|."""
    if n == 0:
        return make_named("e", f.depth)
    if n < 0:
        return inverse(power_int(f, -n))
    result = None
    base = f
    while n:
        if n & 1:
            result = base if result is None else bullet(result, base)
        n >>= 1
        if n:
            base = bullet(base, base)
    return result


def _int_nth_root(n: int, m: int) -> int | None:
    """Exact integer m-th root of n >= 0, or None."""
    if n in (0, 1):
        return n
    r = 1 << ((n.bit_length() + m - 1) // m)
    while True:
        nr = ((m - 1) * r + n // r ** (m - 1)) // m
        if nr >= r:
            break
        r = nr
    return r if r ** m == n else None


def _rat_mth_root(c: Fraction, m: int) -> Fraction:
    if c == 0:
        raise NotAUnitError("f(0) = 0")
    if c < 0 and m % 2 == 0:
        raise RootNotRepresentableError(f"{c} has no rational {m}-th root")
    sign = -1 if c < 0 else 1
    num = _int_nth_root(abs(c.numerator), m)
    den = _int_nth_root(c.denominator, m)
    if num is None or den is None:
        raise RootNotRepresentableError(f"{c} is not an exact {m}-th power")
    return Fraction(sign * num, den)


def mth_root(f: TruncSeq, m: int) -> TruncSeq:
    """Unique g with g^m = f, requiring f(0) to be an exact rational m-th power.

    The multinomial recursion is evaluated through running partial powers
    g, g^2, ..., g^m instead of enumerating compositions: at step k the
    value (g^m)(k) with the unknown g(k) zeroed out is exactly the sum over
    compositions with every part below k. Cost is O(m K^2) ring operations.
    """
    if m < 1:
        raise ValueError("m must be >= 1")
    lead = f[0]
    if isinstance(lead, RatPoly):
        if not lead.is_constant():
            raise RootNotRepresentableError(f"f(0) = {lead} is not a constant polynomial")
        lead = lead.constant_value()
    g0 = _rat_mth_root(lead, m)
    if m == 1:
        return f
    K = f.depth
    inv_lead = Fraction(1, 1) / (m * g0 ** (m - 1))
    g: list = [g0]
    # pows[j][i] = (g^j)(i), finalized up to the current k
    pows = [[g0 ** j] for j in range(m + 1)]
    for k in range(1, K + 1):
        row = _pascal_row(k)
        # partial powers with g(k) treated as zero
        phat = Fraction(0)
        for j in range(2, m + 1):
            total = phat * g0
            for i in range(1, k):
                total = total + row[i] * pows[j - 1][i] * g[k - i]
            phat = total
        gk = (f[k] - phat) * inv_lead
        g.append(gk)
        pows[0].append(Fraction(0))
        pows[1].append(gk)
        for j in range(2, m + 1):
            total = pows[j - 1][0] * gk
            for i in range(1, k + 1):
                total = total + row[i] * pows[j - 1][i] * g[k - i]
            pows[j].append(total)
    return TruncSeq(g)


def power_rat(f: TruncSeq, p: int, q: int) -> TruncSeq:
    """f^(p/q): the q-th root of f^p. Well defined by torsion-freeness."""
    if q < 1:
        raise ValueError("q must be >= 1")
    return mth_root(power_int(f, p), q)


@dataclass(frozen=True)
class Membership:
    """Subgroup flags: units A, monic units U, scalars C, geometric V, units with f(1)=0 W."""

    in_A: bool
    in_U: bool
    in_C: bool
    in_V: bool
    in_W: bool


def membership(f: TruncSeq) -> Membership:
    f0 = f[0]
    in_A = not (f0 == 0)
    in_U = f0 == 1
    e = make_named("e", f.depth)
    in_C = in_A and f == scale(f0, e)
    # k = 0, 1 hold automatically once f(0) = 1, so geometric needs k >= 2 only
    in_V = in_U and all(f[k] == f[1] ** k for k in range(2, f.depth + 1))
    in_W = in_U and (f.depth == 0 or f[1] == 0)
    return Membership(in_A, in_U, in_C, in_V, in_W)


@dataclass(frozen=True)
class Decomposition:
    """Factors of f = v * w * c with v geometric, w(1) = 0, c = f(0) e."""

    v: TruncSeq
    w: TruncSeq
    c: TruncSeq

    def reassemble(self) -> TruncSeq:
        return bullet(bullet(self.v, self.w), self.c)


def decompose(f: TruncSeq) -> Decomposition:
    """Split a unit into its geometric, depth-one-free, and scalar parts."""
    r = _unit_reciprocal(f[0])
    K = f.depth
    u = scale(r, f)
    u1 = u[1] if K >= 1 else Fraction(0)
    v = make_eps(u1, K)
    w = bullet(make_eps(-u1, K), u)
    c = scale(f[0], make_named("e", K))
    return Decomposition(v=v, w=w, c=c)
