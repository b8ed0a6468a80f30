"""Truncated exponential-generating-function algebra.

Works on ordinary coefficient lists c[k] (the EGF coefficient of a sequence
f is f(k)/k!). This gives a computation route for rational powers that is
independent of the convolution-ring recursions: exp and log of truncated
series instead of root extraction, so the two paths cross-check each other.
"""
from __future__ import annotations

from fractions import Fraction
from math import factorial

from .seqcore import TruncSeq

Series = list[Fraction]


def seq_to_egf(f: TruncSeq) -> Series:
    return [f[k] / factorial(k) for k in range(len(f))]


def egf_to_seq(c: Series) -> TruncSeq:
    return TruncSeq(c[k] * factorial(k) for k in range(len(c)))


def series_mul(a: Series, b: Series) -> Series:
    n = min(len(a), len(b))
    return [sum(a[i] * b[k - i] for i in range(k + 1)) for k in range(n)]


def series_recip(a: Series) -> Series:
    if a[0] == 0:
        raise ZeroDivisionError("series has no reciprocal: constant term is 0")
    inv0 = Fraction(1) / a[0]
    q = [inv0]
    for k in range(1, len(a)):
        q.append(-inv0 * sum(a[i] * q[k - i] for i in range(1, k + 1)))
    return q


def series_deriv(a: Series) -> Series:
    return [(i + 1) * a[i + 1] for i in range(len(a) - 1)]


def series_log(a: Series) -> Series:
    """log of a series with constant term 1, via integrating a'/a."""
    if a[0] != 1:
        raise ValueError("series_log needs constant term 1")
    q = series_mul(series_deriv(a), series_recip(a))
    out = [Fraction(0)]
    for k in range(1, len(a)):
        out.append(q[k - 1] / k)
    return out


def series_exp(u: Series) -> Series:
    """exp of a series with constant term 0: E' = E u'."""
    if u[0] != 0:
        raise ValueError("series_exp needs constant term 0")
    E = [Fraction(1)]
    for k in range(1, len(u)):
        E.append(sum(i * u[i] * E[k - i] for i in range(1, k + 1)) / k)
    return E


def series_pow_rat(a: Series, p: int, q: int) -> Series:
    """a^(p/q) for a series with constant term 1."""
    return series_exp([Fraction(p, q) * c for c in series_log(a)])


def norlund_egf(p: int, q: int, depth: int) -> TruncSeq:
    """Coefficient sequence of (t/(e^t - 1))^(p/q), built from scratch.

    The base series is the reciprocal of sum t^k/(k+1)!, so this shares no
    code with the convolution-ring Bernoulli machinery.
    """
    base = series_recip([Fraction(1, factorial(k + 1)) for k in range(depth + 1)])
    return egf_to_seq(series_pow_rat(base, p, q))
