"""q-shifted factorials, q-binomials, and terminating hypergeometric sums.

All evaluation is exact over QQ(i).  Series are only ever summed when they
terminate: a basic series must carry a numerator parameter of the form
``base**(-n)`` and a classical series a nonpositive-integer numerator.
Running into a vanishing denominator factor raises
:class:`~qdetlab.errors.PoleError` naming the offending factor.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import NonTerminatingSeriesError, PoleError
from .gaussian import ONE, ZERO, GaussianRational, to_gq

_TERMINATION_CAP = 512


def q_pochhammer(a, q, n: int) -> GaussianRational:
    """q-shifted factorial (a;q)_n for any integer n.

    Nonnegative n gives prod_{k=0}^{n-1} (1 - a q^k).  Negative n uses the
    finite reciprocal prod_{k=1}^{-n} (1 - a q^{-k})^{-1}; a vanishing factor
    there is a pole.
    """
    a = to_gq(a)
    q = to_gq(q)
    result = ONE
    if n >= 0:
        p = a
        for _ in range(n):
            result = result * (ONE - p)
            p = p * q
        return result
    qinv = q.reciprocal()
    p = a * qinv
    for k in range(1, -n + 1):
        factor = ONE - p
        if not factor:
            raise PoleError(
                "vanishing factor in negative-index q-shifted factorial",
                f"(a;q)_{n} at k={k}",
            )
        result = result / factor
        p = p * qinv
    return result


def q_pochhammer_multi(params: Sequence, q, n: int) -> GaussianRational:
    """Factor-wise product (a1,...,ar;q)_n."""
    result = ONE
    for a in params:
        result = result * q_pochhammer(a, q, n)
    return result


def q_number(n: int, q) -> GaussianRational:
    """The q-integer [n]_q = (1 - q^n)/(1 - q); q must not be 1."""
    q = to_gq(q)
    if q == ONE:
        raise PoleError("q-integer undefined at q = 1", "[n]_q")
    return (ONE - q**n) / (ONE - q)


def q_factorial(n: int, q) -> GaussianRational:
    """[n]_q! = prod_{k=1}^n [k]_q."""
    result = ONE
    for k in range(1, n + 1):
        result = result * q_number(k, q)
    return result


def q_binomial(n: int, k: int, q) -> GaussianRational:
    """Gaussian binomial coefficient; 0 when k is out of range."""
    if k < 0 or k > n:
        return ZERO
    q = to_gq(q)
    return q_pochhammer(q, q, n) / (q_pochhammer(q, q, k) * q_pochhammer(q, q, n - k))


def rising_factorial(a, n: int) -> GaussianRational:
    """Rising factorial (a)_n = prod_{k=0}^{n-1} (a + k) for n >= 0.

    Negative n uses the reciprocal convention (a)_{-m} = 1/prod_{k=1}^m (a-k),
    which extends the Gamma-function quotient to integer shifts.
    """
    a = to_gq(a)
    result = ONE
    if n >= 0:
        for k in range(n):
            result = result * (a + k)
        return result
    for k in range(1, -n + 1):
        factor = a - k
        if not factor:
            raise PoleError(
                "vanishing factor in negative-index rising factorial",
                f"(a)_{n} at k={k}",
            )
        result = result / factor
    return result


@dataclass(frozen=True)
class SeriesSpec:
    """A basic hypergeometric series r+1_phi_r to be summed exactly.

    ``order``, when given, is the termination length n (some numerator must
    equal ``base**(-n)``); otherwise it is detected exactly by searching for
    the smallest such n among the numerators.
    """

    numerators: tuple[GaussianRational, ...]
    denominators: tuple[GaussianRational, ...]
    base: GaussianRational
    argument: GaussianRational
    order: int | None = None


def spec(numerators, denominators, base, argument, order: int | None = None) -> SeriesSpec:
    """Build a SeriesSpec, coercing scalar-like entries."""
    return SeriesSpec(
        tuple(to_gq(a) for a in numerators),
        tuple(to_gq(b) for b in denominators),
        to_gq(base),
        to_gq(argument),
        order,
    )


def _detect_termination(numerators, base) -> int:
    best = None
    for a in numerators:
        p = a
        for n in range(_TERMINATION_CAP + 1):
            if p == ONE:
                if best is None or n < best:
                    best = n
                break
            p = p * base
    if best is None:
        raise NonTerminatingSeriesError(
            "series has no numerator of the form base**(-n); refusing to sum"
        )
    return best


def _termination_order(s: SeriesSpec) -> int:
    if s.order is None:
        return _detect_termination(s.numerators, s.base)
    if not any(a * s.base**s.order == ONE for a in s.numerators):
        raise ValueError(f"declared order {s.order} has no matching base**(-n) numerator")
    return s.order


def phi(s: SeriesSpec) -> GaussianRational:
    """Sum a terminating basic hypergeometric series exactly."""
    n = _termination_order(s)
    total = ONE
    term = ONE
    qk = ONE  # base**k
    for k in range(n):
        factor = s.argument
        for a in s.numerators:
            factor = factor * (ONE - a * qk)
        den = ONE - s.base * qk
        if not den:
            raise PoleError("vanishing (q;q) factor in series", f"k={k + 1}")
        for j, b in enumerate(s.denominators):
            f = ONE - b * qk
            if not f:
                raise PoleError(
                    "vanishing denominator factor in series",
                    f"denominator parameter {j + 1} at k={k + 1}",
                )
            den = den * f
        term = term * factor / den
        total = total + term
        qk = qk * s.base
    return total


def phi_coeff(s: SeriesSpec, k: int) -> GaussianRational:
    """Coefficient of argument**k in the series (argument excluded)."""
    num = q_pochhammer_multi(s.numerators, s.base, k)
    den = q_pochhammer(s.base, s.base, k) * q_pochhammer_multi(s.denominators, s.base, k)
    if not den:
        raise PoleError("vanishing denominator q-shifted factorial", f"coefficient k={k}")
    return num / den


def terminating_phi(numerators, denominators, q, z, order: int | None = None) -> GaussianRational:
    """Shorthand: build a spec and sum it."""
    return phi(spec(numerators, denominators, q, z, order))


def very_well_poised(a1_sqrt, tail, q, z, order: int | None = None) -> GaussianRational:
    """Terminating very-well-poised series r+1_W_r(a1; a4..a_{r+1}; q, z).

    ``a1_sqrt`` is the caller-supplied square root of a1 (roots are inputs,
    never computed), realizing the +-q*a1^(1/2) parameter pair exactly.
    """
    s = to_gq(a1_sqrt)
    q = to_gq(q)
    a1 = s * s
    tail = [to_gq(t) for t in tail]
    numerators = [a1, q * s, -(q * s), *tail]
    denominators = [s, -s, *[q * a1 / t for t in tail]]
    return terminating_phi(numerators, denominators, q, z, order)


def hyper_f(numerators, denominators, z) -> GaussianRational:
    """Terminating classical hypergeometric sum with rising factorials and k!.

    Terminates at the smallest n with -n among the numerators; a nonpositive
    integer denominator parameter reached inside the range is a pole.
    """
    numerators = [to_gq(a) for a in numerators]
    denominators = [to_gq(b) for b in denominators]
    z = to_gq(z)
    n = None
    for a in numerators:
        v = a.as_integer()
        if v is not None and v <= 0 and (n is None or -v < n):
            n = -v
    if n is None:
        raise NonTerminatingSeriesError(
            "classical series has no nonpositive-integer numerator; refusing to sum"
        )
    total = ONE
    term = ONE
    for k in range(n):
        factor = z
        for a in numerators:
            factor = factor * (a + k)
        den = GaussianRational(k + 1)
        for j, b in enumerate(denominators):
            f = b + k
            if not f:
                raise PoleError(
                    "nonpositive integer denominator parameter in classical series",
                    f"denominator parameter {j + 1} at k={k}",
                )
            den = den * f
        term = term * factor / den
        total = total + term
    return total


def factorial(n: int) -> GaussianRational:
    """n! as an exact scalar."""
    return GaussianRational(math.factorial(n))


def binomial(n: int, k: int) -> GaussianRational:
    """Ordinary binomial coefficient as an exact scalar; 0 out of range."""
    if k < 0 or k > n:
        return ZERO
    return GaussianRational(math.comb(n, k))


def half(x) -> GaussianRational:
    """x/2 as an exact scalar, accepting ints and Fractions."""
    return to_gq(x) * GaussianRational(Fraction(1, 2))
