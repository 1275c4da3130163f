"""Exact evaluators for the orthogonal-polynomial families used by the checks.

Each family ships at least two independent computation paths (three for the
Al-Salam--Chihara and q-deformed Meixner-type sequences) so the test suite can
cross-validate them.  The complex exponential never appears: the conjugate
parameter pair of the basic hypergeometric form is evaluated through the
paired product prod_j (1 - 2 a x q^j + a^2 q^{2j}), which is rational in
x = cos(theta), keeping everything inside QQ(i).
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import PoleError
from .gaussian import I, ONE, TWO, ZERO, GaussianRational, to_gq
from .qseries import (
    factorial,
    binomial,
    half,
    hyper_f,
    q_number,
    q_pochhammer,
    q_pochhammer_multi,
    rising_factorial,
)


@dataclass(frozen=True)
class AWParams:
    """Askey-Wilson data (a, b, c, d; q) with evaluation point x = cos(theta)."""

    a: GaussianRational
    b: GaussianRational
    c: GaussianRational
    d: GaussianRational
    q: GaussianRational
    x: GaussianRational


def aw_params(a, b, c, d, q, x) -> AWParams:
    return AWParams(to_gq(a), to_gq(b), to_gq(c), to_gq(d), to_gq(q), to_gq(x))


def _aw_recurrence_coeffs(k: int, p: AWParams):
    """Recurrence coefficients at step k, exactly as printed, with pole guards."""
    a, q = p.a, p.q
    if not a:
        raise PoleError("recurrence requires a nonzero leading parameter", "a=0")
    abcd = a * p.b * p.c * p.d
    qk1 = q ** (k - 1)
    d1 = (ONE - abcd * q ** (2 * k - 1)) * (ONE - abcd * q ** (2 * k))
    if not d1:
        raise PoleError("vanishing recurrence denominator", f"A at n={k}")
    coeff_a = (ONE - abcd * qk1) / d1
    d2 = (ONE - abcd * q ** (2 * k - 2)) * (ONE - abcd * q ** (2 * k - 1))
    if not d2:
        raise PoleError("vanishing recurrence denominator", f"C at n={k}")
    pair1 = (ONE - a * p.b * qk1) * (ONE - a * p.c * qk1) * (ONE - a * p.d * qk1)
    coeff_c = (
        (ONE - q**k)
        * pair1
        * (ONE - p.b * p.c * qk1)
        * (ONE - p.b * p.d * qk1)
        * (ONE - p.c * p.d * qk1)
        / d2
    )
    if not pair1:
        raise PoleError("vanishing recurrence denominator", f"B division at n={k}")
    qk = q**k
    coeff_b = (
        a
        + a.reciprocal()
        - coeff_a * a.reciprocal() * (ONE - a * p.b * qk) * (ONE - a * p.c * qk) * (ONE - a * p.d * qk)
        - coeff_c * a / pair1
    )
    return coeff_a, coeff_b, coeff_c


def _aw_recurrence(n: int, p: AWParams) -> GaussianRational:
    prev, cur = ZERO, ONE
    two_x = TWO * p.x
    for k in range(n):
        ca, cb, cc = _aw_recurrence_coeffs(k, p)
        if not ca:
            raise PoleError("vanishing leading recurrence coefficient", f"A at n={k}")
        prev, cur = cur, ((two_x - cb) * cur - cc * prev) / ca
    return cur


def _aw_hypergeometric(n: int, p: AWParams) -> GaussianRational:
    a, q = p.a, p.q
    if not a:
        raise PoleError("basic hypergeometric form requires a nonzero leading parameter", "a=0")
    ab, ac, ad = a * p.b, a * p.c, a * p.d
    prefactor = q_pochhammer_multi((ab, ac, ad), q, n) * a ** (-n)
    abcd_q = ab * p.c * p.d * q ** (n - 1)
    qmn = q ** (-n)
    two_ax = TWO * a * p.x
    a2 = a * a
    total = ONE
    term = ONE
    qk = ONE
    q2k = ONE
    q2 = q * q
    for k in range(n):
        num = (ONE - qmn * qk) * (ONE - abcd_q * qk) * (ONE - two_ax * qk + a2 * q2k) * q
        den = ONE - q * qk
        for name, u in (("ab", ab), ("ac", ac), ("ad", ad)):
            f = ONE - u * qk
            if not f:
                raise PoleError("vanishing denominator q-shifted factorial", f"({name};q) at k={k + 1}")
            den = den * f
        term = term * num / den
        total = total + term
        qk = qk * q
        q2k = q2k * q2
    return prefactor * total


def askey_wilson(n: int, params: AWParams, method: str = "recurrence") -> GaussianRational:
    """p_n(x; a, b, c, d; q) for n >= -1 (p_{-1} = 0, p_0 = 1).

    ``method`` selects the three-term recurrence or the terminating 4-phi-3
    form; the two agree exactly and serve as mutual oracles.
    """
    if n == -1:
        return ZERO
    if n < -1:
        raise ValueError("degree must be >= -1")
    if method == "recurrence":
        return _aw_recurrence(n, params)
    if method == "hypergeometric":
        return _aw_hypergeometric(n, params)
    raise ValueError(f"unknown method {method!r}")


def al_salam_chihara(n: int, x, big_a, big_b, q, method: str = "recurrence") -> GaussianRational:
    """Q_n(x; A, B; q) by recurrence, by its 3-phi-2 form, or as the c=d=0
    specialization of the Askey-Wilson evaluator."""
    x, big_a, big_b, q = to_gq(x), to_gq(big_a), to_gq(big_b), to_gq(q)
    if n == -1:
        return ZERO
    if n < -1:
        raise ValueError("degree must be >= -1")
    if method == "recurrence":
        prev, cur = ZERO, ONE
        two_x = TWO * x
        ab = big_a * big_b
        for k in range(n):
            prev, cur = cur, (
                (two_x - (big_a + big_b) * q**k) * cur
                - (ONE - q**k) * (ONE - ab * q ** (k - 1)) * prev
            )
        return cur
    if method == "hypergeometric":
        if not big_a:
            raise PoleError("3-phi-2 form requires a nonzero leading parameter", "A=0")
        ab = big_a * big_b
        prefactor = q_pochhammer(ab, q, n) * big_a ** (-n)
        qmn = q ** (-n)
        two_ax = TWO * big_a * x
        a2 = big_a * big_a
        total = ONE
        term = ONE
        qk = ONE
        q2k = ONE
        q2 = q * q
        for k in range(n):
            num = (ONE - qmn * qk) * (ONE - two_ax * qk + a2 * q2k) * q
            f = ONE - ab * qk
            if not f:
                raise PoleError("vanishing denominator q-shifted factorial", f"(AB;q) at k={k + 1}")
            den = (ONE - q * qk) * f
            term = term * num / den
            total = total + term
            qk = qk * q
            q2k = q2k * q2
        return prefactor * total
    if method == "aw_special":
        return askey_wilson(n, AWParams(big_a, big_b, ZERO, ZERO, q, x), "hypergeometric")
    raise ValueError(f"unknown method {method!r}")


def continuous_hahn(n: int, t, a, b, c, d) -> GaussianRational:
    """Continuous Hahn value with the argument supplied as t = i*x.

    t enters only through the numerator parameter a + t, so either square
    root of -x^2 gives the same value.
    """
    t, a, b, c, d = to_gq(t), to_gq(a), to_gq(b), to_gq(c), to_gq(d)
    pre = I**n * rising_factorial(a + c, n) * rising_factorial(a + d, n) / factorial(n)
    return pre * hyper_f(
        (GaussianRational(-n), a + b + c + d + (n - 1), a + t), (a + c, a + d), ONE
    )


def wilson(n: int, t, alpha, beta, gamma, delta) -> GaussianRational:
    """Wilson value at argument x^2 = -t^2, i.e. t = i*x supplied directly."""
    t, alpha, beta, gamma, delta = to_gq(t), to_gq(alpha), to_gq(beta), to_gq(gamma), to_gq(delta)
    pre = (
        rising_factorial(alpha + beta, n)
        * rising_factorial(alpha + gamma, n)
        * rising_factorial(alpha + delta, n)
    )
    return pre * hyper_f(
        (GaussianRational(-n), alpha + beta + gamma + delta + (n - 1), alpha + t, alpha - t),
        (alpha + beta, alpha + gamma, alpha + delta),
        ONE,
    )


def mehta_wang_d(n: int, a, b, method: str = "recurrence") -> GaussianRational:
    """The Meixner-Pollaczek-type sequence D_n with D_{-1}=0, D_0=1.

    ``recurrence``: D_{n+1} = a D_n + n (b + n - 1) D_{n-1}.
    ``sum``: sum_k (-1)^k C(n,k) ((b-a)/2)_k ((a+b)/2)_{n-k}.
    """
    a, b = to_gq(a), to_gq(b)
    if n == -1:
        return ZERO
    if n < -1:
        raise ValueError("index must be >= -1")
    if method == "recurrence":
        prev, cur = ZERO, ONE
        for k in range(n):
            prev, cur = cur, a * cur + k * (b + (k - 1)) * prev
        return cur
    if method == "sum":
        u = half(b - a)
        v = half(a + b)
        total = ZERO
        for k in range(n + 1):
            sign = ONE if k % 2 == 0 else -ONE
            total = total + sign * binomial(n, k) * rising_factorial(u, k) * rising_factorial(
                v, n - k
            )
        return total
    raise ValueError(f"unknown method {method!r}")


def nishizawa_d(n: int, s, t, q, method: str = "recurrence") -> GaussianRational:
    """The q-deformation of mehta_wang_d, parameterized by the square roots
    s, t of the two q-powers so that all half-integer exponents are exact.

    Three paths: the three-term recurrence, the explicit single sum, and the
    Al-Salam--Chihara specialization (-i)^n (st)^{-n} (1-q)^{-n}
    Q_n(0; st*i, -(t/s)*i; q).
    """
    s, t, q = to_gq(s), to_gq(t), to_gq(q)
    if not s or not t or not q:
        raise PoleError("parameters must be nonzero", "s, t, q")
    if q == ONE:
        raise PoleError("q-deformation undefined at q = 1", "q=1")
    if n == -1:
        return ZERO
    if n < -1:
        raise ValueError("index must be >= -1")
    s2 = s * s
    t2 = t * t
    if method == "recurrence":
        one_minus_q = ONE - q
        prev, cur = ZERO, ONE
        for k in range(n):
            term1 = s2.reciprocal() * q**k * (ONE - s2) / one_minus_q * cur
            term2 = (
                (s2 * t2).reciprocal()
                * q_number(k, q)
                * (ONE - t2 * q ** (k - 1))
                / one_minus_q
                * prev
            )
            prev, cur = cur, term1 + term2
        return cur
    if method == "explicit":
        pre = q_pochhammer(t2, q, n) / ((s * t) ** (2 * n) * (q - ONE) ** n)
        total = ZERO
        inner = ONE
        s2t2 = s2 * t2
        for k in range(n + 1):
            total = total + q**k * q_pochhammer(q ** (-n), q, k) / q_pochhammer(q, q, k) * inner
            f = ONE - t2 * q**k
            if not f:
                raise PoleError("vanishing denominator factor in explicit sum", f"j={k}")
            inner = inner * (ONE - s2t2 * q ** (2 * k)) / f
        return pre * total
    if method == "al_salam_chihara":
        st = s * t
        return (
            (-I) ** n
            * st ** (-n)
            * (ONE - q) ** (-n)
            * al_salam_chihara(n, ZERO, st * I, -(t / s) * I, q, "recurrence")
        )
    raise ValueError(f"unknown method {method!r}")


def andrews_rhs(n: int, a, b, q) -> GaussianRational:
    """Closed form for p_n(0; a, -a, b, -b; q): zero at odd n, a four-factor
    base-q^2 product at n = 2m."""
    a, b, q = to_gq(a), to_gq(b), to_gq(q)
    if n % 2 == 1:
        return ZERO
    m = n // 2
    q2 = q * q
    sign = ONE if m % 2 == 0 else -ONE
    return sign * q_pochhammer_multi(
        (q, -(a * a), -(b * b), (a * a) * (b * b) * q ** (2 * m)), q2, m
    )
