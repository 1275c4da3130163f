"""The headline determinant and Pfaffian checks.

Each evaluator returns labeled (lhs, rhs) pairs that must agree exactly.
Exponents that are half-integers in the displayed formulas are carried as
integer powers of the sampled roots (kappa^2 = q, alpha^2 = a, ...), so both
sides live in QQ(i).
"""

from __future__ import annotations

from ..gaussian import I, ONE, ZERO, GaussianRational
from ..linalg import determinant, pfaffian
from ..orthopoly import (
    AWParams,
    al_salam_chihara,
    askey_wilson,
    continuous_hahn,
    mehta_wang_d,
    nishizawa_d,
    wilson,
)
from ..qseries import (
    factorial,
    half,
    hyper_f,
    q_factorial,
    q_pochhammer as qp,
    rising_factorial as rf,
    terminating_phi,
)
from .builders import (
    build_theorem_matrix,
    classical_matrix,
    mehta_wang_matrix,
    moment_hankel,
    nishizawa_matrix,
)

Comparison = tuple[str, GaussianRational, GaussianRational]


def _sign(n: int) -> GaussianRational:
    return ONE if n % 2 == 0 else -ONE


def eval_hankel(pt, n: int) -> list[Comparison]:
    a, b, q, r = pt.a, pt.b, pt.q, pt.r
    lhs = determinant(moment_hankel(n, r, a, b, q))
    rhs = a ** (n * (n - 1) // 2) * q ** (n * (n - 1) * (2 * n - 1) // 6 + n * (n - 1) * r // 2)
    for k in range(1, n + 1):
        rhs = (
            rhs
            * qp(q, q, k - 1)
            * qp(b * q, q, k - 1)
            * qp(a * q, q, k + r - 1)
            / qp(a * b * q * q, q, k + n + r - 2)
        )
    return [("moment Hankel determinant vs closed product", lhs, rhs)]


def eval_pfaffian_moments(pt, m: int) -> list[Comparison]:
    a, b, q, r = pt.a, pt.b, pt.q, pt.r
    lhs = pfaffian(build_theorem_matrix(2 * m, r, a, b, ONE, q))
    rhs = a ** (m * (m - 1)) * q ** (m * (m - 1) * (4 * m + 1) // 3 + m * (m - 1) * r)
    for k in range(1, m):
        rhs = rhs * qp(b * q, q, 2 * k)
    for k in range(1, m + 1):
        rhs = (
            rhs
            * qp(q, q, 2 * k - 1)
            * qp(a * q, q, 2 * k + r - 1)
            / qp(a * b * q * q, q, 2 * (k + m) + r - 3)
        )
    return [("skew moment Pfaffian vs closed product", lhs, rhs)]


def eval_c1_pfaffian_square(pt, m: int) -> list[Comparison]:
    mat = build_theorem_matrix(2 * m, pt.r, pt.a, pt.b, ONE, pt.q)
    pf = pfaffian(mat)
    return [("determinant at c=1 vs squared Pfaffian", determinant(mat), pf * pf)]


def eval_mehta_wang(pt, n: int) -> list[Comparison]:
    a, b = pt.a, pt.b
    lhs = determinant(mehta_wang_matrix(n, a, b))
    d_rec = mehta_wang_d(n, a, b, "recurrence")
    prod = ONE
    for i in range(n):
        prod = prod * factorial(i) * rf(b, i)
    return [
        ("normalized determinant vs D-sequence product", lhs, d_rec * prod),
        ("D-sequence recurrence vs signed binomial sum", d_rec, mehta_wang_d(n, a, b, "sum")),
    ]


def eval_nishizawa(pt, n: int) -> list[Comparison]:
    s, t, q = pt.s_half, pt.t_half, pt.q
    t2 = t * t
    det_f = determinant(nishizawa_matrix(n, s, t, q))
    pre = (-I) ** n * t ** (n * (n - 2)) * s**n * q ** (n * (n - 1) * (n - 2) // 3)
    for k in range(1, n + 1):
        pre = pre * qp(q, q, k - 1) * qp(t2, q, k - 1)
    rhs = pre * al_salam_chihara(n, ZERO, s * t * I, -(t / s) * I, q, "recurrence")
    comps = [("normalized determinant vs Al-Salam-Chihara closed form", det_f, rhs)]

    # The same determinant, renormalized by q-Gamma ratios, against the
    # D-sequence statement with its original power-of-q prefactor.
    one_minus_q = ONE - q
    det_e = det_f / (q ** (n * (n - 1) // 2) * one_minus_q ** (n * n))
    d_val = nishizawa_d(n, s, t, q, "recurrence")
    rhs2 = (
        s ** (2 * n)
        * t ** (n * (n - 1))
        * q ** (n * (n - 1) * (2 * n - 7) // 6)
        * d_val
    )
    for k in range(n):
        rhs2 = rhs2 * q_factorial(k, q) * qp(t2, q, k) / one_minus_q**k
    comps.append(("q-Gamma-normalized determinant vs D-sequence product", det_e, rhs2))
    comps.append(
        ("D recurrence vs explicit sum", d_val, nishizawa_d(n, s, t, q, "explicit"))
    )
    comps.append(
        (
            "D recurrence vs Al-Salam-Chihara specialization",
            d_val,
            nishizawa_d(n, s, t, q, "al_salam_chihara"),
        )
    )
    return comps


def eval_thm_main_phi(pt, n: int) -> list[Comparison]:
    a, b, c, q, r = pt.a, pt.b, pt.c, pt.q, pt.r
    alpha, gamma, kappa = pt.alpha, pt.gamma, pt.kappa
    lhs = determinant(build_theorem_matrix(n, r, a, b, c, q))
    u = alpha * gamma * kappa ** (r + 1)
    v = alpha * pt.beta * gamma * kappa ** (r + 1)
    series = terminating_phi(
        [q**-n, u, -u, a * b * q ** (n + r)],
        [a * q ** (r + 1), v, -v],
        q,
        q,
        order=n,
    )
    rhs = (
        _sign(n)
        * a ** (n * (n - 3) // 2)
        * q ** (n * (n + 1) * (2 * n - 5) // 6 + n * (n - 3) * r // 2)
        * qp(a * b * c * q ** (r + 1), q * q, n)
    )
    for k in range(1, n + 1):
        rhs = (
            rhs
            * qp(q, q, k - 1)
            * qp(a * q, q, k + r)
            * qp(b * q, q, k - 2)
            / qp(a * b * q * q, q, k + n + r - 2)
        )
    return [("kernel determinant vs terminating series form", lhs, rhs * series)]


def eval_thm_main_aw(pt, n: int) -> list[Comparison]:
    a, b, c, q, r = pt.a, pt.b, pt.c, pt.q, pt.r
    alpha, beta, gamma, kappa = pt.alpha, pt.beta, pt.gamma, pt.kappa
    lhs = determinant(build_theorem_matrix(n, r, a, b, c, q))
    krp = kappa ** (r + 1)
    value = askey_wilson(
        n,
        AWParams(alpha * gamma * krp * I, -(alpha / gamma) * krp * I, beta * I, -(beta * I), q, ZERO),
        "hypergeometric",
    )
    rhs = (
        (-I) ** n
        * alpha ** (n * (n - 2))
        * gamma**n
        * kappa ** (n * (n - 2) * (2 * n + 1) // 3 + n * (n - 2) * r)
    )
    for k in range(1, n + 1):
        rhs = (
            rhs
            * qp(q, q, k - 1)
            * qp(a * q, q, k + r - 1)
            * qp(b * q, q, k - 2)
            / qp(a * b * q * q, q, k + n + r - 2)
        )
    return [("kernel determinant vs Askey-Wilson form", lhs, rhs * value)]


def eval_cor_even_phi(pt, m: int) -> list[Comparison]:
    a, b, c, q, r = pt.a, pt.b, pt.c, pt.q, pt.r
    q2 = q * q
    lhs = determinant(build_theorem_matrix(2 * m, r, a, b, c, q))
    series = terminating_phi(
        [q ** (-2 * m), q ** (-2 * m + 1) / b, c, c.reciprocal()],
        [q, a * q ** (r + 1), q ** (1 - 4 * m - r) / (a * b)],
        q2,
        q2,
        order=m,
    )
    rhs = a ** (2 * m * (m - 1)) * c**m * q ** (
        2 * m * (m - 1) * (4 * m + 1) // 3 + 2 * m * (m - 1) * r
    )
    for k in range(1, m + 1):
        f = (
            qp(q, q, 2 * k - 1)
            * qp(a * q, q, 2 * k + r - 1)
            * qp(b * q, q, 2 * k - 2)
            / qp(a * b * q * q, q, 2 * (k + m) + r - 3)
        )
        rhs = rhs * f * f
    return [("even-size determinant vs base-q^2 series form", lhs, rhs * series)]


def eval_cor_even_aw(pt, m: int) -> list[Comparison]:
    a, b, c, q, r = pt.a, pt.b, pt.c, pt.q, pt.r
    q2 = q * q
    lhs = determinant(build_theorem_matrix(2 * m, r, a, b, c, q))
    value = askey_wilson(
        m,
        AWParams(
            ONE,
            q,
            a * q ** (r + 1),
            q ** (1 - 4 * m - r) / (a * b),
            q2,
            (c + c.reciprocal()) / 2,
        ),
        "hypergeometric",
    )
    rhs = (
        _sign(m)
        * a ** (m * (2 * m - 1))
        * b**m
        * c**m
        * q ** (m * (8 * m * m + 3 * m - 2) // 3 + m * (2 * m - 1) * r)
    )
    for k in range(1, 2 * m + 1):
        rhs = rhs * qp(q, q, k - 1) * qp(a * q, q, k + r - 1) / qp(a * b * q * q, q, k + 2 * m + r - 2)
    for k in range(1, m + 1):
        f = qp(b * q, q, 2 * k - 2)
        rhs = rhs * f * f
    return [("even-size determinant vs base-q^2 Askey-Wilson form", lhs, rhs * value)]


def eval_cor_odd_phi(pt, m: int) -> list[Comparison]:
    a, b, c, q, r = pt.a, pt.b, pt.c, pt.q, pt.r
    q2 = q * q
    lhs = determinant(build_theorem_matrix(2 * m + 1, r, a, b, c, q))
    series = terminating_phi(
        [q ** (-2 * m), q ** (-2 * m + 1) / b, c * q, q / c],
        [q**3, a * q ** (r + 2), q ** (-4 * m - r) / (a * b)],
        q2,
        q2,
        order=m,
    )
    rhs = (
        a ** (2 * m * m)
        * c**m
        * q ** (2 * m * (m + 1) * (4 * m - 1) // 3 + 2 * m * m * r)
        * (ONE - c)
        / (ONE - q)
    )
    for k in range(1, m + 2):
        rhs = (
            rhs
            * qp(q, q, 2 * k - 1)
            * qp(a * q, q, 2 * k + r - 2)
            * qp(b * q, q, 2 * k - 2)
            / qp(a * b * q * q, q, 2 * (k + m - 1) + r)
        )
    for k in range(1, m + 1):
        rhs = (
            rhs
            * qp(q, q, 2 * k - 1)
            * qp(a * q, q, 2 * k + r)
            * qp(b * q, q, 2 * k - 2)
            / qp(a * b * q * q, q, 2 * (k + m - 1) + r)
        )
    return [("odd-size determinant vs base-q^2 series form", lhs, rhs * series)]


def eval_cor_odd_aw(pt, m: int) -> list[Comparison]:
    a, b, c, q, r = pt.a, pt.b, pt.c, pt.q, pt.r
    q2 = q * q
    lhs = determinant(build_theorem_matrix(2 * m + 1, r, a, b, c, q))
    value = askey_wilson(
        m,
        AWParams(
            q,
            q2,
            a * q ** (r + 1),
            q ** (-4 * m - r - 1) / (a * b),
            q2,
            (c + c.reciprocal()) / 2,
        ),
        "hypergeometric",
    )
    rhs = (
        _sign(m)
        * a ** (m * (2 * m + 1))
        * b**m
        * c**m
        * (ONE - c)
        * q ** (m * (8 * m * m + 15 * m + 4) // 3 + m * (2 * m + 1) * r)
    )
    for k in range(1, 2 * m + 2):
        rhs = rhs * qp(q, q, k - 1) * qp(a * q, q, k + r - 1) / qp(a * b * q * q, q, k + 2 * m + r - 1)
    for k in range(1, m + 2):
        rhs = rhs * qp(b * q, q, 2 * k - 2)
    for k in range(1, m + 1):
        rhs = rhs * qp(b * q, q, 2 * k - 2)
    return [("odd-size determinant vs base-q^2 Askey-Wilson form", lhs, rhs * value)]


def eval_classical_hahn(pt, n: int) -> list[Comparison]:
    al, be, ga, r = pt.alpha_c, pt.beta_c, pt.gamma_c, pt.r
    lhs = determinant(classical_matrix(n, r, al, be, ga))
    pre1 = GaussianRational(-2) ** n * rf(half(al + be + ga + (r + 1)), n)
    for k in range(1, n + 1):
        pre1 = (
            pre1
            * factorial(k - 1)
            * rf(al + 1, k + r)
            * rf(be + 1, k - 2)
            / rf(al + be + 2, k + n + r - 2)
        )
    rhs1 = pre1 * hyper_f(
        [GaussianRational(-n), half(al + ga + (r + 1)), al + be + (n + r)],
        [half(al + be + ga + (r + 1)), al + (r + 1)],
        ONE,
    )
    pre2 = (2 * I) ** n
    for k in range(1, n + 1):
        pre2 = (
            pre2
            * factorial(k)
            * rf(al + 1, k + r - 1)
            * rf(be + 1, k - 2)
            / rf(al + be + 2, k + n + r - 2)
        )
    rhs2 = pre2 * continuous_hahn(
        n, ZERO, half(al + ga + (r + 1)), half(be), half(al - ga + (r + 1)), half(be)
    )
    return [
        ("classical determinant vs terminating 3F2 form", lhs, rhs1),
        ("classical determinant vs continuous Hahn form", lhs, rhs2),
    ]


def eval_classical_wilson_even(pt, m: int) -> list[Comparison]:
    al, be, ga, r = pt.alpha_c, pt.beta_c, pt.gamma_c, pt.r
    lhs = determinant(classical_matrix(2 * m, r, al, be, ga))
    hg = half(ga)
    slot3 = half(al + (r + 1))
    slot4 = -2 * m - half(al + be + (r - 1))
    pre1 = ONE
    for k in range(1, m + 1):
        f = (
            factorial(2 * k - 1)
            * rf(al + 1, 2 * k + r - 1)
            * rf(be + 1, 2 * k - 2)
            / rf(al + be + 2, 2 * (k + m) + r - 3)
        )
        pre1 = pre1 * f * f
    rhs1 = pre1 * hyper_f(
        [GaussianRational(-m), -half(be - 1) - m, hg, -hg],
        [half(1), slot3, slot4],
        ONE,
    )
    pre2 = GaussianRational(-2) ** (3 * m)
    for k in range(1, 2 * m + 1):
        pre2 = pre2 * factorial(k - 1) * rf(al + 1, k + r - 1) / rf(al + be + 2, k + 2 * m + r - 2)
    for k in range(1, m + 1):
        f = rf(be + 1, 2 * k - 2)
        pre2 = pre2 * f * f
    rhs2 = pre2 * wilson(m, hg, ZERO, half(1), slot3, slot4)
    return [
        ("even classical determinant vs terminating 4F3 form", lhs, rhs1),
        ("even classical determinant vs Wilson form", lhs, rhs2),
    ]


def eval_classical_wilson_odd(pt, m: int) -> list[Comparison]:
    al, be, ga, r = pt.alpha_c, pt.beta_c, pt.gamma_c, pt.r
    lhs = determinant(classical_matrix(2 * m + 1, r, al, be, ga))
    pre1 = ga
    for k in range(1, m + 2):
        pre1 = (
            pre1
            * factorial(2 * k - 1)
            * rf(al + 1, 2 * k + r - 2)
            * rf(be + 1, 2 * k - 2)
            / rf(al + be + 2, 2 * (k + m - 1) + r)
        )
    for k in range(1, m + 1):
        pre1 = (
            pre1
            * factorial(2 * k - 1)
            * rf(al + 1, 2 * k + r)
            * rf(be + 1, 2 * k - 2)
            / rf(al + be + 2, 2 * (k + m - 1) + r)
        )
    rhs1 = pre1 * hyper_f(
        [GaussianRational(-m), -half(be - 1) - m, half(ga + 1), half(1 - ga)],
        [half(3), half(al + r) + 1, -2 * m - half(al + be + r)],
        ONE,
    )
    pre2 = GaussianRational(-2) ** (3 * m) * ga
    for k in range(1, 2 * m + 2):
        pre2 = pre2 * factorial(k - 1) * rf(al + 1, k + r - 1) / rf(al + be + 2, k + 2 * m + r - 1)
    for k in range(1, m + 2):
        pre2 = pre2 * rf(be + 1, 2 * k - 2)
    for k in range(1, m + 1):
        pre2 = pre2 * rf(be + 1, 2 * k - 2)
    rhs2 = pre2 * wilson(
        m, half(ga), half(1), ONE, half(al + (r + 1)), -2 * m - half(al + be + (r + 1))
    )
    return [
        ("odd classical determinant vs terminating 4F3 form", lhs, rhs1),
        ("odd classical determinant vs Wilson form", lhs, rhs2),
    ]
