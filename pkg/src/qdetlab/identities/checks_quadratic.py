"""Determinant-minor quadratic relations and the open conjecture."""

from __future__ import annotations

from ..gaussian import I, ONE, ZERO, GaussianRational
from ..linalg import ExactMatrix, determinant, submatrix
from ..orthopoly import AWParams, askey_wilson
from ..qseries import q_pochhammer as qp, terminating_phi
from .builders import build_theorem_matrix

Comparison = tuple[str, GaussianRational, GaussianRational]


def eval_dj_generic(pt, n: int) -> list[Comparison]:
    a = ExactMatrix(n, n, pt.matrix_entries[: n * n])
    inner = list(range(2, n))
    head = list(range(1, n))
    tail = list(range(2, n + 1))
    lhs = determinant(submatrix(a, inner, inner)) * determinant(a)
    rhs = determinant(submatrix(a, head, head)) * determinant(
        submatrix(a, tail, tail)
    ) - determinant(submatrix(a, head, tail)) * determinant(submatrix(a, tail, head))
    return [("inner-minor product vs corner-minor products", lhs, rhs)]


def eval_dj_specialized(pt, n: int) -> list[Comparison]:
    a, b, c, q = pt.a, pt.b, pt.c, pt.q
    q2 = q * q

    def dd(size, aa, cc):
        return determinant(build_theorem_matrix(size, 0, aa, b, cc, q))

    lhs = dd(n, a, c) * dd(n - 2, a * q2, c)
    rhs = q * qp(a * q, q, 2) / qp(a * b * q2, q, 2) * dd(n - 1, a, c) * dd(
        n - 1, a * q2, c
    ) - q * (ONE - a * q) ** n * (ONE - a * b * q**3) ** (n - 2) / (
        (ONE - a * q2) ** (n - 2) * (ONE - a * b * q2) ** n
    ) * dd(n - 1, a * q, c * q) * dd(n - 1, a * q, c / q)
    return [("condensation of the shifted kernel determinant", lhs, rhs)]


def eval_quadratic_full(pt, n: int) -> list[Comparison]:
    alpha, beta, gamma, kappa = pt.alpha, pt.beta, pt.gamma, pt.kappa
    a, b, q = pt.a, pt.b, pt.q

    def p(deg, e1, e2):
        return askey_wilson(
            deg,
            AWParams(
                alpha * gamma * kappa**e1 * I,
                -(alpha / gamma) * kappa**e2 * I,
                beta * I,
                -(beta * I),
                q,
                ZERO,
            ),
            "recurrence",
        )

    lhs = a * q * (ONE - q ** (n - 1)) * (ONE - b * q ** (n - 2)) * p(n, 1, 1) * p(n - 2, 3, 3)
    rhs = (ONE - a * q**n) * (ONE - a * b * q**n) * p(n - 1, 1, 1) * p(n - 1, 3, 3) - (
        ONE - a * q
    ) * (ONE - a * b * q ** (2 * n - 1)) * p(n - 1, 3, 1) * p(n - 1, 1, 3)
    return [("quadratic relation in root parameters", lhs, rhs)]


def eval_quadratic_clean(pt, n: int) -> list[Comparison]:
    a, b, c, q = pt.a, pt.b, pt.c, pt.q
    c2 = c * c

    def p(deg, aa, bb):
        return askey_wilson(deg, AWParams(aa, bb, c, -c, q, ZERO), "recurrence")

    lhs = (
        a
        * b
        * (ONE - q ** (n - 1))
        * (ONE + c2 * q ** (n - 2))
        * p(n, a, b)
        * p(n - 2, a * q, b * q)
    )
    rhs = (ONE - a * b * q ** (n - 1)) * (ONE + a * b * c2 * q ** (n - 1)) * p(n - 1, a, b) * p(
        n - 1, a * q, b * q
    ) - (ONE - a * b) * (ONE + a * b * c2 * q ** (2 * n - 2)) * p(n - 1, a * q, b) * p(
        n - 1, a, b * q
    )
    return [("quadratic relation at the origin", lhs, rhs)]


def eval_quadratic_phi(pt, n: int) -> list[Comparison]:
    a, b, c, q = pt.a, pt.b, pt.c, pt.q
    c2 = c * c
    ai = a * I
    aqi = a * q * I

    def product(mult, num1, den1, order1, num2, den2, order2):
        # A vanishing scalar multiplier annihilates the product before the
        # series are formed; at n = 1 the first factor below is otherwise
        # non-terminating.
        if not mult:
            return ZERO
        s1 = terminating_phi(num1, den1, q, q, order=order1)
        s2 = terminating_phi(num2, den2, q, q, order=order2)
        return mult * s1 * s2

    lhs = product(
        a * b * q * (ONE - q ** (n - 1)) * (ONE + c2 * q ** (n - 2)),
        (q**-n, -(a * b * c2) * q ** (n - 1), ai, -ai),
        (a * b, a * c, -(a * c)),
        n,
        (q ** (-n + 2), -(a * b * c2) * q ** (n - 1), aqi, -aqi),
        (a * b * q * q, a * c * q, -(a * c * q)),
        n - 2,
    )
    rhs = product(
        (ONE - a * b * q**n) * (ONE + a * b * c2 * q ** (n - 1)),
        (q ** (-n + 1), -(a * b * c2) * q ** (n - 2), ai, -ai),
        (a * b, a * c, -(a * c)),
        n - 1,
        (q ** (-n + 1), -(a * b * c2) * q**n, aqi, -aqi),
        (a * b * q * q, a * c * q, -(a * c * q)),
        n - 1,
    ) - product(
        (ONE - a * b * q) * (ONE + a * b * c2 * q ** (2 * n - 2)),
        (q ** (-n + 1), -(a * b * c2) * q ** (n - 1), aqi, -aqi),
        (a * b * q, a * c * q, -(a * c * q)),
        n - 1,
        (q ** (-n + 1), -(a * b * c2) * q ** (n - 1), ai, -ai),
        (a * b * q, a * c, -(a * c)),
        n - 1,
    )
    return [("quadratic relation in terminating series form", lhs, rhs)]


def eval_conjecture_mw3(pt, n: int) -> list[Comparison]:
    a, b, c, d, q, x = pt.a, pt.b, pt.c, pt.d, pt.q, pt.x

    def p(deg, aa, bb):
        return askey_wilson(deg, AWParams(aa, bb, c, d, q, x), "recurrence")

    lhs = (
        a
        * b
        * (ONE - q ** (n - 1))
        * (ONE - c * d * q ** (n - 2))
        * p(n, a, b)
        * p(n - 2, a * q, b * q)
    )
    rhs = (ONE - a * b * q ** (n - 1)) * (ONE - a * b * c * d * q ** (n - 1)) * p(n - 1, a, b) * p(
        n - 1, a * q, b * q
    ) - (ONE - a * b) * (ONE - a * b * c * d * q ** (2 * n - 2)) * p(n - 1, a * q, b) * p(
        n - 1, a, b * q
    )
    return [("two-extra-parameter quadratic relation", lhs, rhs)]
