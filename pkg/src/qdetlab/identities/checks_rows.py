"""Checks for the arbitrary-row determinant machinery.

These exercise the internal scaffolding behind the headline identities: the
ordered-partition sum R, the denominator-cleared row matrix, its triangular
conjugations, the partial-fraction residue identities, and the closed-form
inverses of the q-binomial triangular matrices.
"""

from __future__ import annotations

from ..gaussian import ONE, ZERO, GaussianRational
from ..linalg import ExactMatrix, determinant, submatrix
from ..qseries import q_binomial, q_pochhammer as qp
from .builders import (
    build_m,
    build_triangular,
    compute_r,
    moment_hankel_rows,
    theorem_matrix_rows,
    triangular_inverse,
)

Comparison = tuple[str, GaussianRational, GaussianRational]


def _sign(n: int) -> GaussianRational:
    return ONE if n % 2 == 0 else -ONE


def _r_weighted_sum(n, k, a, b, c, q, sign_exponent_from_n: bool) -> GaussianRational:
    """sum_nu (+-1)^... (abc q^{2nu+1}; q^2)_{n-nu} (acq; q^2)_nu R_{n,nu}."""
    q2 = q * q
    total = ZERO
    for nu in range(n + 1):
        sign = _sign(n - nu) if sign_exponent_from_n else _sign(nu)
        total = total + (
            sign
            * qp(a * b * c * q ** (2 * nu + 1), q2, n - nu)
            * qp(a * c * q, q2, nu)
            * compute_r(n, nu, k, a, b, q)
        )
    return total


def eval_thm_rows(pt, n: int) -> list[Comparison]:
    a, b, c, q = pt.a, pt.b, pt.c, pt.q
    k = pt.k_tuple[:n]
    lhs = determinant(theorem_matrix_rows(k, a, b, c, q))
    pre = a ** (n * (n - 3) // 2) * q ** (n * (n + 1) * (n - 4) // 6)
    for i in range(1, n + 1):
        pre = (
            pre
            * qp(a * q, q, k[i - 1] - 1)
            * qp(b * q, q, i - 2)
            / qp(a * b * q * q, q, k[i - 1] + n - 2)
        )
    for i in range(n):
        for j in range(i + 1, n):
            pre = pre * (q ** (k[i] - 1) - q ** (k[j] - 1))
    rhs = pre * _r_weighted_sum(n, k, a, b, c, q, sign_exponent_from_n=True)
    return [("arbitrary-row determinant vs R-sum closed form", lhs, rhs)]


def eval_q_kratt(pt, n: int) -> list[Comparison]:
    a, b, q = pt.a, pt.b, pt.q
    k = pt.k_tuple[:n]
    lhs = determinant(moment_hankel_rows(k, a, b, q))
    rhs = a ** (n * (n - 1) // 2) * q ** ((n + 1) * n * (n - 1) // 6)
    for i in range(1, n + 1):
        rhs = rhs * qp(a * q, q, k[i - 1] - 1) / qp(a * b * q * q, q, k[i - 1] + n - 2)
    for i in range(n):
        for j in range(i + 1, n):
            rhs = rhs * (q ** (k[i] - 1) - q ** (k[j] - 1))
    for j in range(1, n + 1):
        rhs = rhs * qp(b * q, q, j - 1)
    return [("arbitrary-row moment determinant vs product form", lhs, rhs)]


def eval_r_closed(pt, n: int) -> list[Comparison]:
    a, b, q = pt.a, pt.b, pt.q
    consecutive = tuple(range(1, n + 1))
    comps = []
    for nu in range(n + 1):
        lhs = compute_r(n, nu, consecutive, a, b, q)
        rhs = (
            q ** ((n - nu) * (n - nu - 1) // 2)
            * q_binomial(n, nu, q)
            * qp(a * q ** (nu + 1), q, n - nu)
            * qp(a * b * q**n, q, nu)
        )
        comps.append((f"R at consecutive rows, nu={nu}", lhs, rhs))
    return comps


def eval_r_recurrence(pt, n: int) -> list[Comparison]:
    a, b, q = pt.a, pt.b, pt.q
    k = pt.k_tuple[:n]
    head = k[:-1]
    kn = k[-1]
    comps = []
    for nu in range(n + 1):
        lhs = compute_r(n, nu, k, a, b, q)
        rhs = (ONE - a * b * q ** (kn + n - 1)) * compute_r(n - 1, nu - 1, head, a * q, b, q) + q ** (
            n - 1
        ) * (ONE - a * q**kn) * compute_r(n - 1, nu, head, a, b, q)
        comps.append((f"R last-index recurrence, nu={nu}", lhs, rhs))
    return comps


def eval_r_sum(pt, n: int) -> list[Comparison]:
    a, b, q = pt.a, pt.b, pt.q
    k = pt.k_tuple[:n]
    total = ZERO
    for nu in range(n + 1):
        total = total + _sign(n - nu) * compute_r(n, nu, k, a, b, q)
    rhs = a**n * q ** (n * (n - 1) // 2 + sum(k)) * qp(b, q, n)
    return [("alternating R-sum vs single product", total, rhs)]


def eval_residue_ids(pt, n: int) -> list[Comparison]:
    a, b, c, q = pt.a, pt.b, pt.c, pt.q
    xs = pt.x_list[:n]
    prod_x = ONE
    inv_ax = ONE
    inv_abx = ONE
    abq = a * b * q ** (n - 1)
    for x in xs:
        prod_x = prod_x * x
        inv_ax = inv_ax * (ONE - a * x)
        inv_abx = inv_abx * (ONE - abq * x)
    comps = []
    for j in range(1, n + 1):
        s1 = ZERO
        s2 = ZERO
        for nu in range(n):
            x = xs[nu]
            num = (x / q - c * q ** (j - 1)) * qp(a * x, q, j - 1) * qp(a * b * q**j * x, q, n - j)
            core = x
            for l in range(n):
                if l != nu:
                    core = core * (xs[l] - x)
            s1 = s1 + num / (core * (ONE - a * x))
            s2 = s2 + num / (core * (ONE - abq * x))
        rhs1 = c * q ** (j - 1) / prod_x
        if j == 1:
            rhs1 = rhs1 + _sign(n) * a ** (n - 1) * (ONE - a * c * q) * qp(b * q, q, n - 1) / (
                q * inv_ax
            )
        comps.append((f"residue identity (first kind), j={j}", -s1, rhs1))
        rhs2 = c * q ** (j - 1) / prod_x
        if j == n:
            rhs2 = rhs2 - a ** (n - 1) * q ** (n * (n - 3) // 2) * (
                ONE - a * b * c * q ** (2 * n - 1)
            ) * qp(b * q, q, n - 1) / inv_abx
        comps.append((f"residue identity (second kind), j={j}", -s2, rhs2))
    return comps


def eval_vandermonde_vw(pt, n: int) -> list[Comparison]:
    a, b, c, q = pt.a, pt.b, pt.c, pt.q
    xs = pt.x_list[:n]
    vandermonde = ONE
    for i in range(n):
        for j in range(i + 1, n):
            vandermonde = vandermonde * (xs[j] - xs[i])
    prod_x = ONE
    inv_ax = ONE
    inv_abx = ONE
    abq = a * b * q ** (n - 1)
    for x in xs:
        prod_x = prod_x * x
        inv_ax = inv_ax * (ONE - a * x)
        inv_abx = inv_abx * (ONE - abq * x)
    comps = []
    for k in range(1, n + 1):

        def last_col(x, divisor):
            return -(
                (x - c * q**k)
                * qp(a * x, q, k - 1)
                * qp(a * b * q**k * x, q, n - k)
                / (x * divisor)
            )

        v = ExactMatrix.build(
            n,
            n,
            lambda i, j: xs[i - 1] ** (j - 1)
            if j < n
            else last_col(xs[i - 1], ONE - a * xs[i - 1]),
        )
        lhs_v = _sign(n - 1) * determinant(v) / vandermonde
        rhs_v = c * q**k / prod_x
        if k == 1:
            rhs_v = rhs_v + _sign(n) * a ** (n - 1) * (ONE - a * c * q) * qp(b * q, q, n - 1) / inv_ax
        comps.append((f"structured-column Vandermonde (first kind), k={k}", lhs_v, rhs_v))

        w = ExactMatrix.build(
            n,
            n,
            lambda i, j: xs[i - 1] ** (j - 1)
            if j < n
            else last_col(xs[i - 1], ONE - abq * xs[i - 1]),
        )
        lhs_w = _sign(n - 1) * determinant(w) / vandermonde
        rhs_w = c * q**k / prod_x
        if k == n:
            rhs_w = rhs_w - a ** (n - 1) * q ** ((n - 1) * (n - 2) // 2) * (
                ONE - a * b * c * q ** (2 * n - 1)
            ) * qp(b * q, q, n - 1) / inv_abx
        comps.append((f"structured-column Vandermonde (second kind), k={k}", lhs_w, rhs_w))
    return comps


def _conjugated(pt, n: int):
    a, b, c, q = pt.a, pt.b, pt.c, pt.q
    k = pt.k_tuple[:n]
    m = build_m(k, a, b, c, q)
    p = build_triangular("X", n, k, a=a, q=q) @ m @ build_triangular("Y", n, None, q=q)
    qq = build_triangular("L", n, k, a=a, b=b, q=q) @ m @ build_triangular("U", n, None, q=q)
    return k, m, p, qq


def eval_bottom_rows(pt, n: int) -> list[Comparison]:
    a, b, c, q = pt.a, pt.b, pt.c, pt.q
    k, _, p, qq = _conjugated(pt, n)
    sum_k = sum(k)
    inv_ax = ONE
    inv_abx = ONE
    for kv in k:
        inv_ax = inv_ax * (ONE - a * q**kv)
        inv_abx = inv_abx * (ONE - a * b * q ** (kv + n - 1))
    comps = []
    for j in range(1, n + 1):
        if j == 1:
            expected_p = _sign(n) * a ** (n - 1) * (ONE - a * c * q) * qp(b * q, q, n - 1) / (
                q * inv_ax
            )
            expected_q = c * q ** (-sum_k)
        elif j == n:
            expected_p = c * q ** (n - 1 - sum_k)
            expected_q = -(
                a ** (n - 1)
                * q ** (n * (n - 3) // 2)
                * (ONE - a * b * c * q ** (2 * n - 1))
                * qp(b * q, q, n - 1)
                / inv_abx
            )
        else:
            expected_p = ZERO
            expected_q = ZERO
        comps.append((f"first conjugation bottom row, j={j}", p.at(n, j), expected_p))
        comps.append((f"second conjugation bottom row, j={j}", qq.at(n, j), expected_q))
    return comps


def eval_triangular_inverses(pt, n: int) -> list[Comparison]:
    q = pt.q
    identity = ExactMatrix.identity(n)
    comps = []
    for kind in ("Y", "U"):
        tri = build_triangular(kind, n, None, q=q)
        prod = tri @ triangular_inverse(kind, n, q)
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                comps.append(
                    (f"{kind} inverse product entry ({i},{j})", prod.at(i, j), identity.at(i, j))
                )
    y = build_triangular("Y", n, None, q=q)
    u = build_triangular("U", n, None, q=q)
    all_rows = list(range(1, n + 1))
    for i in range(1, n + 1):
        rows = [r for r in all_rows if r != i]
        dy = determinant(submatrix(y, rows, list(range(1, n))))
        comps.append((f"Y minor dropping row {i}", dy, (-q) ** (i - n)))
        du = determinant(submatrix(u, rows, list(range(2, n + 1))))
        comps.append((f"U minor dropping row {i}", du, (-q) ** (i - 1)))
    return comps


def eval_pq_lemma(pt, n: int) -> list[Comparison]:
    a, b, c, q = pt.a, pt.b, pt.c, pt.q
    k, _, p, qq = _conjugated(pt, n)
    head = list(k[:-1])
    denom = q ** sum(head)
    for i in range(n - 1):
        for j in range(i + 1, n - 1):
            denom = denom * (q ** head[i] - q ** head[j])
    rows = list(range(1, n))
    shifted_cols = list(range(2, n + 1))
    lead_cols = list(range(1, n))
    comps = [
        (
            "shifted principal minor of first conjugation",
            determinant(submatrix(p, rows, shifted_cols)),
            _sign(n - 1) * determinant(build_m(head, a * q, b, c * q, q)) / denom,
        ),
        (
            "leading principal minor of second conjugation",
            determinant(submatrix(qq, rows, lead_cols)),
            _sign(n - 1) * determinant(build_m(head, a, b, c, q)) / denom,
        ),
    ]
    ratio_p = ONE
    ratio_q = ONE
    for kv in head:
        ratio_p = ratio_p * (ONE - a * b * q ** (kv + n - 1))
        ratio_q = ratio_q * (ONE - a * q**kv)
    comps.append(
        (
            "cross relation between the two off-principal minors",
            determinant(submatrix(p, rows, lead_cols)) / ratio_p,
            (-q) ** (1 - n) * determinant(submatrix(qq, rows, shifted_cols)) / ratio_q,
        )
    )
    return comps


def eval_m_recurrence(pt, n: int) -> list[Comparison]:
    a, b, c, q = pt.a, pt.b, pt.c, pt.q
    k = pt.k_tuple[:n]
    head = k[:-1]
    kn = k[-1]
    det_full = determinant(build_m(k, a, b, c, q))
    denom = a ** (n - 2) * qp(b * q, q, n - 2)
    for kv in head:
        denom = denom * (q**kv - q**kn)
    lhs = det_full / denom
    rhs = (ONE - a * c * q) * (ONE - a * b * q ** (kn + n - 1)) * determinant(
        build_m(head, a * q, b, c * q, q)
    ) / q - q ** (n * (n - 3) // 2) * (ONE - a * b * c * q ** (2 * n - 1)) * (
        ONE - a * q**kn
    ) * determinant(build_m(head, a, b, c, q))
    return [("cleared-kernel determinant size recurrence", lhs, rhs)]


def eval_m_closed(pt, n: int) -> list[Comparison]:
    a, b, c, q = pt.a, pt.b, pt.c, pt.q
    k = pt.k_tuple[:n]
    det_m = determinant(build_m(k, a, b, c, q))
    pre = _sign(n) * a ** (n * (n - 3) // 2) * q ** (n * (n + 1) * (n - 4) // 6)
    for i in range(1, n + 1):
        pre = pre * qp(b * q, q, i - 2)
    for i in range(n):
        for j in range(i + 1, n):
            pre = pre * (q ** (k[i] - 1) - q ** (k[j] - 1))
    closed = pre * _r_weighted_sum(n, k, a, b, c, q, sign_exponent_from_n=False)
    scale = ONE
    for kv in k:
        scale = scale * qp(a * q, q, kv - 1) / qp(a * b * q * q, q, kv + n - 2)
    return [
        ("cleared-kernel determinant vs R-sum closed form", det_m, closed),
        (
            "kernel determinant vs scaled cleared determinant",
            determinant(theorem_matrix_rows(k, a, b, c, q)),
            scale * det_m,
        ),
    ]
