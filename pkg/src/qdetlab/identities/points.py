"""Non-degenerate parameter points and the deterministic rejection sampler.

A :class:`ParamPoint` is one sampled assignment of every input a check needs:
plain rational parameters, square roots (kappa^2 = q and friends, so both
sides of a root-bearing identity use the same root), integer shifts, row
index tuples, variable lists, and raw matrix entries.  Sampling is a pure
function of ``(check id, seed, trial)``: candidates are drawn with
numerators in [-9, 9] \\ {0} and denominators in [1, 9] and rejected until
the target check evaluates without hitting a pole, so every returned point
is non-degenerate for that check.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from ..errors import DegenerateSampleError, PoleError
from ..gaussian import GaussianRational, ONE

_NUMERATORS = [k for k in range(-9, 10) if k != 0]


@dataclass(frozen=True)
class ParamPoint:
    """One sampled parameter assignment; only the slots a check uses are set."""

    seed: int = 0
    trial: int = 0
    kappa: GaussianRational | None = None
    alpha: GaussianRational | None = None
    beta: GaussianRational | None = None
    gamma: GaussianRational | None = None
    a: GaussianRational | None = None
    b: GaussianRational | None = None
    c: GaussianRational | None = None
    q: GaussianRational | None = None
    d: GaussianRational | None = None
    x: GaussianRational | None = None
    r: int | None = None
    k_tuple: tuple[int, ...] | None = None
    x_list: tuple[GaussianRational, ...] | None = None
    s_half: GaussianRational | None = None
    t_half: GaussianRational | None = None
    alpha_c: GaussianRational | None = None
    beta_c: GaussianRational | None = None
    gamma_c: GaussianRational | None = None
    extras: tuple[GaussianRational, ...] | None = None
    matrix_entries: tuple[GaussianRational, ...] | None = None

    def describe(self) -> dict:
        """JSON-ready view of the set slots, scalars in canonical form."""
        out: dict = {}
        for name in (
            "kappa", "alpha", "beta", "gamma", "a", "b", "c", "q", "d", "x",
            "s_half", "t_half", "alpha_c", "beta_c", "gamma_c",
        ):
            value = getattr(self, name)
            if value is not None:
                out[name] = str(value)
        if self.r is not None:
            out["r"] = self.r
        if self.k_tuple is not None:
            out["k_tuple"] = list(self.k_tuple)
        if self.x_list is not None:
            out["x_list"] = [str(v) for v in self.x_list]
        if self.extras is not None:
            out["extras"] = [str(v) for v in self.extras]
        if self.matrix_entries is not None:
            out["matrix_entries"] = [str(v) for v in self.matrix_entries]
        return out


def draw_rational(rng: random.Random) -> GaussianRational:
    """One nonzero rational with numerator in [-9,9] and denominator in [1,9]."""
    return GaussianRational(Fraction(rng.choice(_NUMERATORS), rng.randint(1, 9)))


def draw_unit_free(rng: random.Random) -> GaussianRational:
    """A nonzero rational that is neither 1 nor -1 (valid q or kappa)."""
    while True:
        v = draw_rational(rng)
        if v != ONE and v != -ONE:
            return v


def draw_complex(rng: random.Random) -> GaussianRational:
    return GaussianRational(
        Fraction(rng.choice(_NUMERATORS), rng.randint(1, 9)),
        Fraction(rng.choice(_NUMERATORS), rng.randint(1, 9)),
    )


def draw_r(rng: random.Random) -> int:
    return rng.randint(-2, 3)


def draw_k_tuple(rng: random.Random) -> tuple[int, ...]:
    """Twelve distinct row indices; checks slice the first n."""
    return tuple(rng.sample(range(1, 13), 12))


def draw_x_list(rng: random.Random, size: int = 6) -> tuple[GaussianRational, ...]:
    while True:
        values = tuple(draw_rational(rng) for _ in range(size))
        if len(set(values)) == size:
            return values


def sample_plain(rng, *, with_c=False, with_r=False, with_d=False, with_x=False) -> dict:
    """Plain rational a, b, q (optionally c, r, d, x) for root-free checks."""
    out = {"a": draw_rational(rng), "b": draw_rational(rng), "q": draw_unit_free(rng)}
    if with_c:
        out["c"] = draw_rational(rng)
    if with_r:
        out["r"] = draw_r(rng)
    if with_d:
        out["d"] = draw_rational(rng)
    if with_x:
        out["x"] = draw_rational(rng)
    return out


def sample_roots(rng, *, with_r=True) -> dict:
    """Roots kappa, alpha, beta, gamma with a, b, c, q their squares."""
    kappa = draw_unit_free(rng)
    alpha, beta, gamma = (draw_rational(rng) for _ in range(3))
    out = {
        "kappa": kappa,
        "alpha": alpha,
        "beta": beta,
        "gamma": gamma,
        "a": alpha * alpha,
        "b": beta * beta,
        "c": gamma * gamma,
        "q": kappa * kappa,
    }
    if with_r:
        out["r"] = draw_r(rng)
    return out


def sample_classical(rng) -> dict:
    return {
        "alpha_c": draw_rational(rng),
        "beta_c": draw_rational(rng),
        "gamma_c": draw_rational(rng),
        "r": draw_r(rng),
    }


def sample_extras(rng, count: int, *, with_q=True) -> dict:
    out: dict = {"extras": tuple(draw_rational(rng) for _ in range(count))}
    if with_q:
        out["q"] = draw_unit_free(rng)
    return out


def sample_matrix(rng, size: int = 6) -> dict:
    return {"matrix_entries": tuple(draw_complex(rng) for _ in range(size * size))}


_MAX_ATTEMPTS = 1000


def sample_point(check_id: str, seed: int, trial: int, n: int | None = None) -> ParamPoint:
    """Deterministic non-degenerate point for ``(check_id, seed, trial)``.

    Candidates are rejection-resampled until the check evaluates cleanly at
    size ``n`` (the check's largest default size when omitted).  Identical
    arguments always return the identical point.
    """
    from .registry import get_check

    entry = get_check(check_id)
    rng = random.Random(f"{check_id}|{seed}|{trial}")
    size = n if n is not None else max(entry.default_sizes)
    for _ in range(_MAX_ATTEMPTS):
        point = ParamPoint(seed=seed, trial=trial, **entry.sample(rng))
        try:
            entry.evaluate(point, size)
        except (PoleError, ZeroDivisionError):
            continue
        return point
    raise DegenerateSampleError(
        f"no non-degenerate point for check {check_id!r} at n={size} "
        f"after {_MAX_ATTEMPTS} attempts (seed={seed}, trial={trial})"
    )
