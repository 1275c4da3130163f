"""Check execution and deterministic reporting.

A run is a pure function of (check ids, sizes, trials, seed): results are
ordered by (check id, size, trial), scalars are serialized in canonical
string form, and the report timestamp is taken from SOURCE_DATE_EPOCH
(default epoch zero), so identical inputs produce byte-identical reports.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass, field
from datetime import datetime, timezone

import random

from .. import __version__
from ..errors import PoleError
from .points import _MAX_ATTEMPTS, ParamPoint
from .registry import CheckDef, get_check

PASS = "pass"
FAIL = "fail"
EVIDENCE_PASS = "evidence-pass"
EVIDENCE_FAIL = "evidence-fail"
SKIPPED = "skipped-degenerate"


@dataclass(frozen=True)
class CheckResult:
    """Outcome of one check at one size and trial, with witnesses on non-pass."""

    check: str
    n: int
    trial: int
    seed: int
    status: str
    point: dict = field(default_factory=dict)
    lhs: str | None = None
    rhs: str | None = None
    detail: str | None = None

    def to_dict(self) -> dict:
        out: dict = {
            "check": self.check,
            "n": self.n,
            "trial": self.trial,
            "seed": self.seed,
            "status": self.status,
            "point": self.point,
        }
        if self.lhs is not None:
            out["lhs"] = self.lhs
        if self.rhs is not None:
            out["rhs"] = self.rhs
        if self.detail is not None:
            out["detail"] = self.detail
        return out


def run_check(check_id: str, n: int, point: ParamPoint) -> CheckResult:
    """Evaluate one check at one sampled point.

    Exact agreement of every comparison is a pass; a pole reached mid-way
    (possible only for hand-built points, since sampled ones are pre-vetted)
    is reported as skipped-degenerate, never as a crash.
    """
    entry = get_check(check_id)
    base = {
        "check": check_id,
        "n": n,
        "trial": point.trial,
        "seed": point.seed,
        "point": point.describe(),
    }
    try:
        comparisons = entry.evaluate(point, n)
    except (PoleError, ZeroDivisionError) as exc:
        return CheckResult(status=SKIPPED, detail=str(exc), **base)
    for label, lhs, rhs in comparisons:
        if lhs != rhs:
            status = EVIDENCE_FAIL if entry.mode == "evidence" else FAIL
            return CheckResult(
                status=status, lhs=str(lhs), rhs=str(rhs), detail=label, **base
            )
    return CheckResult(status=EVIDENCE_PASS if entry.mode == "evidence" else PASS, **base)


def _sample_and_check(entry: CheckDef, seed: int, trial: int, n: int) -> CheckResult:
    """Rejection-sample and evaluate in one pass (one evaluation per candidate).

    Mirrors :func:`~qdetlab.identities.points.sample_point` exactly: same RNG
    stream, same acceptance predicate (no pole), so a suite built this way is
    byte-identical to sampling and re-running separately.
    """
    rng = random.Random(f"{entry.id}|{seed}|{trial}")
    result = None
    for _ in range(_MAX_ATTEMPTS):
        point = ParamPoint(seed=seed, trial=trial, **entry.sample(rng))
        result = run_check(entry.id, n, point)
        if result.status != SKIPPED:
            return result
    return CheckResult(
        check=entry.id,
        n=n,
        trial=trial,
        seed=seed,
        status=SKIPPED,
        detail=(
            f"no non-degenerate point for check {entry.id!r} at n={n} "
            f"after {_MAX_ATTEMPTS} attempts (seed={seed}, trial={trial})"
        ),
    )


def _sizes_for(entry: CheckDef, n_min: int | None, n_max: int | None) -> list[int]:
    if n_min is None and n_max is None:
        return list(entry.default_sizes)
    lo = entry.min_size if n_min is None else max(n_min, entry.min_size)
    hi = max(entry.default_sizes) if n_max is None else n_max
    if entry.max_size is not None:
        hi = min(hi, entry.max_size)
    return list(range(lo, hi + 1))


def _timestamp() -> str:
    epoch = int(os.environ.get("SOURCE_DATE_EPOCH", "0"))
    return datetime.fromtimestamp(epoch, tz=timezone.utc).strftime("%Y-%m-%dT%H:%M:%SZ")


@dataclass(frozen=True)
class Report:
    """Seed-stamped aggregation of check results."""

    version: str
    seed: int
    started: str
    summary: dict
    results: tuple[CheckResult, ...]

    @property
    def failed(self) -> bool:
        """True when any identity check failed; evidence outcomes never count."""
        return self.summary["fail"] > 0

    def to_dict(self) -> dict:
        return {
            "version": self.version,
            "seed": self.seed,
            "started": self.started,
            "summary": self.summary,
            "results": [r.to_dict() for r in self.results],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2) + "\n"

    def to_text(self) -> str:
        lines = [f"qdet-lab report (seed={self.seed}, version={self.version})"]
        for r in self.results:
            lines.append(f"{r.status.upper()} check={r.check} n={r.n} trial={r.trial}")
            if r.status not in (PASS, EVIDENCE_PASS):
                if r.detail is not None:
                    lines.append(f"    where: {r.detail}")
                if r.lhs is not None:
                    lines.append(f"    lhs: {r.lhs}")
                if r.rhs is not None:
                    lines.append(f"    rhs: {r.rhs}")
                lines.append(f"    point: {json.dumps(r.point)}")
        s = self.summary
        lines.append(
            "summary: pass={pass} fail={fail} evidence_pass={evidence_pass} "
            "evidence_fail={evidence_fail} skipped={skipped}".format(**s)
        )
        return "\n".join(lines) + "\n"


def run_suite(
    check_ids: list[str],
    n_min: int | None = None,
    n_max: int | None = None,
    trials: int = 5,
    seed: int = 42,
) -> Report:
    """Run the cross product of checks x sizes x trials, deterministically.

    Sizes default to each check's own range; an explicit window is clamped
    to what the check supports.  Results are ordered by (check, n, trial).
    """
    if not check_ids:
        raise ValueError("no checks requested")
    if trials < 1:
        raise ValueError("trials must be >= 1")
    if n_min is not None and n_max is not None and n_min > n_max:
        raise ValueError("empty size range")
    entries = [get_check(cid) for cid in sorted(set(check_ids))]
    results: list[CheckResult] = []
    for entry in entries:
        for n in _sizes_for(entry, n_min, n_max):
            for trial in range(trials):
                results.append(_sample_and_check(entry, seed, trial, n))
    summary = {"pass": 0, "fail": 0, "evidence_pass": 0, "evidence_fail": 0, "skipped": 0}
    keys = {
        PASS: "pass",
        FAIL: "fail",
        EVIDENCE_PASS: "evidence_pass",
        EVIDENCE_FAIL: "evidence_fail",
        SKIPPED: "skipped",
    }
    for r in results:
        summary[keys[r.status]] += 1
    return Report(
        version=__version__,
        seed=seed,
        started=_timestamp(),
        summary=summary,
        results=tuple(results),
    )
