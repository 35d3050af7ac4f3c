"""
Exhaustive identity scans over a group, with CSV / JSON emission.

Each check produces one record per Bruhat pair ``y <= x`` (``hecke7a``: one per
``x``, with ``y`` the identity).  A record carries the coefficient vector of the
polynomial the check looked at and a status: ``pass``, ``fail`` (an asserted
property broke) or ``warn`` (a reported-only property broke).

Reported-only: ``qnonneg`` always; the positivity half of ``coeffs`` and
``qduality`` on non-crystallographic groups.
"""
from __future__ import annotations

import csv
import io
import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .coxeter import DEFAULT_CAP, CoxeterMatrix, GroupTable, build_group
from .hecke import verify_7a
from .klcore import KLCache
from .laurent import HalfLaurent
from .xi import analyze_xi, xi_a, xi_b, xi_c, xi_duality_check, xi_orthogonality

__all__ = ["CHECKS", "ScanRecord", "ScanReport", "run_scan", "records_to_csv", "records_to_json"]

CHECKS = ("forms", "duality", "orthogonality", "bars", "hecke7a", "coeffs", "qnonneg", "rduality", "qduality")
FIELDS = ("group", "check", "y", "x", "N", "coeffs", "status")


@dataclass(frozen=True)
class ScanRecord:
    group: str
    check: str
    y: str
    x: str
    N: int
    coeffs: tuple[int, ...]
    status: str
    poly: str = ""

    def as_dict(self) -> dict:
        return {"group": self.group, "check": self.check, "y": self.y, "x": self.x,
                "N": self.N, "coeffs": list(self.coeffs), "status": self.status}


@dataclass
class ScanReport:
    group: str
    checks: tuple[str, ...]
    records: list[ScanRecord]
    counts: dict[str, dict[str, int]] = field(default_factory=dict)
    violations: list[dict] = field(default_factory=list)
    duration: float = 0.0

    @property
    def failures(self) -> int:
        return sum(c["fail"] for c in self.counts.values())

    @property
    def warnings(self) -> int:
        return sum(c["warn"] for c in self.counts.values())

    def summary(self) -> str:
        lines = [f"scan {self.group}: {len(self.records)} records in {self.duration:.2f}s"]
        for chk in self.checks:
            c = self.counts[chk]
            lines.append(f"  {chk:<14} pass={c['pass']} fail={c['fail']} warn={c['warn']}")
        for v in self.violations:
            lines.append(f"  {v['status'].upper()} {v['check']} y=[{v['y']}] x=[{v['x']}]: {v['poly']}")
        return "\n".join(lines)


def _vec(p: HalfLaurent) -> tuple[int, ...]:
    return tuple(p.coeff_vector())


def _check_pair(cache: KLCache, chk: str, y: int, x: int, crystal: bool):
    """(polynomial examined, status) for one check on one pair."""
    g = cache.group
    if chk == "forms":
        a = xi_a(cache, y, x)
        ok = a == xi_b(cache, y, x) == xi_c(cache, y, x)
        return a, "pass" if ok else "fail"
    if chk == "duality":
        return xi_b(cache, y, x), "pass" if xi_duality_check(cache, y, x) else "fail"
    if chk == "orthogonality":
        val = xi_orthogonality(cache, y, x)
        return val, "pass" if val == (1 if y == x else 0) else "fail"
    if chk == "bars":
        return cache.p_poly(y, x), "pass" if cache.check_bar_identities(y, x).all() else "fail"
    if chk == "coeffs":
        an = analyze_xi(cache, y, x)
        if not an.asserted_ok:
            status = "fail"
        elif not an.positivity_ok:
            status = "fail" if crystal else "warn"
        else:
            status = "pass"
        return xi_b(cache, y, x), status
    if chk == "qnonneg":
        val = cache.q_poly(y, x)
        return val, "pass" if all(c >= 0 for c in val.coeff_vector()) else "warn"
    if chk == "rduality":
        val = cache.r_poly(y, x)
        ok = val == cache.r_poly(g.left_w0(x), g.left_w0(y))
        return val, "pass" if ok else "fail"
    if chk == "qduality":
        val = cache.q_poly(y, x)
        ok = val == cache.p_poly(g.left_w0(x), g.left_w0(y))
        return val, "pass" if ok else ("fail" if crystal else "warn")
    raise ValueError(f"unknown check {chk!r}")


def _scan_part(matrix: CoxeterMatrix, cap: int, checks, part: int, parts: int, group=None):
    g = group if group is not None else build_group(matrix, cap)
    cache = KLCache(g)
    crystal = g.is_crystallographic()
    out = []
    for x in range(part, g.size, parts):
        for chk in checks:
            if chk == "hecke7a":
                ok = verify_7a(cache, x)
                out.append((chk, 0, x, xi_a(cache, 0, x), "pass" if ok else "fail"))
                continue
            for y in g.lower_interval(x):
                poly, status = _check_pair(cache, chk, y, x, crystal)
                out.append((chk, y, x, poly, status))
    return [(c, y, x, str(p), _vec(p), s) for c, y, x, p, s in out]


def run_scan(group: GroupTable, checks=CHECKS, jobs: int = 1, cap: int = DEFAULT_CAP) -> ScanReport:
    """Run the checks over every pair of ``group``; output order is independent of ``jobs``."""
    checks = tuple(checks)
    for chk in checks:
        if chk not in CHECKS:
            raise ValueError(f"unknown check {chk!r}; choose from {', '.join(CHECKS)}")
    start = time.perf_counter()
    if jobs <= 1:
        rows = _scan_part(group.matrix, cap, checks, 0, 1, group=group)
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            futures = [pool.submit(_scan_part, group.matrix, cap, checks, k, jobs) for k in range(jobs)]
            rows = [r for f in futures for r in f.result()]
    order = {c: i for i, c in enumerate(checks)}
    rows.sort(key=lambda r: (order[r[0]], r[1], r[2]))

    name = group.name
    length = group.length
    records = [
        ScanRecord(name, c, group.canonical_word(y), group.canonical_word(x),
                   length[x] - length[y], vec, status, text)
        for c, y, x, text, vec, status in rows
    ]
    counts = {c: {"pass": 0, "fail": 0, "warn": 0} for c in checks}
    violations = []
    for r in records:
        counts[r.check][r.status] += 1
        if r.status != "pass":
            violations.append({"check": r.check, "y": r.y, "x": r.x, "poly": r.poly, "status": r.status})
    return ScanReport(name, checks, records, counts, violations, time.perf_counter() - start)


def records_to_csv(records) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(FIELDS)
    for r in records:
        w.writerow([r.group, r.check, r.y, r.x, r.N, " ".join(map(str, r.coeffs)), r.status])
    return buf.getvalue()


def records_to_json(records) -> str:
    return json.dumps([r.as_dict() for r in records], indent=1) + "\n"


def records_from_csv(text: str) -> list[dict]:
    rows = []
    for row in csv.DictReader(io.StringIO(text)):
        row["N"] = int(row["N"])
        row["coeffs"] = [int(c) for c in row["coeffs"].split()]
        rows.append(row)
    return rows
