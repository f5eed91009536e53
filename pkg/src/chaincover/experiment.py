"""Bound tables, exact-radius comparisons and timing scans, written as CSV."""

from __future__ import annotations

import csv
import io
import time
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction

import numpy as np

from .chain import ChainedMatrix, bound_mu
from .cover import cover_recursive_rm, cover_t
from .errors import BudgetError, DomainError
from .oracle import exact_generalized_radius
from .rm import chained_rm

MU_COLUMNS = ["q", "r", "m", "t", "n", "k", "mu_t"]
EXACT_COLUMNS = MU_COLUMNS + ["R_t", "ratio"]


def _mu_rows(point, t_max):
    q, r, m = point
    ch = chained_rm(q, r, m)
    return [
        {"q": q, "r": r, "m": m, "t": t, "n": ch.n, "k": ch.k, "mu_t": bound_mu(ch, t)}
        for t in range(1, t_max + 1)
    ]


def _run(fn, items, t_max, jobs):
    if jobs > 1:
        with ProcessPoolExecutor(jobs) as pool:
            parts = list(pool.map(fn, items, [t_max] * len(items)))
    else:
        parts = [fn(item, t_max) for item in items]
    return [row for part in parts for row in part]


def sweep_mu(grid, t_max: int, jobs: int = 1) -> list[dict]:
    """One row per (q, r, m, t) with the bound mu_t of RM_q(r, m)."""
    if t_max < 1:
        raise DomainError("t_max must be at least 1")
    return _run(_mu_rows, [tuple(p) for p in grid], t_max, jobs)


def format_ratio(mu: int, radius: int) -> str:
    """mu/R rounded down to 6 decimals; 0/0 (full space) counts as tight."""
    if radius == 0:
        if mu != 0:
            raise AssertionError("nonzero bound for the full space")
        return "1.000000"
    frac = Fraction(mu, radius)
    scaled = frac.numerator * 10**6 // frac.denominator
    return f"{scaled // 10**6}.{scaled % 10**6:06d}"


def _exact_rows(item, t_max, on_budget="raise"):
    if isinstance(item, ChainedMatrix):
        label, ch = None, item
    else:
        label = tuple(item)
        ch = chained_rm(*label)
    q, r, m = label if label else (ch.q, "", "")
    rows = []
    for t in range(1, t_max + 1):
        try:
            radius = exact_generalized_radius(ch.gamma, t)
        except BudgetError:
            if on_budget == "skip":
                continue
            raise
        mu = bound_mu(ch, t)
        rows.append({
            "q": q, "r": r, "m": m, "t": t, "n": ch.n, "k": ch.k,
            "mu_t": mu, "R_t": radius, "ratio": format_ratio(mu, radius),
        })
    return rows


def _exact_rows_skip(item, t_max):
    return _exact_rows(item, t_max, "skip")


def sweep_exact(codes, t_max: int, jobs: int = 1, skip_over_budget: bool = False) -> list[dict]:
    """mu_t next to the exact R_t for small codes.

    ``codes`` holds (q, r, m) Reed-Muller triples or ChainedMatrix objects
    (the latter get empty r, m columns).
    """
    fn = _exact_rows_skip if skip_over_budget else _exact_rows
    return _run(fn, list(codes), t_max, jobs)


def write_csv(rows, columns, out=None) -> str:
    """Write rows with a header; returns the text and writes it to ``out`` if given."""
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=columns, lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow({c: row.get(c, "") for c in columns})
    text = buf.getvalue()
    if out is not None:
        if hasattr(out, "write"):
            out.write(text)
        else:
            with open(out, "w", newline="") as fh:
                fh.write(text)
    return text


def _median_ns(fn, reps):
    fn()  # warm-up
    times = []
    for _ in range(reps):
        start = time.perf_counter_ns()
        fn()
        times.append(time.perf_counter_ns() - start)
    return int(np.median(times))


def loglog_slope(ns, times) -> float:
    slope, _ = np.polyfit(np.log(ns), np.log(times), 1)
    return float(slope)


def timing_scan(m_range, t: int = 1, algorithm: str = "cover", r: int = 1,
                reps: int = 9, seed: int = 0) -> tuple[list[dict], float]:
    """Median wall time per input size and the least-squares log-log slope.

    ``algorithm`` is "cover" (row-by-row cover on RM(r, m)) or "cover-rm"
    (the recursive binary RM cover).
    """
    if reps < 1:
        raise DomainError("reps must be positive")
    rng = np.random.default_rng(seed)
    rows = []
    for m in m_range:
        n = 2 ** m
        vs = rng.integers(0, 2, size=(t, n))
        if algorithm == "cover":
            ch = chained_rm(2, r, m)
            fn = lambda: cover_t(ch, vs)  # noqa: E731
        elif algorithm == "cover-rm":
            fn = lambda: cover_recursive_rm(r, m, vs)  # noqa: E731
        else:
            raise DomainError(f"unknown algorithm {algorithm!r}")
        rows.append({"m": m, "n": n, "t": t, "median_ns": _median_ns(fn, reps)})
    slope = loglog_slope([row["n"] for row in rows], [row["median_ns"] for row in rows])
    return rows, slope
