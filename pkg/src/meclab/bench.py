"""Timing harness behind ``meclab bench``.

Each row is one timed run of one algorithm on one generated graph.  The
``lazyiter`` suite times the incremental enumeration against per-clique
recomputation over every root; the ``count`` suite times the memoised
counter against brute-force enumeration (the latter only up to the oracle
cap).  Timings are wall-clock microseconds from :func:`time.perf_counter`.
"""
from __future__ import annotations

import csv
import time
from typing import Dict, Iterable, List, Optional, Sequence

from . import _backend, oracle
from .counting import mec_count
from .generate import GenSpec, gen_chordal

BASE_COLUMNS = ["n", "m", "delta", "seed", "algo", "run_index", "micros"]
EXTRA_COLUMN = {"lazyiter": "outputs", "count": "result"}


def _timed(fn):
    t0 = time.perf_counter()
    value = fn()
    return value, int(round((time.perf_counter() - t0) * 1e6))


def _all_roots(fn, adj, S, n):
    return sum(fn(adj, S, v) for v in range(n))


def lazyiter_rows(g, seed, reps, backends: Sequence[str]) -> List[Dict]:
    adj = g.adj_masks()
    S = (1 << g.n) - 1
    rows = []
    for name in backends:
        k = _backend.get(name)
        suffix = "" if len(backends) == 1 else f"-{k.NAME}"
        for run in range(reps):
            for algo, fn in (("lazyiter", k.lazy_count), ("eager", k.eager_count)):
                outputs, micros = _timed(lambda: _all_roots(fn, adj, S, g.n))
                rows.append(_row(g, seed, algo + suffix, run, micros, outputs=outputs))
    return rows


def count_rows(g, seed, reps, backends: Sequence[str]) -> List[Dict]:
    rows = []
    for name in backends:
        k = _backend.get(name)
        suffix = "" if len(backends) == 1 else f"-{k.NAME}"
        for run in range(reps):
            value, micros = _timed(lambda: mec_count(g, backend=name))
            rows.append(_row(g, seed, "lazycount" + suffix, run, micros, result=value))
    if g.n <= oracle.oracle_cap():
        for run in range(reps):
            value, micros = _timed(lambda: oracle.oracle_count(g))
            rows.append(_row(g, seed, "oracle", run, micros, result=value))
    return rows


def _row(g, seed, algo, run, micros, **extra):
    row = {"n": g.n, "m": g.edge_count(), "delta": g.max_degree(), "seed": seed,
           "algo": algo, "run_index": run, "micros": micros}
    row.update(extra)
    return row


def run_suite(suite: str, n: int, r: float, seed: int, reps: int, graphs: int = 1,
              backends: Optional[Sequence[str]] = None) -> List[Dict]:
    if suite not in EXTRA_COLUMN:
        raise ValueError(f"unknown suite {suite!r}")
    backends = list(backends) if backends else [_backend.kernels.NAME]
    make = lazyiter_rows if suite == "lazyiter" else count_rows
    rows = []
    for i in range(graphs):
        s = seed + i
        g = gen_chordal(GenSpec(n, r, s))
        rows.extend(make(g, s, reps, backends))
    return rows


def write_csv(path, suite: str, rows: Iterable[Dict]) -> None:
    cols = BASE_COLUMNS + [EXTRA_COLUMN[suite]]
    with open(path, "w", newline="") as fh:
        w = csv.DictWriter(fh, fieldnames=cols)
        w.writeheader()
        for row in rows:
            w.writerow(row)
