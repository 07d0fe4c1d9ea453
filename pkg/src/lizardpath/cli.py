"""Benchmark command line: instance generation, solving, cross-checking,
and table-style reports.

Node ids on the command line are 1-based, matching the DIMACS text
format the tool reads and writes; the library API underneath is
0-based.  Metrics records follow a fixed JSON schema (see
``metrics_record``) so reports are machine-comparable across runs.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict

from .contest import RunMetrics, SolveOptions, contest_run, solve_sssp
from .generators import GenSpec, generate
from .graph import Graph, GraphError, LabelState, find_shorter_arms, load_dimacs, save_dimacs
from .hdm import collect_origins, hdm_run
from .oracle import BRUTE_FORCE_LIMIT, bellman_ford, brute_force, dijkstra

UNREACHABLE_SENTINEL = 0xFFFFFFFFFFFFFFFF

_FNV_OFFSET = 0xCBF29CE484222325
_FNV_PRIME = 0x100000001B3
_MASK64 = (1 << 64) - 1


def fnv1a64(data: bytes) -> int:
    h = _FNV_OFFSET
    for b in data:
        h = ((h ^ b) * _FNV_PRIME) & _MASK64
    return h


def checksum_dist(dist: list[int | None]) -> int:
    """64-bit FNV-1a over the distance vector, 8-byte little-endian words;
    unreachable entries hash as the all-ones sentinel."""
    buf = bytearray()
    for d in dist:
        buf += (UNREACHABLE_SENTINEL if d is None else d).to_bytes(8, "little")
    return fnv1a64(bytes(buf))


def metrics_record(
    instance: str,
    family: str | None,
    g: Graph,
    seed: int | None,
    algo: str,
    metrics: RunMetrics | None,
    dist: list[int | None],
) -> dict:
    """The fixed metrics schema shared by solve and bench outputs."""
    m = metrics or RunMetrics()
    return {
        "instance": instance,
        "family": family,
        "n": g.n,
        "E": g.arc_count,
        "seed": seed,
        "algo": algo,
        "reap_mode": m.reap_mode if metrics else None,
        "origin_mode": m.origin_mode if metrics else None,
        "D": m.deletions,
        "Q_A": m.arc_scans,
        "Q_S": m.relabels,
        "C_total": m.le_cost,
        "lambda": m.harmonic,
        "t_hdm_ms": m.t_hdm_ms,
        "t_ca_ms": m.t_ca_ms,
        "w_checksum": checksum_dist(dist),
    }


# -- solve ------------------------------------------------------------


def run_algo(g: Graph, algo: str, opts: SolveOptions) -> tuple[list[int | None], RunMetrics | None]:
    """Run one solver; oracle baselines report their time under t_ca_ms."""
    if algo == "ca":
        labels, metrics = solve_sssp(g, opts)
        return labels.dist, metrics
    if algo == "hdm":
        t0 = time.perf_counter()
        out = hdm_run(g, opts.source)
        metrics = RunMetrics(reap_mode=opts.reap_mode, origin_mode=opts.origin_mode)
        metrics.t_hdm_ms = (time.perf_counter() - t0) * 1000.0
        metrics.hdm_arc_scans = out.arc_scans
        return out.labels.dist, metrics
    if algo in ("dijkstra", "bf"):
        t0 = time.perf_counter()
        fn = dijkstra if algo == "dijkstra" else bellman_ford
        dist, _ = fn(g, opts.source)
        metrics = RunMetrics(reap_mode=opts.reap_mode, origin_mode=opts.origin_mode)
        metrics.t_ca_ms = (time.perf_counter() - t0) * 1000.0
        return dist, metrics
    raise ValueError(f"unknown algorithm {algo!r}")


def cmd_solve(args: argparse.Namespace) -> int:
    with open(args.input, "r", encoding="utf-8") as fh:
        g = load_dimacs(fh)
    source = args.source - 1
    opts = SolveOptions(
        source=source,
        reap_mode="cut_agency" if args.reap == "cut" else "repeat_delete",
        origin_mode="inline_seeking" if args.origins == "seek" else "full_scan",
    )
    dist, metrics = run_algo(g, args.algo, opts)
    record = metrics_record(args.input, None, g, None, args.algo, metrics, dist)
    if args.metrics:
        with open(args.metrics, "w", encoding="utf-8") as fh:
            json.dump(record, fh, indent=2)
            fh.write("\n")
    if args.dump_dist:
        with open(args.dump_dist, "w", encoding="utf-8") as fh:
            for v, d in enumerate(dist):
                fh.write(f"{v + 1} {'inf' if d is None else d}\n")
    print(
        f"{args.algo}: n={g.n} E={g.arc_count} source={args.source} "
        f"checksum={record['w_checksum']:016x} "
        f"t_hdm={record['t_hdm_ms']:.1f}ms t_ca={record['t_ca_ms']:.1f}ms"
    )
    return 0


# -- verify -----------------------------------------------------------


def verify_instance(g: Graph, source: int, inject_fault: bool = False) -> tuple[bool, list[str]]:
    """Cross-check the pipeline against the oracles on one instance.

    inject_fault corrupts one solved distance first (test hook for the
    FAIL path).
    """
    labels, _ = solve_sssp(g, SolveOptions(source=source))
    if inject_fault and g.n > 1:
        victim = (source + 1) % g.n
        labels.dist[victim] = (labels.dist[victim] or 0) + 1
    lines: list[str] = []
    ok = True

    def check(name: str, passed: bool):
        nonlocal ok
        lines.append(f"{'PASS' if passed else 'FAIL'} {name}")
        ok = ok and passed

    dj, _ = dijkstra(g, source)
    bf, _ = bellman_ford(g, source)
    check("ca == dijkstra", labels.dist == dj)
    check("bellman_ford == dijkstra", bf == dj)
    check("no shorter arms remain", not find_shorter_arms(g, labels))
    if g.n <= BRUTE_FORCE_LIMIT:
        br, _ = brute_force(g, source)
        check("brute force agrees", br == dj)
    return ok, lines


def cmd_verify(args: argparse.Namespace) -> int:
    with open(args.input, "r", encoding="utf-8") as fh:
        g = load_dimacs(fh)
    ok, lines = verify_instance(g, args.source - 1)
    for line in lines:
        print(line)
    return 0 if ok else 1


# -- gen --------------------------------------------------------------


def spec_from_args(args: argparse.Namespace) -> GenSpec:
    kwargs = dict(
        family=args.family,
        weight_range=(args.wmin, args.wmax),
        seed=args.seed,
    )
    if args.family == "grid":
        kwargs.update(rows=args.rows, cols=args.cols)
    else:
        kwargs.update(n=args.n)
        if args.family == "random" and args.m:
            kwargs.update(m=args.m)
    return GenSpec(**kwargs)


def cmd_gen(args: argparse.Namespace) -> int:
    spec = spec_from_args(args)
    g = generate(spec)
    with open(args.output, "w", encoding="utf-8") as fh:
        save_dimacs(g, fh)
    print(f"{spec.family}: n={g.n} E={g.arc_count} seed={spec.seed} -> {args.output}")
    return 0


# -- bench ------------------------------------------------------------

SUITES = {
    "paper_full": [
        ("complete-2000", dict(family="complete", n=2000)),
        ("random-222000", dict(family="random", n=222000, m=18)),
        ("grid-1000x1000", dict(family="grid", rows=1000, cols=1000)),
    ],
    "desk": [
        ("complete-500", dict(family="complete", n=500)),
        ("random-50000", dict(family="random", n=50000, m=16)),
        ("grid-300x300", dict(family="grid", rows=300, cols=300)),
    ],
}


def improvement_pct(repeat: float, cut: float) -> float:
    """Percentage gain of cut_agency over repeat_delete."""
    return 100.0 * (repeat - cut) / repeat if repeat else 0.0


def bench_row(name: str, spec_kwargs: dict, seed: int) -> dict:
    """One suite row: generate once, solve in both reap modes, tabulate."""
    spec = GenSpec(seed=seed, **spec_kwargs)
    g = generate(spec)
    t0 = time.perf_counter()
    first = hdm_run(g, 0)
    origins = collect_origins(g, first.labels)
    t_hdm_ms = (time.perf_counter() - t0) * 1000.0

    runs = []
    results: dict[str, RunMetrics] = {}
    checksums = []
    for reap in ("repeat_delete", "cut_agency"):
        labels = first.labels.copy()
        t0 = time.perf_counter()
        labels, metrics = contest_run(g, labels, origins, SolveOptions(reap_mode=reap))
        metrics.t_ca_ms = (time.perf_counter() - t0) * 1000.0
        metrics.t_hdm_ms = t_hdm_ms
        metrics.hdm_arc_scans = first.arc_scans
        results[reap] = metrics
        checksums.append(checksum_dist(labels.dist))
        runs.append(metrics_record(name, spec.family, g, seed, "ca", metrics, labels.dist))

    rep, cut = results["repeat_delete"], results["cut_agency"]
    table = {
        "D": rep.deletions,
        "Q_A": rep.arc_scans,
        "Q_S": rep.relabels,
        "QS_over_QA_pct": 100.0 * rep.relabels / rep.arc_scans if rep.arc_scans else 0.0,
        "C_total": rep.le_cost,
        "lambda": rep.harmonic,
        "t_hdm_ms": t_hdm_ms,
        "t_ca_ms": rep.t_ca_ms,
        "D_prime_pct": improvement_pct(rep.deletions, cut.deletions),
        "C_prime_pct": improvement_pct(rep.le_cost, cut.le_cost),
        "T_prime_pct": improvement_pct(rep.t_ca_ms, cut.t_ca_ms),
        "w_checksum_equal": checksums[0] == checksums[1],
    }
    return {
        "instance": name,
        "family": spec.family,
        "n": g.n,
        "E": g.arc_count,
        "seed": seed,
        "gen": asdict(spec),
        "runs": runs,
        "table": table,
        "error": None,
    }


def _bench_row_safe(task: tuple[str, dict, int]) -> dict:
    name, spec_kwargs, seed = task
    try:
        return bench_row(name, spec_kwargs, seed)
    except Exception as exc:  # row failures must not sink the suite
        return {"instance": name, "seed": seed, "error": f"{type(exc).__name__}: {exc}"}


def run_suite(suite: str, seed: int, jobs: int = 1) -> dict:
    tasks = [(name, kwargs, seed) for name, kwargs in SUITES[suite]]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            rows = list(pool.map(_bench_row_safe, tasks))
    else:
        rows = [_bench_row_safe(t) for t in tasks]
    return {"suite": suite, "seed": seed, "jobs": jobs, "rows": rows}


_CSV_COLUMNS = [
    "instance", "n", "E", "D", "Q_A", "Q_S", "QS_over_QA_pct", "C_total",
    "lambda", "t_hdm_ms", "t_ca_ms", "D_prime_pct", "C_prime_pct",
    "T_prime_pct", "w_checksum_equal",
]


def report_csv(report: dict) -> str:
    out = io.StringIO()
    writer = csv.writer(out)
    writer.writerow(_CSV_COLUMNS)
    for row in report["rows"]:
        if row.get("error"):
            writer.writerow([row["instance"], "ERROR", row["error"]])
            continue
        table = row["table"]
        writer.writerow(
            [row["instance"], row["n"], row["E"]]
            + [table[c] for c in _CSV_COLUMNS[3:]]
        )
    return out.getvalue()


def cmd_bench(args: argparse.Namespace) -> int:
    report = run_suite(args.suite, args.seed, args.jobs)
    if args.format == "csv":
        text = report_csv(report)
    else:
        text = json.dumps(report, indent=2) + "\n"
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    for row in report["rows"]:
        if row.get("error"):
            print(f"{row['instance']}: ERROR {row['error']}", file=sys.stderr)
        else:
            t = row["table"]
            print(
                f"{row['instance']}: Q_A={t['Q_A']} Q_S={t['Q_S']} "
                f"lambda={t['lambda']:.2f} D'={t['D_prime_pct']:.1f}%",
                file=sys.stderr,
            )
    return 1 if any(row.get("error") for row in report["rows"]) else 0


# -- parser -----------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lizardpath",
        description="Two-phase SSSP solver and operation-count benchmark.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="generate a benchmark instance as a DIMACS .gr file")
    p.add_argument("--family", choices=("complete", "random", "grid"), required=True)
    p.add_argument("--n", type=int, default=0, help="node count (complete/random)")
    p.add_argument("--rows", type=int, default=0)
    p.add_argument("--cols", type=int, default=0)
    p.add_argument("--m", type=int, default=0, help="out-degree (random); default ceil(log2 n)")
    p.add_argument("--wmin", type=int, default=1)
    p.add_argument("--wmax", type=int, default=1000)
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("solve", help="solve one instance and emit metrics")
    p.add_argument("input", help="DIMACS .gr file")
    p.add_argument("--algo", choices=("ca", "hdm", "dijkstra", "bf"), default="ca")
    p.add_argument("--source", type=int, default=1, help="source node (1-based file id)")
    p.add_argument("--reap", choices=("repeat", "cut"), default="repeat")
    p.add_argument("--origins", choices=("scan", "seek"), default="scan")
    p.add_argument("--metrics", help="write the metrics record to this JSON file")
    p.add_argument("--dump-dist", help="write distances, one '<id> <dist>' line per node")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("verify", help="cross-check the solver against the oracles")
    p.add_argument("input")
    p.add_argument("--source", type=int, default=1)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bench", help="run a benchmark suite and emit the report")
    p.add_argument("--suite", choices=tuple(SUITES), default="desk")
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_bench)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (GraphError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
