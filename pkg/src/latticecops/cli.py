"""Command-line interface: simulate, classify, density, demo-counterexample, serve."""

from __future__ import annotations

import argparse
import json
import sys

from .copsets import (
    BadSpec,
    CopSetSpec,
    analytic_density,
    classify,
    estimate_density,
    maxform_counterexample,
    parse_spec,
    spec_to_json,
)
from .engine import GameConfig, Status, run_game, trace_to_ndjson
from .geometry import Direction
from .strategy import AxisRunner, GreedyEvader, RandomWalk

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_HORIZON = 2


def _load_spec(path: str) -> CopSetSpec:
    try:
        with open(path) as fh:
            doc = json.load(fh)
    except OSError as exc:
        raise BadSpec(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise BadSpec(f"{path}: invalid JSON at line {exc.lineno}, column {exc.colno}") from exc
    return parse_spec(doc)


def _parse_point(text: str, n: int) -> tuple[int, ...]:
    try:
        coords = tuple(int(x) for x in text.split(","))
    except ValueError:
        raise BadSpec(f"bad point {text!r}: want comma-separated integers")
    if len(coords) != n:
        raise BadSpec(f"point {text!r} has {len(coords)} coordinates, copset dimension is {n}")
    return coords


def _make_policy(name: str, seed: int):
    if name == "greedy":
        return GreedyEvader()
    if name == "random":
        return RandomWalk(seed)
    if name.startswith("runner:"):
        return AxisRunner(Direction.parse(name.split(":", 1)[1]))
    raise BadSpec(f"unknown policy {name!r}: want greedy, random, or runner:X<i>+/-")


def cmd_simulate(args) -> int:
    spec = _load_spec(args.copset)
    start = _parse_point(args.start, spec.dimension)
    policy = _make_policy(args.policy, args.seed)
    result = run_game(
        GameConfig(
            copset=spec,
            robber_start=start,
            policy=policy,
            max_turns=args.max_turns,
            record_trace=args.trace is not None,
        )
    )
    if args.trace is not None:
        with open(args.trace, "w") as fh:
            fh.write(trace_to_ndjson(result.trace))
    if result.state.status is Status.CAPTURED:
        by = result.state.captured_by.label if result.state.captured_by else "static"
        print(f"CAPTURED turn={result.state.turn} by={by}")
        return EXIT_OK
    print(f"ESCAPED horizon={args.max_turns}")
    return EXIT_HORIZON


def cmd_classify(args) -> int:
    spec = _load_spec(args.copset)
    verdict = classify(spec)
    if args.format == "json":
        print(json.dumps(verdict.to_json(), sort_keys=True))
        return EXIT_OK
    print("WINNING" if verdict.winning else "LOSING")
    for d, entry in verdict.census.items():
        desc = "unbounded" if entry.unbounded else (
            "empty" if entry.max_shell is None else f"bounded maxShell={entry.max_shell}"
        )
        print(f"  {d.label}: {desc}")
    if verdict.witness is not None:
        w = verdict.witness
        start = ",".join(str(x) for x in w.start)
        print(f"  escape: direction={w.direction.label} start=({start})")
    return EXIT_OK


def cmd_density(args) -> int:
    spec = _load_spec(args.copset)
    est = estimate_density(spec, args.m_max, budget=args.budget)
    exact = analytic_density(spec)
    print(f"analytic density: {exact}")
    rows = est.samples if args.all_rows else est.samples[-10:]
    for m, cnt, total, ratio in rows:
        print(f"  m={m} count={cnt} total={total} ratio={float(ratio):.6f}")
    if est.truncated_at is not None:
        print(f"  WARNING: truncated at m={est.truncated_at} (budget exceeded)")
    if args.emit:
        with open(args.emit, "w") as fh:
            fh.write("m,count,total,ratio\n")
            for m, cnt, total, ratio in est.samples:
                fh.write(f"{m},{cnt},{total},{float(ratio):.9f}\n")
    return EXIT_OK


def cmd_demo_counterexample(args) -> int:
    if args.dim < 3:
        print("error: the max-form gap needs dimension >= 3 (max = sum below that)", file=sys.stderr)
        return EXIT_USAGE
    spec, cert = maxform_counterexample(args.dim, args.depth)
    print(f"max-form gap demonstration in Z^{args.dim}, depth {args.depth}")
    print(json.dumps(spec_to_json(spec), sort_keys=True))
    intercepts = 0
    for row in cert.rows:
        p = ",".join(str(x) for x in row["point"])
        hit = any(row["interceptsRunner"].values())
        intercepts += hit
        print(
            f"  ({p}) dir={row['direction']} maxformLevel={row['maxformLevel']} "
            f"sumformShell={row['sumformShell']} interceptsRunner={hit}"
        )
    print(f"max-form members: {len(cert.rows)}/{len(cert.rows)}; interceptable cops: {intercepts}")
    return EXIT_OK


def cmd_serve(args) -> int:
    from .session import serve  # deferred: pulls in fastapi/uvicorn

    serve(bind=args.bind, port=args.port, idle_timeout_secs=args.idle_timeout_secs)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="latticecops",
        description="Cops-and-Robbers pursuit on the infinite lattice Z^n",
    )
    sub = p.add_subparsers(dest="command", required=True)

    sim = sub.add_parser("simulate", help="run one game against the cop strategy")
    sim.add_argument("copset", help="copset JSON file")
    sim.add_argument("--start", required=True, help="robber start, e.g. '1,1'")
    sim.add_argument("--policy", default="greedy", help="greedy | random | runner:X<i>+/-")
    sim.add_argument("--max-turns", type=int, default=10_000)
    sim.add_argument("--seed", type=int, default=0)
    sim.add_argument("--trace", help="write NDJSON trace to this file")
    sim.set_defaults(func=cmd_simulate)

    cls = sub.add_parser("classify", help="winning/losing verdict with census")
    cls.add_argument("copset")
    cls.add_argument("--format", choices=["text", "json"], default="text")
    cls.set_defaults(func=cmd_classify)

    den = sub.add_parser("density", help="density estimate table")
    den.add_argument("copset")
    den.add_argument("--m-max", type=int, default=100)
    den.add_argument("--budget", type=int, default=10**6)
    den.add_argument("--emit", help="write CSV to this file")
    den.add_argument("--all-rows", action="store_true")
    den.set_defaults(func=cmd_density)

    demo = sub.add_parser("demo-counterexample", help="max-form gap demonstration (n >= 3)")
    demo.add_argument("--dim", type=int, default=3)
    demo.add_argument("--depth", type=int, default=5)
    demo.set_defaults(func=cmd_demo_counterexample)

    srv = sub.add_parser("serve", help="interactive session server (WebSocket)")
    srv.add_argument("--bind", default="127.0.0.1")
    srv.add_argument("--port", type=int, default=8642)
    srv.add_argument("--idle-timeout-secs", type=int, default=1800)
    srv.set_defaults(func=cmd_serve)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except BadSpec as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
