"""Command line entry point: ``python3 -m olaplus --mode decide --k 2 --input g.txt``.

Exit status is 0 for yes/success, 1 for no (or a failed bound in count
mode) and 2 for any input or configuration error.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from .bounds import reports_to_csv, verify_bounds
from .exceptions import BadParameters, OlaError
from .generators import FAMILIES, generate_instance
from .graph import connected_components
from .graphio import format_graph, parse_graph
from .kernel import kernel_gate, suppress_all, suppressible_sequence
from .oracle import exact_ola_dp, exact_ola_enum
from .search import solve

__all__ = ["main", "build_parser", "parse_params"]

MODES = ("decide", "kernel", "oracle", "count", "bench", "generate")
EXIT_YES, EXIT_NO, EXIT_ERROR = 0, 1, 2


class ConfigError(OlaError, ValueError):
    pass


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="olaplus", description=__doc__.splitlines()[0])
    p.add_argument("--mode", choices=MODES, required=True)
    p.add_argument("--k", help="net-cost budget; bench accepts a ':'-separated list")
    src = p.add_argument_group("input (exactly one)")
    src.add_argument("--input", help="graph file (edge list or DIMACS)")
    src.add_argument("--family", choices=sorted(FAMILIES), help="generate the input instead")
    p.add_argument("--params", default="", help="family parameters, e.g. n=10,c=2; lists as 1000:10000")
    p.add_argument("--seed", type=int, default=0, help="seed for random families (64-bit integer)")
    p.add_argument("--format", choices=("json", "text", "csv"), default=None,
                   help="report format (default: csv for count, text for bench, json otherwise)")
    p.add_argument("--threads", type=int, default=1, help="worker processes across components")
    p.add_argument("--symmetry-prune", action="store_true", help="skip mirror-image arrangements")
    p.add_argument("--labels", choices=("strict", "map"), default="strict",
                   help="'map' accepts arbitrary vertex labels in --input")
    p.add_argument("--graph-format", choices=("edgelist", "dimacs"), default="edgelist",
                   help="output format of generate mode")
    p.add_argument("--oracle-method", choices=("dp", "enum"), default="dp")
    p.add_argument("--repeat", type=int, default=1, help="bench: best of this many runs")
    return p


def _int_value(key, text):
    try:
        return int(text)
    except ValueError:
        raise ConfigError(f"parameter {key} must be an integer, got {text!r}") from None


def parse_params(text: str) -> dict:
    """``"n=10,c=2"`` -> ``{"n": 10, "c": 2}``; ``"n=10:20"`` gives a list."""
    out = {}
    for item in filter(None, (s.strip() for s in text.split(","))):
        key, sep, value = item.partition("=")
        if not sep or not key:
            raise ConfigError(f"bad parameter {item!r}; expected key=value")
        if ":" in value:
            out[key] = [_int_value(key, v) for v in value.split(":")]
        else:
            out[key] = _int_value(key, value)
    return out


def _budgets(args, required=True) -> list[int]:
    if args.k is None:
        if required:
            raise ConfigError(f"--k is required in {args.mode} mode")
        return []
    ks = [_int_value("k", v) for v in str(args.k).split(":")]
    if any(k < 0 for k in ks):
        raise ConfigError("--k must be nonnegative")
    if len(ks) > 1 and args.mode != "bench":
        raise ConfigError("a list of budgets is only accepted in bench mode")
    return ks


def _load(args, params=None):
    """Read or generate the input graph; returns ``(graph, labels, seconds)``."""
    if (args.input is None) == (args.family is None):
        raise ConfigError("give exactly one of --input and --family")
    t0 = time.perf_counter()
    labels = None
    if args.input is not None:
        if args.params:
            raise ConfigError("--params only applies to --family")
        loaded = parse_graph(args.input, labels=args.labels)
        g, labels = loaded if args.labels == "map" else (loaded, None)
    else:
        params = parse_params(args.params) if params is None else params
        if any(isinstance(v, list) for v in params.values()):
            raise ConfigError("parameter lists are only accepted in bench mode")
        g = generate_instance(args.family, params, args.seed)
    return g, labels, time.perf_counter() - t0


def _emit_json(obj, out):
    out.write(json.dumps(obj) + "\n")


def _decide(args, out) -> int:
    (k,) = _budgets(args)
    g, labels, parse_s = _load(args)
    report = solve(g, k, mirror_free=args.symmetry_prune, n_jobs=args.threads)
    payload = report.to_json()
    payload["timings_ms"] = {"parse": round(1000 * parse_s, 3), **payload["timings_ms"]}
    if args.format == "text":
        out.write(f"decision: {payload['decision']}\nk: {k}\nola_plus: {payload['ola_plus']}\n")
        if report.arrangement is not None:
            order = report.arrangement.order()
            names = [labels[v - 1] for v in order] if labels else [str(v) for v in order]
            out.write("order: " + " ".join(names) + "\n")
        for key, ms in payload["timings_ms"].items():
            out.write(f"{key}_ms: {ms}\n")
    else:
        if labels:
            payload["labels"] = list(labels)
        _emit_json(payload, out)
    return EXIT_YES if report.decision else EXIT_NO


def _kernel(args, out) -> int:
    (k,) = _budgets(args)
    g, labels, _ = _load(args)
    if len(connected_components(g)) > 1:
        raise ConfigError("kernel mode needs a connected graph")
    plan = suppressible_sequence(g, k)
    kernel, record = suppress_all(g, plan)
    gate = kernel_gate(kernel, k)
    payload = {
        "k": k,
        "gate": gate.value,
        "kernel": {"n": kernel.n, "m": kernel.m, "edges": [list(e) for e in kernel.iter_edges()]},
        "record": {
            "original_n": record.original_n,
            "kept": list(record.kept),
            "steps": [list(s) for s in record.steps],
        },
    }
    if args.format == "text":
        out.write(f"gate: {gate.value}\nsuppressed: {len(record.steps)}\n")
        out.write(format_graph(kernel, args.graph_format))
    else:
        _emit_json(payload, out)
    return EXIT_YES if gate.value == "accept" else EXIT_NO


def _oracle(args, out) -> int:
    g, _, _ = _load(args)
    result = exact_ola_dp(g) if args.oracle_method == "dp" else exact_ola_enum(g)
    if args.format == "text":
        out.write(f"ola: {result.ola}\nola_plus: {result.ola_plus}\n"
                  f"order: {' '.join(map(str, result.witness.order()))}\n")
    else:
        _emit_json(result.to_json(), out)
    return EXIT_YES


_COUNT_KEYS = {"path_n_max": 12, "path_k_max": 4, "tree_n_max": 8, "tree_k_max": 3}


def _count(args, out) -> int:
    if args.input or args.family:
        raise ConfigError("count mode takes no input graph")
    params = parse_params(args.params)
    unknown = set(params) - set(_COUNT_KEYS)
    if unknown:
        raise ConfigError(f"count mode accepts {sorted(_COUNT_KEYS)}, got {sorted(unknown)}")
    cfg = {**_COUNT_KEYS, **params}
    reports = verify_bounds(path_n=(2, cfg["path_n_max"]), path_k=(0, cfg["path_k_max"]),
                            tree_n=(2, cfg["tree_n_max"]), tree_k=(0, cfg["tree_k_max"]))
    if args.format == "json":
        _emit_json([{**r.as_row(), "holds": r.holds, "bound": r.bound} for r in reports], out)
    elif args.format == "text":
        bad = [r for r in reports if not r.holds]
        out.write(f"cells: {len(reports)}\nviolations: {len(bad)}\n")
    else:
        out.write(reports_to_csv(reports))
    return EXIT_YES if all(r.holds for r in reports) else EXIT_NO


_BENCH_COLUMNS = ("n", "m", "k", "decision", "parse", "components", "kernelize", "search", "lift", "total")


def _bench(args, out) -> int:
    ks = _budgets(args)
    rows = []
    if args.input is not None:
        instances = [_load(args)[::2]]
    else:
        if args.family is None:
            raise ConfigError("give exactly one of --input and --family")
        params = parse_params(args.params)
        swept = [key for key, v in params.items() if isinstance(v, list)]
        if len(swept) > 1:
            raise ConfigError("bench sweeps at most one parameter")
        values = params[swept[0]] if swept else [None]
        instances = []
        for value in values:
            p = dict(params)
            if swept:
                p[swept[0]] = value
            g, _, seconds = _load(args, p)
            instances.append((g, seconds))
    for g, parse_s in instances:
        for k in ks:
            best = None
            for _ in range(max(1, args.repeat)):
                t0 = time.perf_counter()
                report = solve(g, k, mirror_free=args.symmetry_prune, n_jobs=args.threads, verify=False)
                total = 1000 * (time.perf_counter() - t0)
                if best is None or total < best[1]:
                    best = (report, total)
            report, total = best
            row = {"n": g.n, "m": g.m, "k": k, "decision": "yes" if report.decision else "no",
                   "parse": round(1000 * parse_s, 3)}
            row.update({key: round(report.timings.get(key, 0.0), 3)
                        for key in ("components", "kernelize", "search", "lift")})
            row["total"] = round(total, 3)
            rows.append(row)
    fmt = args.format or "text"
    if fmt == "json":
        _emit_json(rows, out)
    elif fmt == "csv":
        out.write(",".join(_BENCH_COLUMNS) + "\n")
        for row in rows:
            out.write(",".join(str(row[c]) for c in _BENCH_COLUMNS) + "\n")
    else:
        widths = [max(len(c), *(len(str(r[c])) for r in rows)) for c in _BENCH_COLUMNS]
        out.write("  ".join(c.rjust(w) for c, w in zip(_BENCH_COLUMNS, widths)) + "\n")
        for row in rows:
            out.write("  ".join(str(row[c]).rjust(w) for c, w in zip(_BENCH_COLUMNS, widths)) + "\n")
    return EXIT_YES


def _generate(args, out) -> int:
    if args.input is not None:
        raise ConfigError("generate mode needs --family, not --input")
    g, _, _ = _load(args)
    if args.format == "json":
        _emit_json({"n": g.n, "m": g.m, "edges": [list(e) for e in g.iter_edges()]}, out)
    else:
        out.write(format_graph(g, args.graph_format))
    return EXIT_YES


_DISPATCH = {
    "decide": _decide,
    "kernel": _kernel,
    "oracle": _oracle,
    "count": _count,
    "bench": _bench,
    "generate": _generate,
}


def main(argv=None, out=None, err=None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_ERROR if exc.code else EXIT_YES
    if args.threads < 1 and args.threads != -1:
        err.write("error: --threads must be positive (or -1 for all cores)\n")
        return EXIT_ERROR
    try:
        return _DISPATCH[args.mode](args, out)
    except (OlaError, OSError, BadParameters) as exc:
        err.write(f"error: {exc}\n")
        return EXIT_ERROR
