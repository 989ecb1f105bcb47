"""Command line front end: ``qgr <subcommand> ...``.

Exit codes: 0 success, 1 verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import inspect
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Sequence

from .boxes import Box, format_partition, parse_partition

SCHEMA = "qgr/1"
METHODS = ("giambelli", "walker", "demazure", "tableau")
FORMATS = ("pretty", "tsv", "json")


@dataclass
class CliConfig:
    command: str
    box: Box
    fmt: str = "pretty"
    method: str = "giambelli"
    tol: float = 1e-9
    seed: int = 0
    threads: int = 1
    options: dict = field(default_factory=dict)


def default_threads() -> int:
    env = os.environ.get("QGR_THREADS")
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            pass
    return os.cpu_count() or 1


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--n", type=int, default=2, help="rows of the box")
    common.add_argument("--k", type=int, default=2, help="columns of the box")
    common.add_argument("--format", dest="fmt", choices=FORMATS, default="pretty")
    common.add_argument("--threads", type=int, default=None,
                        help="worker threads (default: $QGR_THREADS or CPU count)")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--tol", type=float, default=None,
                        help="numerical tolerance (default 1e-9; suites use their own)")

    parser = argparse.ArgumentParser(prog="qgr", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("table", parents=[common], help="grid of sum_d q^d s_{lam/d/mu}")
    p.add_argument("--method", choices=METHODS, default="giambelli")
    sub.add_parser("demazure-table", parents=[common], help="table computed by divided differences")

    p = sub.add_parser("product", parents=[common], help="quantum product of two Schubert classes")
    p.add_argument("--lhs", required=True)
    p.add_argument("--rhs", required=True)

    p = sub.add_parser("toric-schur", parents=[common], help="toric Schur polynomial nu/d/mu")
    p.add_argument("--nu", required=True)
    p.add_argument("--mu", default="")
    p.add_argument("--d", type=int, default=0)
    p.add_argument("--vars", type=int, default=None, help="number of variables (default n)")

    p = sub.add_parser("kostka", parents=[common], help="quantum Kostka number")
    p.add_argument("--nu", required=True)
    p.add_argument("--mu", default="")
    p.add_argument("--d", type=int, default=0)
    p.add_argument("--weight", required=True, help="composition, e.g. 2,2")

    p = sub.add_parser("count", parents=[common], help="walker path count with certificate")
    p.add_argument("--from", dest="source", required=True, help="bottom partition mu")
    p.add_argument("--to", dest="target", required=True, help="top partition nu")

    p = sub.add_parser("bethe", parents=[common], help="Bethe roots, residuals and norms")
    p.add_argument("--q", type=complex, default=1.0)

    from .verify import SUITES
    p = sub.add_parser("verify", parents=[common], help="run a verification suite")
    p.add_argument("--suite", choices=sorted(SUITES) + ["all"], default="all")
    return parser


def parse_args(argv: Sequence[str] | None = None) -> CliConfig:
    parser = build_parser()
    ns = parser.parse_args(argv)
    try:
        box = Box(ns.n, ns.k)
    except ValueError as exc:
        parser.error(str(exc))
    if ns.tol is not None and ns.tol <= 0:
        parser.error("tolerance must be positive")
    threads = ns.threads if ns.threads is not None else default_threads()
    if threads < 1:
        parser.error("thread count must be positive")
    method = getattr(ns, "method", "giambelli")
    if ns.command == "demazure-table":
        method = "demazure"
    opts = {"tol": ns.tol}
    try:
        if ns.command == "product":
            opts["lhs"] = parse_partition(ns.lhs, box)
            opts["rhs"] = parse_partition(ns.rhs, box)
        elif ns.command in ("toric-schur", "kostka"):
            opts["nu"] = parse_partition(ns.nu, box)
            opts["mu"] = parse_partition(ns.mu, box)
            if ns.d < 0:
                raise ValueError("degree d must be non-negative")
            opts["d"] = ns.d
            if ns.command == "toric-schur":
                opts["vars"] = ns.vars if ns.vars is not None else box.n
                if opts["vars"] < 1:
                    raise ValueError("need at least one variable")
            else:
                opts["weight"] = tuple(int(t) for t in ns.weight.split(",") if t.strip())
                if any(a < 0 for a in opts["weight"]):
                    raise ValueError("weights must be non-negative")
        elif ns.command == "count":
            opts["mu"] = parse_partition(ns.source, box)
            opts["nu"] = parse_partition(ns.target, box)
        elif ns.command == "bethe":
            opts["q"] = ns.q
        elif ns.command == "verify":
            opts["suite"] = ns.suite
    except ValueError as exc:
        parser.error(str(exc))
    tol = ns.tol if ns.tol is not None else 1e-9
    return CliConfig(ns.command, box, ns.fmt, method, tol, ns.seed, threads, opts)


# ---------------------------------------------------------------------------
# formatting

def schur_label(lam) -> str:
    return "s[" + ",".join(str(p) for p in lam if p) + "]"


def format_cell(entry: dict) -> str:
    """``{lam: QPoly}`` as ``1 + q * s[2,2]``."""
    terms = []
    by_degree = []
    for lam, c in entry.items():
        for d, v in c.items():
            by_degree.append((d, lam, v))
    for d, lam, v in sorted(by_degree):
        qpart = "" if d == 0 else ("q" if d == 1 else f"q^{d}")
        coeff = "" if abs(v) == 1 else str(abs(v))
        body = "" if not any(lam) else schur_label(lam)
        pieces = [p for p in (coeff, qpart, body) if p]
        text = " * ".join(pieces) if pieces else "1"
        terms.append(("- " if v < 0 else "+ ") + text)
    if not terms:
        return "0"
    out = " ".join(terms)
    return out[2:] if out.startswith("+ ") else "-" + out[2:]


def table_entries(table: dict) -> list[dict]:
    entries = []
    for (nu, mu), entry in sorted(table.items()):
        degrees = sorted({d for c in entry.values() for d, _ in c.items()})
        for d in degrees:
            coeffs = {format_partition(lam): c.coeff(d) for lam, c in sorted(entry.items())
                      if c.coeff(d)}
            entries.append({"nu": list(nu), "mu": list(mu), "d": d, "coeffs": coeffs})
    return entries


def compute_table(box: Box, method: str, threads: int = 1) -> dict:
    from .cohomology import coproduct
    from .demazure import demazure_toric
    from .symfunc import expand_in_schur

    def row(lam):
        if method == "demazure":
            out = {}
            for mu, poly in demazure_toric(lam, box).items():
                entry = {nu: c for nu, c in expand_in_schur(poly, box.n).items() if c}
                if entry:
                    out[mu] = entry
            return out
        return coproduct(lam, box, method)

    parts = box.partitions()
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            rows = list(pool.map(row, parts))
    else:
        rows = [row(lam) for lam in parts]
    table = {}
    for lam, r in zip(parts, rows):
        for mu, entry in r.items():
            table[(tuple(lam), tuple(mu))] = dict(sorted(entry.items()))
    return dict(sorted(table.items()))


def render_table(table: dict, box: Box, method: str, fmt: str) -> str:
    if fmt == "json":
        doc = {"schema": SCHEMA, "box": {"n": box.n, "k": box.k}, "method": method,
               "entries": table_entries(table)}
        return json.dumps(doc, sort_keys=True)
    if fmt == "tsv":
        lines = ["nu\tmu\td\tlambda\tcoeff"]
        for e in table_entries(table):
            for lam, c in e["coeffs"].items():
                lines.append(f"{format_partition(e['nu'])}\t{format_partition(e['mu'])}\t{e['d']}\t{lam}\t{c}")
        return "\n".join(lines)
    parts = box.partitions()
    cols = [mu for mu in parts if any(mu)] or list(parts)
    header = ["outer \\ inner"] + [format_partition(mu) for mu in cols]
    grid = [header]
    for lam in parts:
        grid.append([format_partition(lam) or "()"] +
                    [format_cell(table.get((lam, mu), {})) for mu in cols])
    widths = [max(len(r[i]) for r in grid) for i in range(len(header))]
    return "\n".join("  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() for r in grid)


# ---------------------------------------------------------------------------
# commands

def _cmd_table(cfg: CliConfig) -> tuple[int, str]:
    table = compute_table(cfg.box, cfg.method, cfg.threads)
    return 0, render_table(table, cfg.box, cfg.method, cfg.fmt)


def _cmd_product(cfg: CliConfig) -> tuple[int, str]:
    from .cohomology import format_product, quantum_product

    lhs, rhs = cfg.options["lhs"], cfg.options["rhs"]
    prod = quantum_product(lhs, rhs, cfg.box)
    if cfg.fmt == "json":
        doc = {"schema": SCHEMA, "box": {"n": cfg.box.n, "k": cfg.box.k}, "lhs": list(lhs),
               "rhs": list(rhs),
               "terms": [{"nu": list(nu), "d": d, "coeff": c} for (nu, d), c in prod.items()]}
        return 0, json.dumps(doc, sort_keys=True)
    if cfg.fmt == "tsv":
        lines = ["nu\td\tcoeff"] + [f"{format_partition(nu)}\t{d}\t{c}" for (nu, d), c in prod.items()]
        return 0, "\n".join(lines)
    return 0, format_product(prod)


def _cmd_toric_schur(cfg: CliConfig) -> tuple[int, str]:
    from .cohomology import toric_schur
    from .symfunc import expand_in_schur

    o = cfg.options
    poly = toric_schur(o["nu"], o["d"], o["mu"], cfg.box, o["vars"])
    expansion = {lam: c for lam, c in expand_in_schur(poly, o["vars"]).items() if c}
    if cfg.fmt == "json":
        doc = {"schema": SCHEMA, "box": {"n": cfg.box.n, "k": cfg.box.k}, "nu": list(o["nu"]),
               "mu": list(o["mu"]), "d": o["d"], "vars": o["vars"],
               "monomials": {",".join(map(str, key[:-1])): c for key, c in poly.sorted_items()},
               "coeffs": {format_partition(lam): c.constant() for lam, c in expansion.items()}}
        return 0, json.dumps(doc, sort_keys=True)
    if cfg.fmt == "tsv":
        lines = ["lambda\tcoeff"] + [f"{format_partition(l)}\t{c.constant()}" for l, c in expansion.items()]
        return 0, "\n".join(lines)
    schur = " + ".join(f"{'' if c == 1 else str(c) + ' * '}{schur_label(l)}"
                       for l, c in expansion.items()) or "0"
    return 0, f"{poly}\n= {schur}"


def _cmd_kostka(cfg: CliConfig) -> tuple[int, str]:
    from .boxes import quantum_kostka

    o = cfg.options
    value = quantum_kostka(o["nu"], o["d"], o["mu"], o["weight"], cfg.box)
    if cfg.fmt == "json":
        doc = {"schema": SCHEMA, "box": {"n": cfg.box.n, "k": cfg.box.k}, "nu": list(o["nu"]),
               "mu": list(o["mu"]), "d": o["d"], "weight": list(o["weight"]), "value": value}
        return 0, json.dumps(doc, sort_keys=True)
    return 0, str(value)


def _cmd_count(cfg: CliConfig) -> tuple[int, str]:
    from .cohomology import path_count

    cert = path_count(cfg.options["nu"], cfg.options["mu"], cfg.box)
    status = 0 if cert.consistent else 1
    if cfg.fmt == "json":
        doc = {"schema": SCHEMA, **cert.as_dict()}
        return status, json.dumps(doc, sort_keys=True)
    if cfg.fmt == "tsv":
        d = cert.as_dict()
        keys = ["enumeration", "transfer_matrix", "kostka_sum", "hook_content_sum", "osculating"]
        return status, "\n".join(f"{k}\t{d[k]}" for k in keys)
    lines = [str(cert.value),
             f"  enumeration       {cert.enumeration}",
             f"  transfer matrix   {cert.transfer_matrix}",
             f"  kostka sum        {cert.kostka_sum}",
             f"  hook-content sum  {cert.hook_content_sum}",
             f"  osculating        {cert.osculating}",
             f"  consistent        {cert.consistent}"]
    return status, "\n".join(lines)


def _cmd_bethe(cfg: CliConfig) -> tuple[int, str]:
    from .bethe import (bethe_roots, eigen_residual, norm_closed_form, norm_printed_form,
                        norm_sq)

    q = cfg.options["q"]
    box = cfg.box
    rows = []
    worst = 0.0
    for lam in box.partitions():
        roots = bethe_roots(lam, box, q)
        res = max(eigen_residual(lam, f, x, box, q) for f in ("H", "E") for x in (0.3, 0.7, -0.2 + 0.4j))
        worst = max(worst, res)
        nrm = norm_sq(lam, box, q)
        rows.append({"lam": list(lam),
                     "roots": [[round(y.real, 12), round(y.imag, 12)] for y in roots.roots],
                     "residual": res, "norm_sq": nrm.real,
                     "closed_form": norm_closed_form(lam, box, q),
                     "printed_form": norm_printed_form(lam, box)})
    status = 0 if worst < cfg.tol else 1
    if cfg.fmt == "json":
        return status, json.dumps({"schema": SCHEMA, "box": {"n": box.n, "k": box.k},
                                   "q": [q.real, q.imag], "rows": rows}, sort_keys=True)
    lines = ["lambda\troots\tresidual\tnorm_sq\tclosed_form\tprinted_form"]
    for r in rows:
        roots = " ".join(f"{a:+.6f}{b:+.6f}i" for a, b in r["roots"])
        lines.append(f"{format_partition(r['lam'])}\t{roots}\t{r['residual']:.2e}\t"
                     f"{r['norm_sq']:.9f}\t{r['closed_form']:.9f}\t{r['printed_form']:.6g}")
    return status, "\n".join(lines)


def _run_suite(fn, cfg: CliConfig):
    params = inspect.signature(fn).parameters
    kwargs = {}
    if "seed" in params:
        kwargs["seed"] = cfg.seed
    if "tol" in params and cfg.options.get("tol") is not None:
        kwargs["tol"] = cfg.options["tol"]
    return fn(**kwargs)


def _cmd_verify(cfg: CliConfig) -> tuple[int, str]:
    from .verify import SUITES

    names = sorted(SUITES) if cfg.options["suite"] == "all" else [cfg.options["suite"]]
    results = [_run_suite(SUITES[name], cfg) for name in names]
    status = 0 if all(r.passed for r in results) else 1
    if cfg.fmt == "json" or status:
        doc = {"schema": SCHEMA, "passed": status == 0, "suites": [r.to_json() for r in results]}
        text = json.dumps(doc, sort_keys=True)
        if cfg.fmt != "json":
            text = "\n".join(f"{'PASS' if r.passed else 'FAIL'} {r.name} ({r.checks} checks)"
                             for r in results) + "\n" + text
        return status, text
    return 0, "\n".join(f"PASS {r.name} ({r.checks} checks)" for r in results)


COMMANDS = {
    "table": _cmd_table,
    "demazure-table": _cmd_table,
    "product": _cmd_product,
    "toric-schur": _cmd_toric_schur,
    "kostka": _cmd_kostka,
    "count": _cmd_count,
    "bethe": _cmd_bethe,
    "verify": _cmd_verify,
}


def run(cfg: CliConfig, out=None) -> int:
    out = sys.stdout if out is None else out
    status, text = COMMANDS[cfg.command](cfg)
    out.write(text + "\n")
    return status


def main(argv: Sequence[str] | None = None) -> int:
    cfg = parse_args(argv)
    return run(cfg)


if __name__ == "__main__":
    sys.exit(main())
