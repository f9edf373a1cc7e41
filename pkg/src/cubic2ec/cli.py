"""Batch command-line surface.

Subcommands: certify, verify, opt, lp, gap, sweep, lemma3.  Exit codes:
0 ok, 1 verification failure, 2 bad input, 3 internal invariant violation.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import sys
import traceback
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from . import combine, connectivity, oracle
from .combine import (
    Certifier,
    certificate_from_json,
    certificate_to_json,
    min_support_subgraph,
    support_bound,
    verify_certificate,
)
from .errors import GraphFormatError
from .graphs import BUILTIN_NAMES, Graph, builtin, parse_edge_list, parse_graph6

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_BAD_INPUT = 2
EXIT_INTERNAL = 3

log = logging.getLogger("cubic2ec")


@dataclass(frozen=True)
class RunConfig:
    command: str
    builtin: str | None
    g6_path: str | None
    edges_path: str | None
    certificate: str | None
    output: str | None
    max_n: int | None
    jobs: int
    verbosity: int


def _add_source_flags(p: argparse.ArgumentParser, g6_only: bool = False):
    group = p.add_mutually_exclusive_group(required=True)
    if not g6_only:
        group.add_argument(
            "--graph", choices=BUILTIN_NAMES, help="builtin graph name"
        )
        group.add_argument("--edges", help="edge-list file ('n m' header)")
    group.add_argument("--g6", help="graph6 file")


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="cubic2ec",
        description=(
            "Exact uniform-7/9 convex-combination certificates and 2EC "
            "oracles for cubic 3-edge-connected graphs."
        ),
    )
    p.add_argument("-v", "--verbose", action="count", default=0)
    sub = p.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("certify", help="build a certificate")
    _add_source_flags(sp)
    sp.add_argument("-o", "--output", help="write certificate JSON here")
    sp.add_argument("--max-n", type=int, default=combine.DEFAULT_MAX_N)

    sp = sub.add_parser("verify", help="re-check a certificate file")
    _add_source_flags(sp)
    sp.add_argument("--cert", required=True, help="certificate JSON path")

    for name in ("opt", "lp", "gap"):
        sp = sub.add_parser(name, help=f"exact {name} value")
        _add_source_flags(sp)
        sp.add_argument("--max-n", type=int, default=oracle.ORACLE_MAX_N)

    sp = sub.add_parser("sweep", help="run the full pipeline over a corpus")
    _add_source_flags(sp, g6_only=True)
    sp.add_argument("-o", "--output", help="write CSV here (default stdout)")
    sp.add_argument("--max-n", type=int, default=combine.DEFAULT_MAX_N)
    sp.add_argument("--jobs", type=int, default=1)

    sp = sub.add_parser("lemma3", help="exhaustive safe-pair verification")
    _add_source_flags(sp)

    return p


def _config(args: argparse.Namespace) -> RunConfig:
    return RunConfig(
        command=args.command,
        builtin=getattr(args, "graph", None),
        g6_path=getattr(args, "g6", None),
        edges_path=getattr(args, "edges", None),
        certificate=getattr(args, "cert", None),
        output=getattr(args, "output", None),
        max_n=getattr(args, "max_n", None),
        jobs=getattr(args, "jobs", 1),
        verbosity=args.verbose,
    )


def _load_graph(cfg: RunConfig) -> Graph:
    if cfg.builtin:
        return builtin(cfg.builtin)
    if cfg.g6_path:
        text = Path(cfg.g6_path).read_text()
        for line in text.splitlines():
            if line.strip():
                return parse_graph6(line)
        raise GraphFormatError(f"no graph6 line in {cfg.g6_path}")
    assert cfg.edges_path
    return parse_edge_list(Path(cfg.edges_path).read_text())


def _emit(cfg: RunConfig, text: str):
    if cfg.output:
        Path(cfg.output).write_text(text)
    # certificates without -o are not written anywhere; the summary line is
    # the stdout contract


def cmd_certify(cfg: RunConfig) -> int:
    g = _load_graph(cfg)
    certifier = Certifier(max_n=cfg.max_n or combine.DEFAULT_MAX_N)
    cert = certifier.certify(g)
    support = min_support_subgraph(cert)
    if cfg.output:
        Path(cfg.output).write_text(certificate_to_json(cert))
    print(
        f"n={g.n} entries={len(cert.combination.entries)} "
        f"min_support={len(support.edges)} bound={support_bound(g.n)}"
    )
    return EXIT_OK


def cmd_verify(cfg: RunConfig) -> int:
    g = _load_graph(cfg)
    cert = certificate_from_json(Path(cfg.certificate).read_text())
    report = verify_certificate(g, cert)
    doc = {
        "ok": report.ok,
        "checks": [
            {"name": c.name, "passed": c.passed, "detail": c.detail}
            for c in report.checks
        ],
    }
    print(json.dumps(doc, indent=2))
    return EXIT_OK if report.ok else EXIT_VERIFY_FAILED


def cmd_value(cfg: RunConfig) -> int:
    g = _load_graph(cfg)
    if cfg.max_n is not None and g.n > cfg.max_n:
        raise ValueError(f"n={g.n} exceeds --max-n {cfg.max_n}")
    if cfg.command == "opt":
        value, _ = oracle.exact_opt(g)
        print(value)
    elif cfg.command == "lp":
        print(oracle.lp_bound(g).value)
    else:
        print(oracle.integrality_gap(g).gap)
    return EXIT_OK


def cmd_lemma3(cfg: RunConfig) -> int:
    g = _load_graph(cfg)
    report = connectivity.verify_lemma3(g)
    doc = {
        "configurations": report.configurations,
        "pivots": report.pivots,
        "violations": len(report.violations),
        "orientation_flips": report.orientation_flips,
        "divergences": len(report.divergences),
    }
    print(json.dumps(doc, indent=2))
    return EXIT_OK if report.ok else EXIT_VERIFY_FAILED


SWEEP_COLUMNS = (
    "graph6",
    "n",
    "essentially4ec",
    "lemma3_violations",
    "opt",
    "lp",
    "gap",
    "cert_min_support",
    "bound_ok",
    "error",
)


def _sweep_row(certifier: Certifier, line: str) -> dict:
    row = {col: "" for col in SWEEP_COLUMNS}
    row["graph6"] = line
    try:
        g = parse_graph6(line)
        row["n"] = g.n
        if not g.is_cubic:
            raise ValueError("graph is not cubic")
        if connectivity.edge_connectivity(g) < 3:
            raise ValueError("graph is not 3-edge-connected")
        e4 = connectivity.is_essentially_4ec(g)
        row["essentially4ec"] = str(e4).lower()
        if e4 and g.n > 6:
            row["lemma3_violations"] = len(connectivity.verify_lemma3(g).violations)
        opt, _ = oracle.exact_opt(g)
        lp = oracle.lp_bound(g).value
        row["opt"] = opt
        row["lp"] = str(lp)
        row["gap"] = str(Fraction(opt) / lp)
        cert = certifier.certify(g)
        support = len(min_support_subgraph(cert).edges)
        row["cert_min_support"] = support
        ok = (
            lp <= opt <= support <= support_bound(g.n)
            and verify_certificate(g, cert).ok
            and row["lemma3_violations"] in ("", 0)
        )
        row["bound_ok"] = str(ok).lower()
    except (ValueError, GraphFormatError) as exc:
        row["error"] = str(exc)
    return row


def cmd_sweep(cfg: RunConfig) -> int:
    lines = [
        ln.strip()
        for ln in Path(cfg.g6_path).read_text().splitlines()
        if ln.strip()
    ]
    certifier = Certifier(max_n=cfg.max_n or combine.DEFAULT_MAX_N)
    if cfg.jobs > 1:
        with ThreadPoolExecutor(max_workers=cfg.jobs) as pool:
            rows = list(pool.map(lambda ln: _sweep_row(certifier, ln), lines))
    else:
        rows = [_sweep_row(certifier, ln) for ln in lines]
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=SWEEP_COLUMNS, lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow(row)
    text = buf.getvalue()
    if cfg.output:
        Path(cfg.output).write_text(text)
    else:
        sys.stdout.write(text)
    violated = any(r["bound_ok"] == "false" for r in rows) or any(
        r["lemma3_violations"] not in ("", 0) for r in rows
    )
    return EXIT_VERIFY_FAILED if violated else EXIT_OK


_COMMANDS = {
    "certify": cmd_certify,
    "verify": cmd_verify,
    "opt": cmd_value,
    "lp": cmd_value,
    "gap": cmd_value,
    "sweep": cmd_sweep,
    "lemma3": cmd_lemma3,
}


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    level = logging.WARNING - 10 * min(args.verbose, 2)
    logging.basicConfig(level=level, format="%(name)s: %(message)s")
    cfg = _config(args)
    try:
        return _COMMANDS[cfg.command](cfg)
    except (ValueError, OSError) as exc:  # GraphFormatError is a ValueError
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT
    except (RuntimeError, AssertionError) as exc:
        print(f"internal invariant violation: {exc}", file=sys.stderr)
        traceback.print_exc()
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
