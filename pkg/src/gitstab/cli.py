"""Command line interface: ``gitstab {poset,nonstable,luna,strata,classify}``."""
from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from typing import Sequence

from . import audit, catalog
from .core import NormalizationCone, enumerate_monomials
from .families import (
    FamilyRecord,
    associated_flag,
    classify_support,
    maximal_nonstable_families,
    verdict_to_json,
)
from .luna import ClosedOrbit, luna_classify, sublevel_families
from .luna import verdict_to_json as luna_verdict_json
from .notation import ParseError, format_monomial, format_support, format_weight, parse_homogeneous
from .poset import MonomialPoset, downset, hasse
from .strata import dumps as strata_dumps
from .strata import replay_edges

PROFILE_ENV = "GITSTAB_PROFILE"
DEFAULT_PROFILE = (catalog.N_VARS, catalog.DEGREE)

EXIT_OK, EXIT_USAGE, EXIT_VERIFY = 0, 1, 2


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class RunConfig:
    n_vars: int
    degree: int
    fmt: str = "text"

    def __post_init__(self) -> None:
        if self.n_vars < 1 or self.degree < 1:
            raise UsageError("--n and --d must be positive")

    @property
    def is_quintic(self) -> bool:
        return (self.n_vars, self.degree) == DEFAULT_PROFILE


def parse_profile(text: str) -> tuple[int, int]:
    """Accept "N,D" or "NxD"."""
    parts = text.replace("x", ",").split(",")
    try:
        n, d = (int(p) for p in parts)
    except ValueError:
        raise UsageError(f"{PROFILE_ENV} must look like '5,5', got {text!r}") from None
    return n, d


def resolve_config(args: argparse.Namespace, env: dict | None = None) -> RunConfig:
    """Flags override the environment, which overrides the built-in profile."""
    env = os.environ if env is None else env
    n, d = DEFAULT_PROFILE
    if env.get(PROFILE_ENV):
        n, d = parse_profile(env[PROFILE_ENV])
    n = args.n if getattr(args, "n", None) is not None else n
    d = args.d if getattr(args, "d", None) is not None else d
    fmt = getattr(args, "format", None) or "text"
    return RunConfig(n, d, fmt)


def _emit(obj, out) -> None:
    out.write(json.dumps(obj, sort_keys=True, indent=1) + "\n")


def _require_quintic(cfg: RunConfig, what: str) -> None:
    if not cfg.is_quintic:
        raise UsageError(f"{what} is only catalogued for n=5, d=5")


def _parse_monomials(text: str, cfg: RunConfig) -> list[tuple[int, ...]]:
    out = []
    for chunk in text.split(";"):
        try:
            m = tuple(int(x) for x in chunk.split(","))
        except ValueError:
            raise UsageError(f"bad exponent vector {chunk!r}") from None
        if len(m) != cfg.n_vars or sum(m) != cfg.degree or min(m) < 0:
            raise UsageError(f"{chunk!r} is not a monomial of degree {cfg.degree} in {cfg.n_vars} variables")
        out.append(m)
    return out


def _run_checks(checks, cfg: RunConfig, out) -> int:
    results = [c() for c in checks]
    if cfg.fmt == "json":
        out.write(audit.dumps(results) + "\n")
    else:
        out.write(audit.summary(results) + "\n")
    return EXIT_OK if all(r.passed for r in results) else EXIT_VERIFY


# ------------------------------------------------------------------ poset


def poset_text(p: MonomialPoset, keep: frozenset | None = None) -> str:
    lines = []
    for m in p.universe:
        if keep is not None and m not in keep:
            continue
        below = sorted((b for a, b in p.covers if a == m and (keep is None or b in keep)), reverse=True)
        lines.append(f"{format_monomial(m)} > " + (", ".join(format_monomial(b) for b in below) or "-"))
    return "\n".join(lines) + "\n"


def cmd_poset(cfg: RunConfig, args, out) -> int:
    p = hasse(enumerate_monomials(cfg.n_vars, cfg.degree), NormalizationCone.standard(cfg.n_vars))
    if args.downset:
        keep = downset(p, _parse_monomials(args.downset, cfg))
        p = MonomialPoset(
            tuple(m for m in p.universe if m in keep),
            p.cone,
            frozenset((a, b) for a, b in p.covers if a in keep and b in keep),
        )
    if cfg.fmt == "dot":
        out.write(p.to_dot())
    elif cfg.fmt == "json":
        _emit(
            {
                "nodes": [list(m) for m in p.universe],
                "covers": [[list(a), list(b)] for a, b in sorted(p.covers, reverse=True)],
            },
            out,
        )
    else:
        out.write(poset_text(p))
    return EXIT_OK


# ------------------------------------------------------------------ nonstable


def _degeneration(cfg: RunConfig, r: FamilyRecord) -> str:
    if not cfg.is_quintic:
        return "-"
    return audit.degeneration_label(r.support, r.destabilizer) or "-"


def cmd_nonstable(cfg: RunConfig, args, out) -> int:
    if args.verify_paper:
        _require_quintic(cfg, "verification")
        return _run_checks((audit.check_top_families, audit.check_flags, audit.check_degenerations), cfg, out)
    if cfg.is_quintic:
        recs = list(audit.top_records(certify=args.audit))
    else:
        recs = maximal_nonstable_families(
            enumerate_monomials(cfg.n_vars, cfg.degree), NormalizationCone.standard(cfg.n_vars), certify=args.audit
        )
    rows = []
    for i, r in enumerate(recs, 1):
        row = {
            "family": r.label or f"F{i}",
            "destabilizer": list(r.destabilizer),
            "maximal_monomials": [list(m) for m in r.maximal_monomials],
            "support_size": len(r.support),
            "degeneration": _degeneration(cfg, r),
        }
        if args.flags:
            row["flag"] = [list(s) for s in associated_flag(r.destabilizer)]
        if args.audit:
            row["excluded_certified"] = len(r.maximality)
        rows.append(row)
    if cfg.fmt == "json":
        _emit({"families": rows}, out)
        return EXIT_OK
    head = ["family", "destabilizer", "size", "degeneration", "maximal monomials"] + (["flag"] if args.flags else [])
    table = [
        [
            row["family"],
            format_weight(row["destabilizer"]),
            str(row["support_size"]),
            row["degeneration"],
            ", ".join(format_monomial(m) for m in row["maximal_monomials"]),
        ]
        + ([" > ".join("{" + ",".join(map(str, s)) + "}" for s in row["flag"])] if args.flags else [])
        for row in rows
    ]
    widths = [max(len(x) for x in col) for col in zip(head, *table)]
    for line in [head] + table:
        out.write("  ".join(x.ljust(w) for x, w in zip(line, widths)).rstrip() + "\n")
    return EXIT_OK


# ------------------------------------------------------------------ luna


def luna_report(label: str) -> dict:
    ctx = audit.orbit_context(label)
    support = catalog.orbit_support(label)
    semi, unst = sublevel_families(ctx, certify=False)
    own = luna_classify(support, ctx)

    def fam(r: FamilyRecord) -> dict:
        v = luna_classify(r.support, ctx)
        return {
            "destabilizer": list(r.destabilizer),
            "maximal_monomials": [list(m) for m in r.maximal_monomials],
            "support_size": len(r.support),
            "verdict": luna_verdict_json(v),
        }

    return {
        "label": label,
        "context": ctx.to_json(),
        "family": luna_verdict_json(own),
        "semistable": [fam(r) for r in semi],
        "unstable": [fam(r) for r in unst],
    }


def cmd_luna(cfg: RunConfig, args, out) -> int:
    _require_quintic(cfg, "luna")
    label = args.label
    if label not in catalog.MINIMAL_ORBITS:
        raise UsageError(f"unknown family {label!r}; choose from {', '.join(catalog.MINIMAL_ORBITS)}")
    if args.verify_paper:
        rows = {
            s.label: audit.printed_witness_report(s.label)
            for s in catalog.sub_families(label, unstable=False)
            if catalog.SUB_DESTABILIZERS.get(s.label)
        }
        ok = all(r["ok"] for r in rows.values())
        if cfg.fmt == "json":
            _emit({"label": label, "witnesses": rows, "passed": ok}, out)
        else:
            for k, r in rows.items():
                out.write(f"{'PASS' if r['ok'] else 'FAIL'}  {k} {format_weight(r['weight'])} max weight {r['max_weight']}\n")
        return EXIT_OK if ok else EXIT_VERIFY
    rep = luna_report(label)
    if cfg.fmt == "json":
        _emit(rep, out)
        return EXIT_OK
    ctx = rep["context"]
    out.write(f"{label}: {format_support(catalog.orbit_support(label))}\n")
    out.write(f"stabilizer basis: {', '.join(format_weight(h) for h in ctx['h'])}\n")
    out.write(f"centralizer blocks: {ctx['blocks']}\n")
    out.write(f"fixed monomials: {ctx['universe_size']}\n")
    if not rep["semistable"] and not rep["unstable"] and isinstance(
        luna_classify(catalog.orbit_support(label), audit.orbit_context(label)), ClosedOrbit
    ):
        out.write("closed orbit; no destabilizing 1-PS\n")
        return EXIT_OK
    for kind in ("semistable", "unstable"):
        out.write(f"{kind} sub-families: {len(rep[kind])}\n")
        for i, f in enumerate(rep[kind], 1):
            mono = ", ".join(format_monomial(m) for m in f["maximal_monomials"])
            out.write(f"  {i}. {format_weight(f['destabilizer'])}  size {f['support_size']}  "
                      f"{f['verdict']['verdict']}  [{mono}]\n")
    return EXIT_OK


# ------------------------------------------------------------------ strata


def cmd_strata(cfg: RunConfig, args, out) -> int:
    _require_quintic(cfg, "strata")
    if args.verify_paper:
        return _run_checks((audit.check_strata,), cfg, out)
    g = audit.quintic_strata()
    status = EXIT_OK
    notes = []
    if args.sink_check:
        sinks = [g.name(s) for s in g.sinks()]
        ok = sinks == [audit.SINK] and g.find(audit.SINK) == ((1,) * cfg.n_vars,)
        notes.append(f"sink check: {'ok' if ok else 'failed'} ({', '.join(sinks)})")
        status = status if ok else EXIT_VERIFY
    if args.audit:
        replays = replay_edges(g)
        bad = [(a, b) for a, b, ok in replays if not ok]
        notes.append(f"replayed {len(replays) - len(bad)}/{len(replays)} edges")
        status = status if not bad else EXIT_VERIFY
    if cfg.fmt == "dot":
        out.write(g.to_dot())
    elif cfg.fmt == "json":
        out.write(strata_dumps(g) + "\n")
    else:
        out.write(f"nodes: {len(g.nodes)}  edges: {len(g.edges)}  acyclic: {g.is_acyclic()}\n")
        for a, b in g.edge_pairs():
            out.write(f"{a} -> {b}\n")
    for n in notes:
        sys.stderr.write(n + "\n")
    return status


# ------------------------------------------------------------------ classify


def cmd_classify(cfg: RunConfig, args, out) -> int:
    try:
        s = parse_homogeneous(args.expr, cfg.n_vars, cfg.degree)
    except ParseError as exc:
        raise UsageError(str(exc)) from None
    if not s:
        raise UsageError("empty polynomial")
    uni = enumerate_monomials(cfg.n_vars, cfg.degree)
    cone = NormalizationCone.standard(cfg.n_vars)
    fams = audit.top_records(certify=False) if cfg.is_quintic else ()
    v = classify_support(s, uni, cone, fams)
    rep = verdict_to_json(v)
    if cfg.fmt == "json":
        _emit(rep, out)
        return EXIT_OK
    line = {"stable": "Stable", "non-stable": "NonStable", "unstable": "Unstable"}[rep["verdict"]]
    if "weight" in rep:
        line += f"  witness {format_weight(rep['weight'])}"
        if rep["families"]:
            line += f"  family {', '.join(rep['families'])}"
    else:
        line += f"  ({rep['scope']})"
    out.write(line + "\n")
    return EXIT_OK


# ------------------------------------------------------------------ entry point


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        self.print_usage(sys.stderr)
        sys.stderr.write(f"{self.prog}: error: {message}\n")
        raise SystemExit(EXIT_USAGE)


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--n", type=int, default=argparse.SUPPRESS, help="number of variables")
    common.add_argument("--d", type=int, default=argparse.SUPPRESS, help="degree")
    common.add_argument("--format", choices=("text", "json", "dot"), default=argparse.SUPPRESS)
    common.add_argument("--verify-paper", action="store_true", default=argparse.SUPPRESS,
                        help="recompute the reference catalog and compare")

    p = _Parser(prog="gitstab", parents=[common], description="Torus stability of monomial supports of forms.")
    sub = p.add_subparsers(dest="command", parser_class=_Parser)

    sp = sub.add_parser("poset", parents=[common], help="dominance order of monomials")
    sp.add_argument("--downset", help="semicolon separated exponent vectors, e.g. 3,0,0,2,0")

    sp = sub.add_parser("nonstable", parents=[common], help="maximal non-stable families")
    sp.add_argument("--flags", action="store_true", help="add the destabilizing flag column")
    sp.add_argument("--audit", action="store_true", help="attach and count maximality certificates")

    sp = sub.add_parser("luna", parents=[common], help="sub-families of a closed-orbit family")
    sp.add_argument("label")

    sp = sub.add_parser("strata", parents=[common], help="degeneration graph of boundary families")
    sp.add_argument("--sink-check", action="store_true")
    sp.add_argument("--audit", action="store_true", help="replay every edge witness")

    sp = sub.add_parser("classify", parents=[common], help="classify a form by its support")
    sp.add_argument("expr", help='e.g. "x0^5 + x1*x2^4" or [[5,0,0,0,0]]')
    return p


COMMANDS = {
    "poset": cmd_poset,
    "nonstable": cmd_nonstable,
    "luna": cmd_luna,
    "strata": cmd_strata,
    "classify": cmd_classify,
}


def main(argv: Sequence[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    args.verify_paper = getattr(args, "verify_paper", False)
    try:
        cfg = resolve_config(args)
        if args.command is None:
            if not args.verify_paper:
                parser.print_usage(sys.stderr)
                return EXIT_USAGE
            _require_quintic(cfg, "verification")
            return _run_checks(audit.CHECKS, cfg, out)
        default_fmt = "dot" if args.command == "strata" and getattr(args, "format", None) is None else None
        if default_fmt:
            cfg = RunConfig(cfg.n_vars, cfg.degree, default_fmt)
        return COMMANDS[args.command](cfg, args, out)
    except UsageError as exc:
        sys.stderr.write(f"gitstab: error: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    raise SystemExit(main())
