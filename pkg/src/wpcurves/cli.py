"""Command-line front end.

Exit codes: 0 success, 2 domain error, 3 resource cap exceeded, 64 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Optional, Sequence

from . import __version__
from .companion import (
    PolyhedralGroup,
    arnold_table,
    format_table,
    polyhedral_realize,
    table_to_dict,
    twisted_companion,
)
from .config import Config, ConfigError, load_config
from .core import (
    DomainError,
    WeightedCurve,
    classify,
    euler_characteristic,
    weight_lcm,
)
from .dominance import build_positive_dominance, emit_dot, terminal_nodes, node_name, validate
from .dominance import to_dict as dominance_dict
from .foxsearch import WitnessNotFound
from .fuchsian import (
    certificate_from_triangle,
    certify_curve,
    certify_torsionfree_kernel,
    fox_witness_search,
    images_from_dict,
    presentation,
)
from .k0 import K0Class, averaged_euler_form
from .permgrp import CapExceededError, PermGroup, format_cycles, group_order, is_simple, parse_cycles, product

EXIT_OK, EXIT_DOMAIN, EXIT_CAP, EXIT_USAGE = 0, 2, 3, 64
OUTPUT_FORMAT = "wpcurves.cli"
OUTPUT_VERSION = 1


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        raise UsageError(f"{self.prog}: {message}\n{self.format_usage()}")


def parse_curve(tokens: Sequence[str]) -> WeightedCurve:
    """Read ``g=<genus>`` and ``w=<a1,a2,...>`` tokens (either may be omitted)."""
    genus, weights = 0, []
    for tok in tokens:
        key, sep, value = tok.partition("=")
        if not sep or key not in ("g", "w"):
            raise UsageError(f"expected g=<genus> or w=<weights>, got {tok!r}")
        try:
            if key == "g":
                genus = int(value)
            else:
                weights = [int(x) for x in value.split(",") if x.strip()]
        except ValueError:
            raise UsageError(f"non-integer value in {tok!r}") from None
    return WeightedCurve(genus, weights)


def _ints(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise UsageError(f"expected comma-separated integers, got {text!r}") from None


def _frac(x: Fraction) -> str:
    return str(x)


# -- subcommands: each returns (text, payload) -----------------------------

def cmd_chi(args, cfg):
    curve = parse_curve(args.curve)
    chi = euler_characteristic(curve)
    return _frac(chi), {"genus": curve.genus, "weights": list(curve.weights), "chi": _frac(chi)}


def cmd_classify(args, cfg):
    curve = parse_curve(args.curve)
    kind = classify(curve).value
    chi = euler_characteristic(curve)
    return kind, {"genus": curve.genus, "weights": list(curve.weights), "chi": _frac(chi), "trisection": kind}


def cmd_k0(args, cfg):
    curve = parse_curve(args.curve)
    if len(args.rank) != 2 or len(args.degree) != 2:
        raise UsageError("k0 needs --rank and --degree twice each (first class, second class)")
    x = K0Class(args.rank[0], args.degree[0])
    y = K0Class(args.rank[1], args.degree[1])
    value = averaged_euler_form(curve, x, y)
    return _frac(value), {
        "genus": curve.genus, "weights": list(curve.weights), "abar": weight_lcm(curve),
        "x": [x.rank, x.degree], "y": [y.rank, y.degree], "form": _frac(value),
    }


def cmd_perm(args, cfg):
    perms = [parse_cycles(p) for p in args.cycles]
    if not perms:
        raise UsageError("perm needs at least one permutation")
    op = args.op
    if op == "order":
        if len(perms) != 1:
            raise UsageError("perm order takes one permutation")
        k = perms[0].order()
        return str(k), {"op": op, "order": k}
    if op == "mul":
        p = product(perms)
        return format_cycles(p), {"op": op, "product": format_cycles(p), "order": p.order()}
    if op == "group-order":
        n = group_order(perms, cfg.max_group_order_cap, method=args.method)
        return str(n), {"op": op, "order": n, "method": args.method}
    group = PermGroup(perms, cfg.max_group_order_cap)
    simple = is_simple(group)
    return str(simple).lower(), {"op": op, "order": group.order, "simple": simple}


def cmd_presentation(args, cfg):
    curve = parse_curve(args.curve)
    pres = presentation(curve)
    from .fuchsian import render_word

    return pres.render(), {
        "genus": pres.genus, "weights": list(pres.weights),
        "generators": pres.generators(), "relations": [render_word(r) for r in pres.relations()],
        "text": pres.render(),
    }


def cmd_witness(args, cfg):
    w = fox_witness_search(args.a, args.b, args.c, cfg.max_witness_degree, cfg.worker_count)
    cert = certificate_from_triangle(w, cfg.max_group_order_cap)
    text = (
        f"degree {w.degree}\nc1 = {w.c1}\nc2 = {w.c2}\nc3 = {w.c3}\n"
        f"index {cert.index}, torsionfree {str(cert.torsionfree).lower()}"
    )
    return text, {
        "orders": [w.a, w.b, w.c], "degree": w.degree,
        "c1": format_cycles(w.c1), "c2": format_cycles(w.c2), "c3": format_cycles(w.c3),
        "certificate": cert.to_dict(),
    }


def cmd_certify(args, cfg):
    if args.images:
        with open(args.images, encoding="utf-8") as fh:
            try:
                data = json.load(fh)
            except json.JSONDecodeError as exc:
                raise DomainError(f"{args.images}: invalid JSON ({exc})") from None
        try:
            pres, images = images_from_dict(data)
        except (KeyError, TypeError) as exc:
            raise DomainError(f"{args.images}: missing field {exc}") from None
        cert = certify_torsionfree_kernel(pres, images, cfg.max_group_order_cap)
    elif args.curve:
        cert = certify_curve(parse_curve(args.curve), cfg.max_witness_degree, cfg.worker_count,
                             cfg.max_group_order_cap)
    else:
        raise UsageError("certify needs --images FILE or a curve (g=.. w=..)")
    lines = [
        cert.presentation.render(),
        "images: " + " ".join(format_cycles(p) for p in cert.images.all()),
        f"index {cert.index}, torsionfree {str(cert.torsionfree).lower()}",
    ]
    if cert.reduction:
        lines.append(f"reduction: {cert.reduction}")
    return "\n".join(lines), cert.to_dict()


def cmd_companion(args, cfg):
    comp = twisted_companion(_ints(args.weights), args.param)
    text = (
        f"{comp.label()}: degrees {','.join(map(str, comp.degrees))}, |G| = {comp.group_order}, "
        f"chi = {comp.chi}, smooth = {str(comp.smooth).lower()}"
        + (f", genus = {comp.genus}" if comp.genus is not None else "")
    )
    return text, {
        "weights": list(comp.source_weights), "degrees": list(comp.degrees),
        "group_order": comp.group_order, "chi": _frac(comp.chi), "smooth": comp.smooth,
        "genus": comp.genus, "parameter": comp.parameter,
    }


def cmd_realize(args, cfg):
    P = PolyhedralGroup.parse(args.group)
    eps = _ints(args.eps)
    rec = polyhedral_realize(P, eps, args.a, args.r)
    ws = "<" + ",".join(map(str, rec.quotient_weights)) + ">"
    text = (
        f"P1{ws} = {rec.curve_label} / ({rec.group_description}), |G| = {rec.group_order}, "
        f"chi_X = {rec.chi_quotient}, chi_M = {rec.chi_cover}"
        + (f", g_M = {rec.genus_cover}" if rec.genus_cover is not None else "")
    )
    return text, {
        "quotient_weights": list(rec.quotient_weights), "group": rec.group_description,
        "group_order": rec.group_order, "chi_quotient": _frac(rec.chi_quotient),
        "chi_cover": _frac(rec.chi_cover), "genus_cover": rec.genus_cover,
        "cover": rec.curve_label, "problems": rec.problems(),
    }


def cmd_arnold(args, cfg):
    rows = arnold_table()
    text = format_table(rows, audit=args.audit)
    if args.audit:
        bad = [r for r in rows if not r.consistent]
        text += f"\n{len(rows) - len(bad)} of {len(rows)} rows reproduced; {len(bad)} INCONSISTENT: " + \
            ", ".join("<" + ",".join(map(str, r.weights)) + ">" for r in bad) + "\n"
    return text.rstrip("\n"), table_to_dict(rows)


def cmd_dominance(args, cfg):
    graph = build_positive_dominance(args.nmax, args.amax)
    problems = validate(graph)
    if cfg.output_format == "dot":
        return emit_dot(graph).rstrip("\n"), None
    payload = dominance_dict(graph)
    payload["violations"] = problems
    payload["terminal"] = sorted(node_name(v) for v in terminal_nodes(graph))
    text = (
        f"{len(graph.nodes)} nodes, {len(graph.edges)} edges, {len(problems)} violations\n"
        f"terminal: {', '.join(payload['terminal'])}"
    )
    return text, payload


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="wpcurves", description="Invariants of weighted projective curves.")
    p.add_argument("--version", action="version", version=f"wpcurves {__version__}")
    p.add_argument("--config", help="key=value configuration file")
    p.add_argument("--format", dest="output_format", choices=["text", "json", "dot"])
    p.add_argument("--cap", dest="max_group_order_cap", type=int)
    p.add_argument("--max-degree", dest="max_witness_degree", type=int)
    p.add_argument("--workers", dest="worker_count", type=int)
    sub = p.add_subparsers(dest="command", parser_class=_Parser)

    for name, fn in (("chi", cmd_chi), ("classify", cmd_classify), ("presentation", cmd_presentation)):
        s = sub.add_parser(name)
        s.add_argument("curve", nargs="*", help="g=<genus> w=<a1,a2,...>")
        s.set_defaults(func=fn)

    s = sub.add_parser("k0", help="averaged Euler form of two (rank, degree) classes")
    s.add_argument("curve", nargs="*")
    s.add_argument("--rank", type=int, action="append", default=[])
    s.add_argument("--degree", type=int, action="append", default=[])
    s.set_defaults(func=cmd_k0)

    s = sub.add_parser("perm")
    s.add_argument("op", choices=["order", "mul", "group-order", "simple"])
    s.add_argument("cycles", nargs="*")
    s.add_argument("--method", choices=["bfs", "chain"], default="bfs")
    s.set_defaults(func=cmd_perm)

    s = sub.add_parser("witness")
    for name in ("a", "b", "c"):
        s.add_argument(name, type=int)
    s.set_defaults(func=cmd_witness)

    s = sub.add_parser("certify")
    s.add_argument("--images", help="JSON file with presentation and images")
    s.add_argument("curve", nargs="*")
    s.set_defaults(func=cmd_certify)

    s = sub.add_parser("companion")
    s.add_argument("weights")
    s.add_argument("--param", help="opaque point-position parameter, e.g. lambda")
    s.set_defaults(func=cmd_companion)

    s = sub.add_parser("realize")
    s.add_argument("group", help="C<n>, D<n>, A4, S4 or A5")
    s.add_argument("eps", help="three 0/1 flags, e.g. 1,0,0")
    s.add_argument("a", type=int)
    s.add_argument("r", type=int)
    s.set_defaults(func=cmd_realize)

    s = sub.add_parser("arnold")
    s.add_argument("--audit", action="store_true")
    s.set_defaults(func=cmd_arnold)

    s = sub.add_parser("dominance")
    s.add_argument("--nmax", type=int, default=6)
    s.add_argument("--amax", type=int, default=3)
    s.set_defaults(func=cmd_dominance)
    return p


def run(argv: Optional[Sequence[str]] = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if not args.command:
            raise UsageError(parser.format_usage())
        overrides = {
            k: getattr(args, k)
            for k in ("output_format", "max_group_order_cap", "max_witness_degree", "worker_count")
        }
        cfg: Config = load_config(args.config, overrides)
        text, payload = args.func(args, cfg)
    except (UsageError, ConfigError) as exc:
        print(str(exc).rstrip("\n"), file=stderr)
        return EXIT_USAGE
    except CapExceededError as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_CAP
    except (DomainError, WitnessNotFound, ValueError) as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_DOMAIN
    except OSError as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_DOMAIN
    if cfg.output_format == "json":
        doc = {"format": OUTPUT_FORMAT, "version": OUTPUT_VERSION, "tool_version": __version__,
               "command": args.command, "result": payload}
        print(json.dumps(doc, indent=2), file=stdout)
    else:
        print(text, file=stdout)
    return EXIT_OK


def main() -> None:
    sys.exit(run())
