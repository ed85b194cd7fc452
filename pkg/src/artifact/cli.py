"""Command line front end: ``cuspidal tile|ribbon|check|verify``.

Exit codes: 0 success, 1 verification failure, 2 bad shape or root,
3 bad preorder, 4 cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

from .cuspidal import (
    NotIndivisibleError,
    canonical_ribbon,
    gamma_sc_tiling,
    gamma_tiling,
    init_residues,
    is_cuspidal,
    is_semicuspidal,
    matches_representative,
)
from .dilation import core_components, undilate
from .oracles import run_suite
from .preorder import (
    PRESETS,
    ConvexPreorder,
    InvalidPreorderError,
    build_functional,
    require_valid,
    reverse,
    verify_axioms,
)
from .render import RenderOptions, render_shape, render_tiling
from .roots import RootVector, format_root, in_psi, psi_m
from .shapes import InvalidShapeError, SkewShape, content, from_skew_partition, is_connected
from .tiling import CapExceeded

EXIT_OK, EXIT_FAIL, EXIT_SHAPE, EXIT_PREORDER, EXIT_CAP = range(5)
DEFAULT_NODE_CAP = 10
SHOWN_VIOLATIONS = 20


class CliError(Exception):
    def __init__(self, code: int, message: str) -> None:
        super().__init__(message)
        self.code = code


@dataclass(frozen=True)
class SessionConfig:
    pre: ConvexPreorder
    height_bound: int
    node_cap: int
    as_json: bool
    color: bool

    @property
    def e(self) -> int:
        return self.pre.e


# ------------------------------------------------------------------ parsing


def parse_h(text: str) -> list[tuple[int, int]]:
    """``"2,1;-1,0;-1,-1"`` or a JSON list of pairs."""
    try:
        if text.lstrip().startswith("["):
            pairs = json.loads(text)
        else:
            pairs = [part.split(",") for part in text.split(";") if part.strip()]
        out = [(int(a), int(b)) for a, b in pairs]
    except (ValueError, TypeError) as exc:
        raise CliError(EXIT_PREORDER, f"cannot parse --h {text!r}: {exc}") from exc
    if len(out) < 2:
        raise CliError(EXIT_PREORDER, "--h needs at least two pairs")
    return out


def build_preorder(args: argparse.Namespace) -> ConvexPreorder:
    if args.h is not None:
        if args.preset:
            raise CliError(EXIT_PREORDER, "give either --preset or --h, not both")
        h = parse_h(args.h)
        if args.e is not None and args.e != len(h):
            raise CliError(EXIT_PREORDER, f"--h has {len(h)} pairs but --e is {args.e}")
        pre: ConvexPreorder = build_functional(len(h), h)
    else:
        name = args.preset or {None: "bigex", 2: "e2-standard", 3: "bigex"}.get(args.e)
        if name is None:
            raise CliError(EXIT_PREORDER, f"no preset for e={args.e}; pass --h")
        if name not in PRESETS:
            raise CliError(EXIT_PREORDER, f"unknown preset {name!r}; choose from {', '.join(PRESETS)}")
        pre = PRESETS[name]()
        if args.e is not None and args.e != pre.e:
            raise CliError(EXIT_PREORDER, f"preset {name} has e={pre.e}, not {args.e}")
    return reverse(pre) if args.reverse else pre


def _int_list(text: str) -> list[int]:
    return [int(x) for x in text.split(",") if x.strip()]


def parse_skew(text: str, e: int) -> SkewShape:
    """``lam/mu/charge`` with comma separated parts; ``mu`` may be empty."""
    parts = text.split("/")
    if len(parts) not in (2, 3):
        raise CliError(EXIT_SHAPE, f"expected 'lam/mu/charge', got {text!r}")
    if len(parts) == 2:
        parts.append("0")
    try:
        lam, mu, charge = _int_list(parts[0]), _int_list(parts[1]), int(parts[2] or 0)
        return from_skew_partition(lam, mu, charge, e)
    except (ValueError, InvalidShapeError) as exc:
        raise CliError(EXIT_SHAPE, f"bad skew shape {text!r}: {exc}") from exc


def load_nodes(path: str, e: int) -> SkewShape:
    """A JSON node list, an object with ``nodes``, or ``tile --json`` output (its ``host``)."""
    try:
        data = json.loads(Path(path).read_text())
    except (OSError, ValueError) as exc:
        raise CliError(EXIT_SHAPE, f"cannot read {path}: {exc}") from exc
    if isinstance(data, dict):
        data = data.get("host", data)
        if "e" in data and int(data["e"]) != e:
            raise CliError(EXIT_SHAPE, f"{path} has e={data['e']}, preorder has e={e}")
        data = data.get("nodes")
    try:
        nodes = [(int(r), int(c)) for r, c in data]
    except (TypeError, ValueError) as exc:
        raise CliError(EXIT_SHAPE, f"{path}: expected a list of [row, col] pairs") from exc
    s = SkewShape(nodes, e)
    if not s.nodes:
        raise CliError(EXIT_SHAPE, "empty shape")
    try:
        return s.require_skew()
    except InvalidShapeError as exc:
        raise CliError(EXIT_SHAPE, str(exc)) from exc


def read_shape(args: argparse.Namespace, e: int) -> SkewShape:
    if (args.skew is None) == (args.nodes_file is None):
        raise CliError(EXIT_SHAPE, "give exactly one of --skew or --nodes-file")
    if args.skew is not None:
        s = parse_skew(args.skew, e)
        if not s.nodes:
            raise CliError(EXIT_SHAPE, "empty shape")
        return s
    return load_nodes(args.nodes_file, e)


_TERM = re.compile(r"^(\d*)\s*(delta|d|δ|alpha(\d+)|a(\d+)|α(\d+))$")


def parse_root(text: str, e: int) -> RootVector:
    """Coefficients ``3,2,2`` or a sum such as ``2delta+alpha0``."""
    text = text.strip()
    try:
        if re.fullmatch(r"\d+(,\d+)*", text):
            v = RootVector.of(_int_list(text))
            if v.e != e:
                raise CliError(EXIT_SHAPE, f"root {text!r} has {v.e} coefficients, expected {e}")
            return v
        total = [0] * e
        for term in text.split("+"):
            m = _TERM.match(term.strip())
            if m is None:
                raise CliError(EXIT_SHAPE, f"cannot parse root term {term!r}")
            k = int(m.group(1) or 1)
            idx = next((g for g in m.groups()[2:] if g is not None), None)
            if idx is None:
                total = [c + k for c in total]
            else:
                if int(idx) >= e:
                    raise CliError(EXIT_SHAPE, f"alpha{idx} does not exist for e={e}")
                total[int(idx)] += k
        return RootVector(e, tuple(total))
    except ValueError as exc:
        raise CliError(EXIT_SHAPE, f"bad root {text!r}: {exc}") from exc


# ------------------------------------------------------------------ output


def _color_enabled() -> bool:
    mode = os.environ.get("CUSPIDAL_COLOR", "auto").lower()
    return mode != "never" and sys.stdout.isatty()


def _write_svg(path: str | None, text_fn) -> None:
    if path:
        Path(path).write_text(text_fn(RenderOptions(format="svg")))


def _emit(obj: dict) -> None:
    print(json.dumps(obj, ensure_ascii=False, sort_keys=True))


def _yes(flag: bool) -> str:
    return "yes" if flag else "no"


# ---------------------------------------------------------------- commands


def cmd_tile(args: argparse.Namespace, cfg: SessionConfig) -> int:
    host = read_shape(args, cfg.e)
    g = gamma_sc_tiling(host, cfg.pre) if args.strict else gamma_tiling(host, cfg.pre)
    notation = g.partition.notation(cfg.pre)
    _write_svg(args.svg, lambda o: render_tiling(g, o))
    if cfg.as_json:
        out = g.to_json(cfg.pre)
        out.update(host=host.to_json() | {"e": cfg.e}, notation=notation,
                   preorder=cfg.pre.to_spec(), strict=bool(args.strict))
        _emit(out)
        return EXIT_OK
    print(notation)
    print(render_tiling(g, RenderOptions(color=cfg.color)), end="")
    return EXIT_OK


def cmd_ribbon(args: argparse.Namespace, cfg: SessionConfig) -> int:
    beta = parse_root(args.root, cfg.e)
    if not in_psi(beta):
        raise CliError(EXIT_SHAPE, f"{format_root(beta)} is neither a real root nor delta")
    starts = init_residues(beta)
    if args.init is not None and args.init % cfg.e not in starts:
        raise CliError(EXIT_SHAPE, f"a ribbon of content {format_root(beta)} cannot start at residue {args.init}")
    try:
        r = canonical_ribbon(beta, cfg.pre, None if args.init is None else args.init % cfg.e)
    except NotIndivisibleError as exc:
        raise CliError(EXIT_SHAPE, str(exc)) from exc
    _write_svg(args.svg, lambda o: render_shape(r.shape, o))
    if cfg.as_json:
        _emit({"root": beta.to_list(), "base": list(r.base), "steps": r.steps,
               "nodes": r.shape.to_json()["nodes"], "preorder": cfg.pre.to_spec()})
        return EXIT_OK
    print(r.steps or "-")
    print(render_shape(r.shape), end="")
    return EXIT_OK


def cmd_check(args: argparse.Namespace, cfg: SessionConfig) -> int:
    s = read_shape(args, cfg.e)
    beta = content(s)
    cusp = is_cuspidal(s, cfg.pre, brute_force=args.brute_force)
    semi = is_semicuspidal(s, cfg.pre, brute_force=args.brute_force)
    dec = psi_m(beta)
    imaginary = dec is not None and dec.base == RootVector.delta(cfg.e)
    single = undilate(s, cfg.pre) if imaginary and is_connected(s.nodes) else None
    cores = core_components(s, cfg.pre) if imaginary else None
    rep = matches_representative(s, cfg.pre)
    _write_svg(args.svg, lambda o: render_shape(s, o))
    if cfg.as_json:
        _emit({
            "content": beta.to_list(),
            "cuspidal": cusp,
            "semicuspidal": semi,
            "undilation": None if single is None else {"t": single[0], "core": single[1].to_json()},
            "components": None if cores is None else [{"t": t, "core": c.to_json()} for t, c in cores],
            "representative": rep,
        })
        return EXIT_OK
    print(f"content: {format_root(beta)}")
    print(f"cuspidal: {_yes(cusp)}")
    print(f"semicuspidal: {_yes(semi)}")
    if single is not None:
        print(f"undilation: t={single[0]} core={len(single[1])} nodes")
    elif cores is not None:
        parts = ", ".join(f"t={t} core={len(c)} nodes" for t, c in cores)
        print(f"undilation: components [{parts}]")
    else:
        print("undilation: none")
    print(f"representative: {_yes(rep)}")
    return EXIT_OK


def cmd_verify(args: argparse.Namespace, cfg: SessionConfig) -> int:
    if args.max_nodes < 1:
        raise CliError(EXIT_CAP, "--max-nodes must be positive")
    if args.max_nodes > cfg.node_cap:
        raise CliError(EXIT_CAP, f"--max-nodes {args.max_nodes} exceeds the node cap {cfg.node_cap}")
    report = verify_axioms(cfg.pre, cfg.height_bound)
    if not report.ok:
        if cfg.as_json:
            _emit({"ok": False, "axioms": [str(v) for v in report.violations]})
        else:
            print(f"FAIL preorder axioms (height <= {cfg.height_bound}): {len(report.violations)} violations")
            for v in report.violations[:SHOWN_VIOLATIONS]:
                print(f"  {v}")
            hidden = len(report.violations) - SHOWN_VIOLATIONS
            if hidden > 0:
                print(f"  ... and {hidden} more")
        return EXIT_FAIL
    results = run_suite(cfg.pre, args.max_nodes, cfg.height_bound)
    ok = all(r.ok for r in results)
    if cfg.as_json:
        _emit({"ok": ok, "checks": [{"name": r.name, "checked": r.checked, "failures": len(r.failures)}
                                    for r in results]})
    else:
        for r in results:
            print(f"{'PASS' if r.ok else 'FAIL'} {r.name}: {r.checked} checked, {len(r.failures)} failures")
    return EXIT_OK if ok else EXIT_FAIL


# ------------------------------------------------------------------- main


def _parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--preset", choices=sorted(PRESETS))
    common.add_argument("--h", help="h-assignment, e.g. '2,1;-1,0;-1,-1'")
    common.add_argument("--reverse", action="store_true", help="use the reversed preorder")
    common.add_argument("--e", type=int)
    common.add_argument("--height-bound", type=int, default=12,
                        help="root height up to which the preorder axioms are checked")
    common.add_argument("--node-cap", type=int, default=DEFAULT_NODE_CAP)
    common.add_argument("--json", action="store_true", help="machine readable output")
    common.add_argument("--svg", metavar="PATH", help="also write an SVG picture")

    shape = argparse.ArgumentParser(add_help=False)
    shape.add_argument("--skew", help="'lam/mu/charge', e.g. '6,5,5,5,5,2,2,1//0'")
    shape.add_argument("--nodes-file", help="JSON file with [row, col] nodes")

    p = argparse.ArgumentParser(prog="cuspidal", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)
    t = sub.add_parser("tile", parents=[common, shape], help="cuspidal Kostant tiling of a shape")
    t.add_argument("--strict", action="store_true", help="merge equal-content tiles")
    r = sub.add_parser("ribbon", parents=[common], help="cuspidal ribbon of a root")
    r.add_argument("--root", required=True, help="'3,2,2', 'delta', 'alpha0', '2delta+alpha0'")
    r.add_argument("--init", type=int, help="starting residue (needed only for delta)")
    c = sub.add_parser("check", parents=[common, shape], help="classify a shape")
    c.add_argument("--brute-force", action="store_true", help="use the two-split definitions")
    v = sub.add_parser("verify", parents=[common], help="run the oracle suite")
    v.add_argument("--max-nodes", type=int, default=6)
    return p


COMMANDS = {"tile": cmd_tile, "ribbon": cmd_ribbon, "check": cmd_check, "verify": cmd_verify}


def main(argv: Sequence[str] | None = None) -> int:
    args = _parser().parse_args(argv)
    try:
        if args.height_bound < 2:
            raise CliError(EXIT_PREORDER, "--height-bound must be at least 2")
        try:
            pre = build_preorder(args)
        except (InvalidPreorderError, ValueError) as exc:
            raise CliError(EXIT_PREORDER, str(exc)) from exc
        if args.command != "verify":
            try:
                require_valid(pre, args.height_bound)
            except InvalidPreorderError as exc:
                raise CliError(EXIT_PREORDER, str(exc)) from exc
        cfg = SessionConfig(pre, args.height_bound, args.node_cap, args.json, _color_enabled())
        return COMMANDS[args.command](args, cfg)
    except CliError as exc:
        print(f"cuspidal: {exc}", file=sys.stderr)
        return exc.code
    except CapExceeded as exc:
        print(f"cuspidal: {exc}", file=sys.stderr)
        return EXIT_CAP


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
