"""Command line interface.

Exit codes: 0 identity / verified, 1 refuted (witness printed), 2 budget
exceeded, 3 usage error.
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field as dc_field
from pathlib import Path

from .checker import is_identity
from .errors import BudgetExceeded, ParseError, ZGrassError
from .families import family_from_poly, generators_for
from .fields import QQ, Field, parse_field
from .freealg import FreePoly, classify, substitute, to_text
from .grading import INF, PRESETS, GradedAlgebra, GradingSpec, parse_blocks, parse_preset, preset, quotient
from .grassmann import parse_element, to_text as element_text
from .parser import parse_poly
from .rewrite import reduce_mod_I, to_pbw
from .theorems import THEOREMS, Params, run_theorem
from .tideal import SignatureSpace, multilinear_signatures, verify_generation

EXIT_OK, EXIT_REFUTED, EXIT_BUDGET, EXIT_USAGE = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        sys.exit(EXIT_USAGE)


# configuration -----------------------------------------------------------------

CONFIG_KEYS = {"field", "rank", "grading", "k", "r", "p", "q", "blocks", "modulus", "n_max", "deg_max",
               "max_len", "poly", "degrees", "format"}
_INT_KEYS = {"rank", "k", "r", "p", "q", "modulus", "n_max", "deg_max", "max_len"}


def load_config(path: str) -> dict:
    """Flat ``key = value`` file; ``#`` starts a comment; dashes in keys map to underscores."""
    out: dict = {}
    for lineno, raw in enumerate(Path(path).read_text().splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise UsageError(f"{path}:{lineno}: expected 'key = value'")
        key, val = (s.strip() for s in line.split("=", 1))
        key = key.replace("-", "_")
        if key not in CONFIG_KEYS:
            raise UsageError(f"{path}:{lineno}: unknown key {key!r}")
        if key in _INT_KEYS:
            try:
                val = int(val)
            except ValueError:
                raise UsageError(f"{path}:{lineno}: {key} must be an integer") from None
        if key == "poly":
            out.setdefault("poly", []).append(val)
        else:
            out[key] = val
    return out


@dataclass
class RunConfig:
    field: Field = QQ
    rank: int = 24
    grading: GradingSpec = dc_field(default_factory=lambda: preset("can"))
    n_max: int = 4
    deg_max: int = 3
    max_len: int | None = None
    k: int | None = None
    r: int | None = None
    p: int | None = None
    q: int | None = None
    fmt: str = "text"

    def algebra(self) -> GradedAlgebra:
        return GradedAlgebra(self.grading, self.rank, self.field)

    def params(self) -> Params:
        P = Params(n_max=self.n_max, deg_max=self.deg_max, field=self.field, rank=self.rank)
        for key in ("k", "r", "p", "q"):
            if getattr(self, key) is not None:
                setattr(P, key, getattr(self, key))
        return P


def _merged(args, cfg: dict, key: str, default=None):
    v = getattr(args, key, None)
    if v is None:
        v = cfg.get(key)
    return default if v is None else v


def build_grading(name: str | None, blocks: str | None, modulus: int | None, k, r, p, q) -> GradingSpec:
    if name and blocks:
        raise UsageError("give either --grading or --blocks, not both")
    if blocks:
        g = parse_blocks(blocks)
    else:
        name = name or "can"
        if "(" in name:
            g = parse_preset(name)
        else:
            params = {key: val for key, val in (("k", k), ("r", r), ("p", p), ("q", q)) if val is not None}
            needs = {"k": ("k",), "k_star": ("k",), "r_infinity": ("r",), "pq_1_infinity": ("p", "q"),
                     "pq_k_infinity": ("p", "q", "k")}.get(name, ())
            missing = [key for key in needs if key not in params]
            if missing:
                raise UsageError(f"grading {name} needs --{' --'.join(missing)}")
            g = preset(name, **{key: params[key] for key in needs})
    if modulus:
        g = quotient(g, modulus)
    return g


def make_config(args) -> tuple[RunConfig, dict]:
    cfg = load_config(args.config) if getattr(args, "config", None) else {}
    F = parse_field(str(_merged(args, cfg, "field", "q")))
    rank = int(_merged(args, cfg, "rank", 24))
    if rank < 1 or rank > 60:
        raise UsageError("--rank must be between 1 and 60")
    k, r, p, q = (_merged(args, cfg, key) for key in ("k", "r", "p", "q"))
    g = build_grading(_merged(args, cfg, "grading"), _merged(args, cfg, "blocks"),
                      _merged(args, cfg, "modulus"), k, r, p, q)
    rc = RunConfig(F, rank, g, int(_merged(args, cfg, "n_max", 4)), int(_merged(args, cfg, "deg_max", 3)),
                   _merged(args, cfg, "max_len"), k, r, p, q, _merged(args, cfg, "format", "text"))
    if rc.n_max < 1 or rc.deg_max < 0:
        raise UsageError("--n-max must be >= 1 and --deg-max >= 0")
    return rc, cfg


def read_polys(args, cfg: dict, F: Field) -> list[FreePoly]:
    texts = list(args.poly or [])
    if getattr(args, "poly_file", None):
        for line in Path(args.poly_file).read_text().splitlines():
            line = line.split("#", 1)[0].strip()
            if line:
                texts.append(line)
    if not texts:
        texts = list(cfg.get("poly", []))
    return [parse_poly(t, F) for t in texts]


# output --------------------------------------------------------------------------

class Output:
    def __init__(self, path: str | None, fmt: str):
        self.path = path
        self.fmt = fmt
        self.text: list[str] = []
        self.data: list = []

    def emit(self, text: str, data=None):
        self.text.append(text)
        self.data.append(data if data is not None else text)

    def flush(self):
        if self.fmt == "json":
            payload = self.data[0] if len(self.data) == 1 else self.data
            body = json.dumps(payload, indent=2, default=str)
        else:
            body = "\n".join(self.text)
        if self.path:
            Path(self.path).write_text(body + "\n")
        else:
            print(body)


# commands ------------------------------------------------------------------------

def _one_poly(args, cfg, rc) -> FreePoly:
    polys = read_polys(args, cfg, rc.field)
    if len(polys) != 1:
        raise UsageError("give exactly one polynomial (--poly or --poly-file)")
    return polys[0]


def _parse_assignment(items, F: Field, rank: int) -> dict:
    out = {}
    for item in items or []:
        if "=" not in item:
            raise UsageError(f"assignment {item!r} must look like x@1=e1+e2")
        lhs, rhs = item.split("=", 1)
        v = parse_poly(lhs, F).variables()
        if len(v) != 1:
            raise UsageError(f"left side of {item!r} must be one variable")
        out[v[0]] = parse_element(rhs, F, rank)
    return out


def cmd_eval(args, rc: RunConfig, cfg, out: Output) -> int:
    f = _one_poly(args, cfg, rc)
    A = rc.algebra()
    data = {"poly": to_text(f)}
    lines = [f"poly: {to_text(f)}"]
    c = classify(f)
    data["classification"] = {"multilinear": c.multilinear, "multihomogeneous": c.multihomogeneous,
                              "zero_proper": c.zero_proper, "proper": c.proper}
    lines.append("classification: " + ", ".join(k for k, v in data["classification"].items() if v) or "none")
    pbw = to_pbw(f)
    data["pbw"] = str(pbw)
    lines.append(f"pbw: {pbw}")
    if f.is_multilinear():
        red = reduce_mod_I(f)
        data["mod_I"] = str(red)
        lines.append(f"mod [x1,x2,x3]: {red}")
    if args.assign:
        asg = _parse_assignment(args.assign, rc.field, rc.rank)
        val = substitute(f, asg, A)
        data["value"] = element_text(val)
        lines.append(f"value: {element_text(val)}")
    out.emit("\n".join(lines), data)
    return EXIT_OK


def _check(args, rc, cfg, out: Output, witness_mode: bool) -> int:
    f = _one_poly(args, cfg, rc)
    A = rc.algebra()
    kw = {}
    if rc.max_len is not None:
        kw = {"rank": rc.rank, "max_len": rc.max_len}
    v = is_identity(f, A, **kw)
    text = v.to_text()
    if witness_mode and v.identity:
        text = "no witness: " + text
    out.emit(text, v.to_json())
    return EXIT_OK if v.identity else EXIT_REFUTED


def cmd_check(args, rc, cfg, out) -> int:
    return _check(args, rc, cfg, out, False)


def cmd_witness(args, rc, cfg, out) -> int:
    return _check(args, rc, cfg, out, True)


def cmd_span(args, rc: RunConfig, cfg, out: Output) -> int:
    A = rc.algebra()
    polys = read_polys(args, cfg, rc.field)
    if polys:
        G = [family_from_poly(f, f"g{i}") for i, f in enumerate(polys, 1)]
    else:
        G = generators_for(rc.grading, rc.field.char)
    deg_text = args.degrees or cfg.get("degrees")
    if deg_text:
        degs = [int(t) for t in str(deg_text).replace(";", ",").split(",") if t.strip()]
        sigs = [SignatureSpace.multilinear(degs, rc.field)]
    else:
        sigs = multilinear_signatures(rc.n_max, list(range(-1, rc.deg_max + 1)), field=rc.field)
    rep = verify_generation(A, G, sigs, f"consequence span vs identities for {rc.grading.describe()}")
    out.emit(rep.to_text(), rep.to_json())
    return EXIT_OK if rep.ok else EXIT_REFUTED


def cmd_verify(args, rc: RunConfig, cfg, out: Output) -> int:
    if args.theorem not in THEOREMS:
        raise UsageError(f"unknown theorem id {args.theorem!r}; known: {', '.join(THEOREMS)}")
    rep = run_theorem(args.theorem, rc.params())
    out.emit(rep.to_text(), rep.to_json())
    return EXIT_OK if rep.ok else EXIT_REFUTED


def cmd_gradings(args, rc: RunConfig, cfg, out: Output) -> int:
    explicit = any(getattr(args, key, None) is not None for key in ("grading", "blocks")) or \
        "grading" in cfg or "blocks" in cfg
    specs = [rc.grading] if explicit else []
    if not specs:
        for name in PRESETS:
            if name == "index":
                continue
            kw = {"k": {"k": 2}, "k_star": {"k": 2}, "r_infinity": {"r": 3}, "pq_1_infinity": {"p": 3, "q": 5},
                  "pq_k_infinity": {"p": 3, "q": 5, "k": 2}}.get(name, {})
            specs.append(preset(name, **kw))
    rows = []
    lines = []
    n = min(rc.rank, 12)
    for g in specs:
        A = GradedAlgebra(g, max(rc.rank, 1), rc.field)
        degs = [g.generator_degree(i) for i in range(1, n + 1)]
        supp, finite = A.with_rank(min(rc.rank, 12)).support_and_coverage(range(-3, 3 * (rc.deg_max + 1)))
        blocks = ";".join(f"({d},{'inf' if c is INF else c})" for d, c in g.blocks) if g.is_list else "index"
        rows.append({"grading": g.describe(), "blocks": blocks, "degrees": degs, "support": supp,
                     "finite_coverage": finite})
        lines.append(f"{g.describe()}\n  blocks: {blocks}\n  deg(e1..e{n}): {degs}\n"
                     f"  support (rank {min(rc.rank, 12)}): {supp}\n  finite coverage: {finite}")
    out.emit("\n".join(lines), rows)
    return EXIT_OK


COMMANDS = {"eval": cmd_eval, "check": cmd_check, "witness": cmd_witness, "span": cmd_span,
            "verify": cmd_verify, "gradings": cmd_gradings}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--field", help="q (rationals) or fp:<p> for an odd prime p")
    common.add_argument("--rank", type=int, help="number of Grassmann generators (default 24)")
    common.add_argument("--grading", help=f"preset name ({', '.join(PRESETS)}) or e.g. 'k_star(2)'")
    common.add_argument("--blocks", help="list grading, e.g. '(0,inf);(1,2)'")
    common.add_argument("--modulus", type=int, help="reduce degrees mod m (quotient grading)")
    for key in ("k", "r", "p", "q"):
        common.add_argument(f"--{key}", type=int, help=f"preset parameter {key}")
    common.add_argument("--config", help="key = value file; flags override it")
    common.add_argument("--poly", action="append", help="polynomial expression (repeatable for span)")
    common.add_argument("--poly-file", help="file with one polynomial per line")
    common.add_argument("--n-max", type=int, help="largest number of variables (default 4)")
    common.add_argument("--deg-max", type=int, help="largest variable degree in windows (default 3)")
    common.add_argument("--max-len", type=int, help="word length bound; forces the finite-rank generic check")
    common.add_argument("--out", help="write the report here instead of stdout")
    common.add_argument("--format", choices=("text", "json"))

    ap = _Parser(prog="zgrass", description="Exact Z-graded Grassmann algebras and graded identities")
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)
    p = sub.add_parser("eval", parents=[common], help="normal forms and evaluation of a polynomial")
    p.add_argument("--assign", action="append", help="substitution such as 'x@1=e1+e2' (repeatable)")
    sub.add_parser("check", parents=[common], help="decide whether a polynomial is a graded identity")
    sub.add_parser("witness", parents=[common], help="find a nonvanishing substitution")
    p = sub.add_parser("span", parents=[common], help="compare consequence span with the identity space")
    p.add_argument("--degrees", help="one multilinear signature, e.g. '0,1,2'")
    p = sub.add_parser("verify", parents=[common], help="run a named desk-scale verification")
    p.add_argument("theorem", help=", ".join(THEOREMS))
    sub.add_parser("gradings", parents=[common], help="describe the preset gradings")
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as e:         # --help, or a usage error already printed
        return e.code if isinstance(e.code, int) else EXIT_USAGE
    try:
        rc, cfg = make_config(args)
        out = Output(args.out, rc.fmt)
        code = COMMANDS[args.command](args, rc, cfg, out)
        out.flush()
        return code
    except BudgetExceeded as e:
        print(f"budget exceeded: {e}", file=sys.stderr)
        return EXIT_BUDGET
    except (UsageError, ParseError, ValueError, ZGrassError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
