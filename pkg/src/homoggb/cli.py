"""Command-line front end.

Reads one polynomial per line (``#`` comments allowed) from a file or
stdin, runs one command and prints canonical results.  Exit status: 0 on
success, 1 when a check fails, 2 on usage or parse errors.

Examples::

    homoggb gb --var-order x,y --reduced < system.poly
    homoggb pipeline-central < system.poly
    homoggb pipeline-free --max-degree 8 --format json < system.poly
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from .groebner import buchberger, is_groebner
from .ncgroebner import is_nc_groebner, nc_complete, reduce_nc_basis
from .central import CentralHomogenizer
from .noncentral import NoncentralHomogenizer
from .pipeline import (
    gb_via_central_homogenization,
    gb_via_nc_homogenization,
    normal_monomials,
    strict_inclusion_witness,
)
from .rings import COMM, FREE, RingDescriptor
from .scalars import Field
from .syntax import PolynomialSyntaxError, infer_variables, parse_system

COMMANDS = (
    "homogenize",
    "dehomogenize",
    "gb",
    "pipeline-central",
    "pipeline-free",
    "normal-monomials",
    "check-gb",
)


class UsageError(Exception):
    pass


@dataclass
class JobConfig:
    command: str
    ring: str = COMM
    vars: tuple = None
    weights: tuple = None
    var_order: tuple = None
    field: str = "q"
    homog_var: str = None
    max_degree: int = None
    reduced: bool = False
    format: str = "text"
    emit_commutators: bool = False
    up_to: int = None
    order: str = "grlex"

    def validate(self):
        if self.command not in COMMANDS:
            raise UsageError(f"unknown command {self.command!r}")
        if self.order != "grlex":
            raise UsageError("only --order grlex is supported")
        if self.command == "pipeline-free":
            self.ring = FREE
        if self.command == "pipeline-central":
            self.ring = COMM
        if self.ring not in (COMM, FREE):
            raise UsageError("--ring must be comm or free")
        if self.ring == FREE and self.command in ("gb", "check-gb", "pipeline-free") \
                and self.max_degree is None:
            raise UsageError(f"{self.command} over a free algebra needs --max-degree")
        if self.command == "normal-monomials" and self.up_to is None:
            raise UsageError("normal-monomials needs --up-to")
        if self.command in ("pipeline-central", "pipeline-free") and self.homog_var is None:
            self.homog_var = "t" if self.ring == COMM else "T"
        if self.command in ("homogenize", "dehomogenize") and self.homog_var is None:
            self.homog_var = "t" if self.ring == COMM else "T"
        if self.vars is not None and self.var_order is not None \
                and sorted(self.vars) != sorted(self.var_order):
            raise UsageError("--var-order must be a permutation of --vars")
        if self.weights is not None:
            names = self.var_order or self.vars
            if names is None or len(names) != len(self.weights):
                raise UsageError("--weights needs one weight per variable in --vars/--var-order")
        if self.format not in ("text", "json"):
            raise UsageError("--format must be text or json")
        if self.emit_commutators and self.ring != FREE:
            raise UsageError("--emit-commutators applies to --ring free")
        try:
            Field.from_spec(self.field)
        except ValueError as exc:
            raise UsageError(str(exc)) from None

    def base_ring(self, text: str) -> RingDescriptor:
        """The ring without the homogenizing variable."""
        names = self.var_order or self.vars
        weights = self.weights
        if names is None:
            exclude = (self.homog_var,) if self.homog_var else ()
            names = infer_variables(text, exclude=exclude)
        elif self.var_order and self.vars and weights is not None:
            # weights are given against --vars; reorder to precedence
            pos = {v: w for v, w in zip(self.vars, weights)}
            weights = tuple(pos[v] for v in self.var_order)
        return RingDescriptor(self.ring, tuple(names), weights, None, Field.from_spec(self.field))


def _split(text):
    if text is None:
        return None
    return tuple(v.strip() for v in text.split(",") if v.strip())


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="homoggb", description=__doc__.split("\n")[0])
    p.add_argument("command", choices=COMMANDS)
    p.add_argument("input", nargs="?", help="input file (default: stdin)")
    p.add_argument("--ring", choices=(COMM, FREE), default=COMM)
    p.add_argument("--vars", help="comma-separated variable names")
    p.add_argument("--var-order", help="variables from highest to lowest precedence")
    p.add_argument("--weights", help="comma-separated positive weights")
    p.add_argument("--order", default="grlex")
    p.add_argument("--field", default="q", help="q or fp:<prime>")
    p.add_argument("--homog-var", help="homogenizing variable (t or T by default)")
    p.add_argument("--max-degree", type=int)
    p.add_argument("--reduced", action="store_true")
    p.add_argument("--emit-commutators", action="store_true")
    p.add_argument("--up-to", type=int)
    p.add_argument("--format", choices=("text", "json"), default="text")
    return p


def config_from_args(args) -> JobConfig:
    weights = _split(args.weights)
    if weights is not None:
        try:
            weights = tuple(int(w) for w in weights)
        except ValueError:
            raise UsageError("--weights must be integers") from None
    return JobConfig(
        command=args.command,
        ring=args.ring,
        vars=_split(args.vars),
        weights=weights,
        var_order=_split(args.var_order),
        field=args.field,
        homog_var=args.homog_var,
        max_degree=args.max_degree,
        reduced=args.reduced,
        format=args.format,
        emit_commutators=args.emit_commutators,
        up_to=args.up_to,
        order=args.order,
    )


class _Output:
    """Collects text lines and the JSON twin of the same data."""

    def __init__(self, cfg: JobConfig, ring: RingDescriptor):
        self.lines = []
        self.data = {"command": cfg.command, "ring": _ring_json(ring)}

    def polys(self, name, polys, header=True):
        strs = [str(p) for p in polys]
        if header:
            self.lines.append(f"# {name}")
        self.lines.extend(strs)
        self.data[name] = strs

    def flag(self, name, value):
        text = str(value).lower() if isinstance(value, bool) else str(value)
        self.lines.append(f"#{name}: {text}")
        self.data[name.replace("-", "_")] = value

    def render(self, fmt) -> str:
        if fmt == "json":
            return json.dumps(self.data, indent=2, sort_keys=True) + "\n"
        return "\n".join(self.lines) + ("\n" if self.lines else "")


def _ring_json(ring: RingDescriptor) -> dict:
    return {
        "kind": ring.kind,
        "vars": list(ring.variables),
        "weights": list(ring.weights),
        "homog_var": ring.homog_var,
        "field": ring.field.spec(),
    }


def _basis_flags(out: _Output, G):
    if G.truncation_degree is not None:
        out.flag("complete", G.complete)
        out.flag("truncated-at", G.truncation_degree)


def run(cfg: JobConfig, text: str) -> tuple:
    """Execute one job; returns ``(exit_code, stdout_text)``."""
    cfg.validate()
    try:
        base = cfg.base_ring(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    cmd = cfg.command

    if cmd == "homogenize":
        ring, polys = parse_system(text, base)
        h = (NoncentralHomogenizer if base.is_free else CentralHomogenizer)(base, cfg.homog_var)
        out = _Output(cfg, h.extended_ring)
        if cfg.emit_commutators:
            out.polys("homogenized", h.homogenize_set(polys), header=False)
        else:
            out.polys("homogenized", [h.homogenize(f) for f in polys], header=False)
        return 0, out.render(cfg.format)

    if cmd == "dehomogenize":
        ext = base.extend(cfg.homog_var)
        ring, polys = parse_system(text, ext)
        h = (NoncentralHomogenizer if base.is_free else CentralHomogenizer)(base, cfg.homog_var)
        out = _Output(cfg, base)
        out.polys("dehomogenized", [h.dehomogenize(f) for f in polys], header=False)
        return 0, out.render(cfg.format)

    ring = base.extend(cfg.homog_var) if (cfg.homog_var and cmd in ("gb", "check-gb", "normal-monomials")) else base
    ring, polys = parse_system(text, ring)
    out = _Output(cfg, ring)

    if cmd == "gb":
        if ring.is_free:
            G = nc_complete(polys, cfg.max_degree, ring=ring, reduced=cfg.reduced)
        else:
            G = buchberger(polys, ring=ring, reduced=cfg.reduced)
        out.polys("gb", G, header=False)
        _basis_flags(out, G)
        return 0, out.render(cfg.format)

    if cmd == "check-gb":
        if ring.is_free:
            res = is_nc_groebner(polys, cfg.max_degree)
        else:
            res = is_groebner(polys)
        out.flag("groebner", res.ok)
        if not res.ok:
            out.flag("witness-pair", " ".join(str(i) for i in res.pair))
            out.flag("remainder", str(res.remainder))
        return (0 if res.ok else 1), out.render(cfg.format)

    if cmd == "normal-monomials":
        if ring.is_free:
            bound = cfg.max_degree if cfg.max_degree is not None else cfg.up_to
            G = nc_complete(polys, max(bound, max((f.degree() for f in polys), default=1)), ring=ring)
        else:
            G = buchberger(polys, ring=ring)
        ns = normal_monomials(G, cfg.up_to)
        strs = ns.strings()
        for d in range(cfg.up_to + 1):
            out.lines.append(f"{d}: " + ", ".join(strs[d]))
        out.data["normal_monomials"] = {str(d): strs[d] for d in range(cfg.up_to + 1)}
        out.data["counts"] = ns.counts()
        return 0, out.render(cfg.format)

    if cmd == "pipeline-central":
        P = gb_via_central_homogenization(polys, ring=ring, homog_var=cfg.homog_var)
        out.data["ring_extended"] = _ring_json(P.step1.ring)
        out.polys("homogenized", P.homogenized)
        out.polys("step1", P.step1)
        out.polys("step2", P.gb_of_I)
        out.polys("step3", P.gb_of_I_star)
        w = strict_inclusion_witness(P.step1, P.gb_of_I_star)
        out.flag("unit-ideal", P.unit_ideal)
        out.flag("strict-inclusion-witness", str(w) if w is not None else "none")
        return 0, out.render(cfg.format)

    if cmd == "pipeline-free":
        P = gb_via_nc_homogenization(polys, cfg.max_degree, ring=ring, homog_var=cfg.homog_var)
        out.data["ring_extended"] = _ring_json(P.step1.ring)
        out.polys("homogenized", P.homogenized)
        out.polys("step1", P.step1)
        out.polys("step2", P.gb_of_I)
        out.polys("step3", P.gb_of_I_tilde)
        w = strict_inclusion_witness(P.step1, P.gb_of_I_tilde, cfg.max_degree)
        out.flag("unit-ideal", P.unit_ideal)
        out.flag("complete", P.complete)
        out.flag("truncated-at", cfg.max_degree)
        out.flag("trusted-degree", P.gb_of_I.truncation_degree)
        out.flag("strict-inclusion-witness", str(w) if w is not None else "none")
        return 0, out.render(cfg.format)

    raise UsageError(f"unhandled command {cmd}")  # pragma: no cover


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_intermixed_args(argv)
    try:
        cfg = config_from_args(args)
        if args.input:
            with open(args.input) as fh:
                text = fh.read()
        else:
            text = sys.stdin.read()
        code, output = run(cfg, text)
    except (UsageError, PolynomialSyntaxError, OSError) as exc:
        print(f"homoggb: error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"homoggb: error: {exc}", file=sys.stderr)
        return 1
    sys.stdout.write(output)
    return code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
