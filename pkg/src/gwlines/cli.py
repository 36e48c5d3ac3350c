"""Command-line front end.

    gwlines lines  --field F7 --builtin fermat
    gwlines verify --field Q --surface clebsch.json --lines clebsch_lines.json
    gwlines verify --field F5 --random 25 --seed 7
    gwlines ekl    --system system.json
    gwlines emit   surface --builtin clebsch --field Q

Exit codes: 0 success, 1 the count disagrees with 15<1> + 12<-1> (or the
parity is odd), 2 invalid or singular input, 3 incomplete enumeration or
budget exhausted.
"""
from __future__ import annotations

import argparse
import logging
import os
import random
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from .cubiclines.enumerate import enumerate_lines
from .cubiclines.surface import clebsch, fermat, is_smooth, random_smooth_cubic
from .eklindex.local import ekl_form
from .errors import BudgetExceeded, GWLinesError, IncompleteEnumeration, SingularSurface
from .eulernum import known_lines, verify_main_theorem
from .quadforms import gw_to_json
from .serialize import (
    dumps,
    lines_from_json,
    lines_to_json,
    load,
    parse_field,
    surface_from_json,
    surface_to_json,
    system_from_json,
)

EXIT_OK, EXIT_MISMATCH, EXIT_INVALID, EXIT_INCOMPLETE = 0, 1, 2, 3
BUILTINS = {"fermat": fermat, "clebsch": clebsch}


@dataclass
class RunConfig:
    command: str
    field: str | None = None
    surface: str | None = None
    lines: str | None = None
    system: str | None = None
    builtin: str | None = None
    random: int | None = None
    strategy: str = "eliminant"
    a_max: int = 27
    budget: int = 10 ** 9
    seed: int = 0
    out: str | None = None
    what: str = "surface"


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="gwlines",
        description="Quadratically enriched counts of lines on smooth cubic surfaces.",
        formatter_class=argparse.ArgumentDefaultsHelpFormatter,
    )
    ap.add_argument("-v", "--verbose", action="store_true", help="debug logging on stderr")
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p, surface=True):
        p.add_argument("--field", help="Q, F<p>, Fq:<p> or Fq:<p>^<n>")
        p.add_argument("--out", help="write the JSON report here instead of stdout")
        p.add_argument("--seed", type=int, default=0, help="seed for factoring and random surfaces")
        if surface:
            p.add_argument("--surface", help="surface JSON file")
            p.add_argument("--builtin", choices=sorted(BUILTINS), help="use a built-in surface")
            p.add_argument("--strategy", choices=["eliminant", "brute"], default="eliminant")
            p.add_argument("--a-max", dest="a_max", type=int, default=27, help="largest residue degree searched")
            p.add_argument("--budget", type=float, default=1e9, help="evaluation budget for brute force")

    p = sub.add_parser("lines", help="enumerate the lines and their types")
    common(p)
    p = sub.add_parser("verify", help="compare the count with 15<1> + 12<-1>")
    common(p)
    p.add_argument("--lines", help="line list JSON (needed over Q except for built-ins)")
    p.add_argument("--random", type=int, help="verify N seeded random smooth cubics instead")
    p = sub.add_parser("ekl", help="EKL local index of an isolated zero at the origin")
    common(p, surface=False)
    p.add_argument("--system", required=True, help="polynomial system JSON file")
    p = sub.add_parser("emit", help="print a built-in surface or its lines as JSON")
    common(p, surface=False)
    p.add_argument("what", choices=["surface", "lines"])
    p.add_argument("--builtin", choices=sorted(BUILTINS), required=True)
    return ap


def config_from_args(ns) -> RunConfig:
    kw = {k: v for k, v in vars(ns).items() if k in RunConfig.__dataclass_fields__}
    if "budget" in kw:
        kw["budget"] = int(kw["budget"])
    return RunConfig(**kw)


def _field(cfg):
    return parse_field(cfg.field) if cfg.field else None


def _surface(cfg):
    F = _field(cfg)
    if cfg.builtin:
        if F is None:
            raise GWLinesError("--builtin needs --field")
        return BUILTINS[cfg.builtin](F)
    if not cfg.surface:
        raise GWLinesError("give --surface or --builtin")
    return surface_from_json(load(cfg.surface), F)


def _records(cfg, f):
    if not is_smooth(f):
        raise SingularSurface("the surface is singular")
    if cfg.lines:
        return lines_from_json(load(cfg.lines), f)
    if f.field.is_finite:
        return enumerate_lines(f, cfg.strategy, a_max=cfg.a_max, seed=cfg.seed, budget=cfg.budget)
    return known_lines(f)


def cmd_lines(cfg: RunConfig):
    f = _surface(cfg)
    records = _records(cfg, f)
    report = {
        "surface": surface_to_json(f),
        "lines": [r.to_json() for r in records],
        "total_weighted": sum(r.def_degree for r in records),
        "hyperbolic": sum(1 for r in records if r.hyperbolic),
    }
    return report, EXIT_OK


def _verify_one(cfg, f, records=None):
    rep = verify_main_theorem(
        f, cfg.strategy, cfg.seed, lines=records, a_max=cfg.a_max, budget=cfg.budget
    )
    ok = rep.verdict and rep.parity in (0, None)
    return rep, ok


def _threads():
    try:
        return max(1, int(os.environ.get("GWLINES_THREADS", "1")))
    except ValueError:
        return 1


def cmd_verify(cfg: RunConfig):
    if cfg.random:
        F = _field(cfg)
        if F is None:
            raise GWLinesError("--random needs --field")
        rng = random.Random(cfg.seed)
        surfaces = [random_smooth_cubic(F, rng) for _ in range(cfg.random)]
        # surfaces are drawn up front so the result does not depend on the thread count
        with ThreadPoolExecutor(_threads()) as pool:
            results = list(pool.map(lambda f: _verify_one(cfg, f), surfaces))
        n_ok = sum(ok for _, ok in results)
        report = {
            "field": F.desc_json(),
            "count": len(results),
            "verified": n_ok,
            "reports": [rep.to_json() for rep, _ in results],
        }
        return report, EXIT_OK if n_ok == len(results) else EXIT_MISMATCH
    f = _surface(cfg)
    records = lines_from_json(load(cfg.lines), f) if cfg.lines else None
    rep, ok = _verify_one(cfg, f, records)
    return rep.to_json(), EXIT_OK if ok else EXIT_MISMATCH


def cmd_ekl(cfg: RunConfig):
    sysm = system_from_json(load(cfg.system), _field(cfg))
    form = ekl_form(sysm)
    F = sysm.field
    A = form.algebra
    report = {
        "dim": form.dim,
        "basis": [list(m) for m in A.basis],
        "socle": [F.to_json(c) for c in form.socle],
        "eta": [F.to_json(c) for c in form.eta],
        "class": gw_to_json(form.cls),
    }
    return report, EXIT_OK


def cmd_emit(cfg: RunConfig):
    f = _surface(cfg)
    if cfg.what == "surface":
        return surface_to_json(f), EXIT_OK
    return lines_to_json(_records(cfg, f)), EXIT_OK


COMMANDS = {"lines": cmd_lines, "verify": cmd_verify, "ekl": cmd_ekl, "emit": cmd_emit}


def _emit(cfg, obj):
    text = dumps(obj) + "\n"
    if cfg.out:
        with open(cfg.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def run(cfg: RunConfig) -> int:
    try:
        report, code = COMMANDS[cfg.command](cfg)
    except (IncompleteEnumeration, BudgetExceeded) as exc:
        found = exc.found or []
        _emit(cfg, {
            "error": exc.code,
            "message": str(exc),
            "complete_degree": exc.complete_degree,
            "lines": [r.to_json() for r in found],
            "total_weighted": sum(r.def_degree for r in found),
        })
        return EXIT_INCOMPLETE
    except (GWLinesError, ValueError, KeyError, OSError) as exc:
        code = getattr(exc, "code", type(exc).__name__)
        print(f"gwlines: {code}: {exc}", file=sys.stderr)
        return EXIT_INVALID
    _emit(cfg, report)
    return code


def main(argv=None) -> int:
    ns = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if ns.verbose else logging.WARNING, format="%(name)s: %(message)s")
    return run(config_from_args(ns))


if __name__ == "__main__":
    sys.exit(main())
