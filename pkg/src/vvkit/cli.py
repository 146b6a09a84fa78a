"""Command-line interface: one verb per notion, JSON reports on stdout.

Exit codes: 0 = success or claim holds, 1 = a well-formed negative
(torsion found, claim fails, power not contained), 2 = usage or
computation error.  Reports are serialized with sorted keys so equal
inputs give byte-identical output.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor

from .claims import ALIASES, REGISTRY, run_claim, run_conj
from .geometry import (PointConfiguration, classify_config, ideal_of_points,
                       jacobian_of_points, sample_config)
from .hilbert import hilbert_function, hilbert_series
from .ideals import Ideal, minimal_generators_mod
from .poly import (DEGREVLEX, LEX, ParseError, PolyRing, RingMismatchError,
                   elimination_order)
from .vava import relation_type, mpower_in_ideal, vv_torsion_free


class UsageError(ValueError):
    pass


def _emit(report: dict) -> None:
    sys.stdout.write(json.dumps(report, indent=2, sort_keys=True) + "\n")


def _load_json(path: str) -> dict:
    with open(path, "r", encoding="utf-8") as fh:
        return json.load(fh)


def _load_points(path: str) -> PointConfiguration:
    data = _load_json(path)
    if "points" not in data:
        raise UsageError(f"{path}: not a points file")
    return PointConfiguration.from_json(data)


def ideal_to_json(I: Ideal) -> dict:
    return {"ring": {"vars": list(I.ring.variables)},
            "gens": [str(g) for g in I.generators]}


def ideal_from_json(data: dict) -> Ideal:
    try:
        ring = PolyRing(tuple(data["ring"]["vars"]))
        gens = [ring.parse(text) for text in data["gens"]]
    except (KeyError, TypeError) as exc:
        raise UsageError(f"malformed ideal JSON: {exc}") from None
    return Ideal(ring, gens)


def _load_ideal(path: str) -> Ideal:
    return ideal_from_json(_load_json(path))


def _parse_order(text: str, arity: int):
    if text == "degrevlex":
        return DEGREVLEX
    if text == "lex":
        return LEX
    if text.startswith("elim:"):
        k = int(text.split(":", 1)[1])
        if not 1 <= k < arity:
            raise UsageError("elimination block must be between 1 and arity-1")
        return elimination_order(k)
    raise UsageError(f"unknown order {text!r}")


def _points_pair(path: str):
    cfg = _load_points(path)
    jd = jacobian_of_points(cfg)
    return cfg, jd


# -- subcommand handlers ------------------------------------------------------

def cmd_points_ideal(args) -> int:
    cfg = _load_points(args.points)
    ideal = ideal_of_points(cfg)
    _emit({"command": "points-ideal", "s": cfg.s, "ideal": ideal_to_json(ideal)})
    return 0


def cmd_gb(args) -> int:
    ideal = _load_ideal(args.ideal)
    order = _parse_order(args.order, ideal.ring.arity)
    gb = ideal.groebner_basis(order)
    _emit({"command": "gb", "order": str(order),
           "basis": [str(g) for g in gb.elements]})
    return 0


def cmd_hilbert(args) -> int:
    ideal = _load_ideal(args.ideal)
    hs = hilbert_series(ideal)
    values = [hilbert_function(ideal, d) for d in range(hs.degree() + 3)]
    _emit({"command": "hilbert", "series": hs.to_json(),
           "function": values, "display": str(hs)})
    return 0


def cmd_classify(args) -> int:
    cfg = _load_points(args.points)
    _emit({"command": "classify", **classify_config(cfg).to_json()})
    return 0


def cmd_sample(args) -> int:
    cfg = sample_config(args.cls, args.seed)
    _emit({"command": "sample", "class": args.cls, "seed": args.seed,
           **cfg.to_json()})
    return 0


def cmd_jacobian(args) -> int:
    cfg, jd = _points_pair(args.points)
    _emit({"command": "jacobian",
           "base_ideal": ideal_to_json(jd.base_ideal),
           "theta": [[str(e) for e in row] for row in jd.theta],
           "minor_ideal": ideal_to_json(jd.minor_ideal),
           "jacobian_ideal": ideal_to_json(jd.jacobian_ideal)})
    return 0


def cmd_vv_check(args) -> int:
    cfg, jd = _points_pair(args.points)
    tmax = None if args.tmax == "auto" else int(args.tmax)
    report = vv_torsion_free(jd.base_ideal, jd.jacobian_ideal, cfg.s,
                             tmax=tmax, prefilter=args.prefilter)
    _emit({"command": "vv-check", "s": cfg.s,
           "classification": classify_config(cfg).to_json(),
           **report.to_json()})
    return 0 if report.torsion_free else 1


def cmd_relation_type(args) -> int:
    cfg, jd = _points_pair(args.points)
    bound = args.bound if args.bound is not None else cfg.s
    rees = relation_type(jd.base_ideal, jd.jacobian_ideal, bound)
    _emit({"command": "relation-type", "bound": bound, **rees.to_json()})
    return 0


def cmd_mpower(args) -> int:
    ideal = _load_ideal(args.ideal)
    contained = mpower_in_ideal(ideal, args.e)
    _emit({"command": "mpower", "e": args.e, "contained": contained})
    return 0 if contained else 1


def cmd_repro(args) -> int:
    if args.id == "all":
        ids = sorted(cid for cid, spec in REGISTRY.items()
                     if args.slow or not spec.slow)
        threads = max(1, int(os.environ.get("VVKIT_THREADS", "1")))
        if threads > 1:
            with ThreadPoolExecutor(max_workers=threads) as pool:
                results = list(pool.map(run_claim, ids))
        else:
            results = [run_claim(cid) for cid in ids]
        results.sort(key=lambda r: r.claim)
        _emit({"command": "repro", "results": [r.to_json() for r in results]})
        return 0 if all(r.status in ("pass", "indeterminate") for r in results) else 1
    cid = ALIASES.get(args.id, args.id)
    if cid not in REGISTRY:
        raise UsageError(f"unknown claim id {args.id!r}")
    spec = REGISTRY[cid]
    if spec.slow and not args.slow:
        raise UsageError(f"claim {cid} is long-running; pass --slow to confirm")
    result = spec.runner()
    _emit(result.to_json())
    return {"pass": 0, "indeterminate": 0}.get(result.status, 1)


def cmd_conjecture(args) -> int:
    result = run_conj(args.d, args.seed, args.trials)
    _emit(result.to_json())
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="vvkit",
        description="Exact checks of torsion in the Valabrega-Valla module "
                    "of Jacobian ideals of plane point configurations.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("points-ideal", help="defining ideal of a point set")
    p.add_argument("points")
    p.set_defaults(func=cmd_points_ideal)

    p = sub.add_parser("gb", help="reduced Groebner basis of an ideal file")
    p.add_argument("ideal")
    p.add_argument("--order", default="degrevlex",
                   help="degrevlex | lex | elim:K")
    p.set_defaults(func=cmd_gb)

    p = sub.add_parser("hilbert", help="Hilbert series and function of R/I")
    p.add_argument("ideal")
    p.set_defaults(func=cmd_hilbert)

    p = sub.add_parser("classify", help="collinearity profile and taxonomy label")
    p.add_argument("points")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("sample", help="deterministic configuration sampler")
    p.add_argument("--class", dest="cls", required=True)
    p.add_argument("--seed", type=int, required=True)
    p.set_defaults(func=cmd_sample)

    p = sub.add_parser("jacobian", help="Jacobian matrix, minors, Jacobian ideal")
    p.add_argument("points")
    p.set_defaults(func=cmd_jacobian)

    p = sub.add_parser("vv-check", help="torsion-freeness verdict for a point set")
    p.add_argument("points")
    p.add_argument("--tmax", default="auto")
    p.add_argument("--prefilter", action="store_true",
                   help="log GF(p) predictions before the exact checks")
    p.set_defaults(func=cmd_vv_check)

    p = sub.add_parser("relation-type", help="Rees relation type of I/J")
    p.add_argument("points")
    p.add_argument("--bound", type=int, default=None)
    p.set_defaults(func=cmd_relation_type)

    p = sub.add_parser("mpower", help="is every degree-e monomial in the ideal?")
    p.add_argument("ideal")
    p.add_argument("--e", type=int, required=True)
    p.set_defaults(func=cmd_mpower)

    p = sub.add_parser("repro", help="run a registered claim (or 'all')")
    p.add_argument("id")
    p.add_argument("--slow", action="store_true")
    p.set_defaults(func=cmd_repro)

    p = sub.add_parser("conjecture", help="m^(2d-2) containment experiments")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--trials", type=int, default=3)
    p.set_defaults(func=cmd_conjecture)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    try:
        return args.func(args)
    except (UsageError, ParseError, RingMismatchError, FileNotFoundError,
            json.JSONDecodeError, KeyError, ValueError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
