"""``wedgekit`` command line.

Exit codes: 0 success (empty/none answers included), 1 internal error,
2 bad input or parameters, 3 failed verification.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
import time
from pathlib import Path

from . import constructions as C
from .algorithms import (
    ALL_BOWTIES,
    EMPTY,
    UNCOVERED,
    IntersectionResult,
    SasInstance,
    decide_intersection,
    find_uncovered_slope,
    intersect_bowties,
    intersect_general,
    intersect_parameterized,
    intersect_via_shear,
    solve_sas,
)
from .geometry import contains, unshear_point
from .jsonio import (
    FormatError,
    element_to_json,
    line_to_json,
    point_to_json,
    segment_from_json,
    segment_to_json,
    wedge_to_json,
    wedges_from_instance,
)
from .oracle import oracle_intersect, piercing_with_lines, triple_pierceable_all

EXIT_OK, EXIT_INTERNAL, EXIT_INPUT, EXIT_VERIFY = 0, 1, 2, 3


class InputError(Exception):
    pass


class VerificationFailed(Exception):
    def __init__(self, report: dict):
        super().__init__(report.get("check"))
        self.report = report


# io --------------------------------------------------------------------------

def _load(path) -> dict:
    if path is None:
        raise InputError("--in is required")
    try:
        text = sys.stdin.read() if path == "-" else Path(path).read_text()
        return json.loads(text)
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc


def _emit(obj, out) -> None:
    text = json.dumps(obj, indent=2) + "\n"
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _write_text(text: str, out) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def sas_from_json(obj) -> SasInstance:
    if not isinstance(obj, dict) or not isinstance(obj.get("stab"), list):
        raise FormatError("stabbing instance needs a 'stab' list (and optional 'avoid')")
    return SasInstance(
        [segment_from_json(s) for s in obj["stab"]],
        [segment_from_json(s) for s in obj.get("avoid", [])],
    )


def sas_to_json(inst: SasInstance) -> dict:
    return {
        "stab": [segment_to_json(s) for s in inst.stab],
        "avoid": [segment_to_json(s) for s in inst.avoid],
    }


def parse_numbers(text) -> list:
    if text is None:
        raise InputError("--numbers is required")
    try:
        return [int(t) for t in text.replace(" ", "").split(",") if t]
    except ValueError as exc:
        raise InputError(f"--numbers must be comma-separated integers: {text!r}") from exc


def parse_sizes(text) -> list:
    """``"1k..64k"`` (doubling) or ``"100,200,400"``."""

    def num(t: str) -> int:
        t = t.strip().lower()
        mult = 1
        if t.endswith("k"):
            t, mult = t[:-1], 1000
        return int(float(t) * mult)

    try:
        if ".." in text:
            lo, hi = (num(t) for t in text.split(".."))
            out = []
            while lo <= hi:
                out.append(lo)
                lo *= 2
            return out
        return [num(t) for t in text.split(",") if t.strip()]
    except (ValueError, TypeError) as exc:
        raise InputError(f"bad --sizes {text!r}") from exc


# intersect / decide / stab -------------------------------------------------------

def run_intersect(wedges, algo: str) -> IntersectionResult:
    n = len(wedges)
    hourglasses = sum(1 for d in wedges if d.is_hourglass)
    if algo == "auto":
        verdict = find_uncovered_slope(wedges).verdict
        if verdict in (ALL_BOWTIES, UNCOVERED):
            algo = "bowtie"
        elif hourglasses <= math.isqrt(n):
            algo = "parameterized"
        else:
            algo = "general"
    if algo == "bowtie":
        try:
            result, slope = intersect_via_shear(wedges)
        except ValueError as exc:
            raise InputError(str(exc)) from exc
        if slope is not None:
            result.witnesses = [unshear_point(w, slope) for w in result.witnesses]
            result.convex_regions = None
        return result
    if algo == "general":
        return intersect_general(wedges)
    if algo == "parameterized":
        return intersect_parameterized(wedges)
    if algo == "oracle":
        o = oracle_intersect(wedges)
        return IntersectionResult(o.component_count, o.witnesses, "oracle")
    raise InputError(f"unknown algorithm {algo!r}")


def cmd_intersect(args) -> int:
    wedges = wedges_from_instance(_load(args.input))
    result = run_intersect(wedges, args.algo)
    for w in result.witnesses:
        if not all(contains(d, w) for d in wedges):
            raise AssertionError(f"witness {w} is outside some wedge")
    _emit(result.to_json(), args.out)
    if args.svg:
        from .render import render_svg

        Path(args.svg).write_text(render_svg(wedges))
    return EXIT_OK


def cmd_decide(args) -> int:
    wedges = wedges_from_instance(_load(args.input))
    w = decide_intersection(wedges)
    if w is EMPTY:
        _emit({"status": "empty", "witness": None}, args.out)
    else:
        _emit({"status": "nonempty", "witness": point_to_json(w)}, args.out)
    return EXIT_OK


def cmd_stab(args) -> int:
    """Prints the witness line (or ``none``); ``--out`` also gets a JSON result."""
    inst = sas_from_json(_load(args.input))
    line = solve_sas(inst)
    witness = None if line is None else line_to_json(line)
    print("none" if line is None else json.dumps(witness))
    if args.out:
        _emit({"status": "empty" if line is None else "nonempty", "witness_line": witness}, args.out)
    return EXIT_OK


# generate ----------------------------------------------------------------------

def cmd_generate(args) -> int:
    kind = args.kind
    if kind == "grating":
        if args.k is None or args.k < 1:
            raise InputError("grating needs --k >= 1")
        obj = {"wedges": [wedge_to_json(d) for d in C.make_grating(args.k)]}
    elif kind == "nonagon":
        try:
            fam = C.make_nonagon_family(args.precision)
        except ValueError as exc:
            raise InputError(str(exc)) from exc
        obj = {
            "precision": fam.precision,
            "greens": [element_to_json(e) for e in fam.greens],
            "reds": [element_to_json(e) for e in fam.reds],
            "purples": [element_to_json(e) for e in fam.purples],
        }
    elif kind == "sas-from-3sum":
        u = C.geombase_from_3sum(parse_numbers(args.numbers))
        obj = {"points": [list(p) for p in u.points], **sas_to_json(C.sas_from_geombase(u))}
    elif kind == "random":
        if args.n is None or args.n < 0:
            raise InputError("random needs --n >= 0")
        h = args.hourglasses or 0
        if not 0 <= h <= args.n:
            raise InputError("--hourglasses must lie in [0, n]")
        wedges = C.random_wedges(args.n, h, args.seed)
        obj = {"seed": args.seed, "wedges": [wedge_to_json(d) for d in wedges]}
    else:
        raise InputError(f"unknown generator {kind!r}")
    _emit(obj, args.out)
    return EXIT_OK


# verify ------------------------------------------------------------------------

def _report(check: str, ok: bool, **extra) -> dict:
    rep = {"check": check, "result": "pass" if ok else "fail"}
    rep.update(extra)
    if not ok:
        raise VerificationFailed(rep)
    return rep


def verify_grating(args) -> dict:
    if args.input:
        wedges = wedges_from_instance(_load(args.input))
        k = len(wedges) // 2
    else:
        if args.k is None or args.k < 1:
            raise InputError("verify grating needs --k >= 1 or --in")
        k = args.k
        wedges = C.make_grating(k)
    count = intersect_general(wedges).component_count
    return _report("grating", count == (k + 1) ** 2, k=k, component_count=count, expected=(k + 1) ** 2)


def verify_nonagon(args) -> dict:
    fam = C.make_nonagon_family(args.precision)
    triples, bad = triple_pierceable_all(fam.elements)
    two = piercing_with_lines(fam.elements, 2, prune_set=list(fam.greens))
    three = piercing_with_lines(fam.elements, 3)
    details = {
        "precision": fam.precision,
        "triple_pierceable": triples,
        "two_lines_impossible": not two,
        "three_lines": [line_to_json(l) for l in three] if three else None,
    }
    if bad is not None:
        details["counterexample"] = list(bad)
    if two:
        details["counterexample"] = [line_to_json(l) for l in two]
    return _report("nonagon", triples and not two and bool(three), **details)


def verify_reduction(args) -> dict:
    if args.numbers is not None:
        sets = [parse_numbers(args.numbers)]
    else:
        import random

        rng = random.Random(args.seed)
        sets = [[rng.randint(-20, 20) for _ in range(rng.randint(1, 12))] for _ in range(args.n or 50)]
    for nums in sets:
        u = C.geombase_from_3sum(nums)
        line = solve_sas(C.sas_from_geombase(u))
        expected = C.three_sum(nums)
        if (line is not None) != expected or (line is not None and C.snap_witness(u, line) is None):
            return _report("reduction", False, counterexample=nums)
    return _report("reduction", True, instances=len(sets))


def verify_oracle(args) -> dict:
    if args.input:
        instances = [wedges_from_instance(_load(args.input))]
    else:
        import random

        rng = random.Random(args.seed)
        instances = []
        for i in range(args.n or 20):
            n = rng.randint(1, 12)
            instances.append(C.random_wedges(n, rng.randint(0, n), rng.randrange(2**31), box=6, anchors=rng.randint(0, 3)))
    for wedges in instances:
        g = intersect_general(wedges)
        o = oracle_intersect(wedges)
        if (g.component_count, g.nonempty) != (o.component_count, o.nonempty):
            return _report("oracle", False, counterexample={"wedges": [wedge_to_json(d) for d in wedges]})
    return _report("oracle", True, instances=len(instances))


VERIFIERS = {
    "grating": verify_grating,
    "nonagon": verify_nonagon,
    "reduction": verify_reduction,
    "oracle": verify_oracle,
}


def cmd_verify(args) -> int:
    try:
        rep = VERIFIERS[args.kind](args)
    except VerificationFailed as exc:
        _emit(exc.report, args.out)
        return EXIT_VERIFY
    _emit(rep, args.out)
    return EXIT_OK


# render / bench ------------------------------------------------------------------

def cmd_render(args) -> int:
    from .render import render_svg

    wedges = wedges_from_instance(_load(args.input))
    _write_text(render_svg(wedges, width=args.width, precision=args.svg_precision), args.svg or args.out)
    return EXIT_OK


def bench_instance(algo: str, n: int, seed: int) -> list:
    if algo == "bowtie":
        return C.random_wedges(n, 0, seed, box=1000)
    if algo == "parameterized":
        return C.random_wedges(n, min(n, max(1, math.isqrt(n) // 4)), seed, box=1000)
    return C.random_wedges(n, n // 2, seed, box=1000)


BENCH_ALGOS = {
    "bowtie": intersect_bowties,
    "general": intersect_general,
    "parameterized": intersect_parameterized,
}


def cmd_bench(args) -> int:
    algo = "bowtie" if args.algo == "auto" else args.algo
    if algo not in BENCH_ALGOS:
        raise InputError(f"bench supports {sorted(BENCH_ALGOS)}")
    sizes = parse_sizes(args.sizes or "100..800")
    rows = ["n,algorithm,seconds"]
    for n in sizes:
        wedges = bench_instance(algo, n, args.seed)
        t = time.perf_counter()
        BENCH_ALGOS[algo](wedges)
        rows.append(f"{n},{algo},{time.perf_counter() - t:.6f}")
    _write_text("\n".join(rows) + "\n", args.out)
    return EXIT_OK


# entry point ---------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--in", dest="input", help="input JSON file ('-' for stdin)")
    common.add_argument("--out", help="output file (default: stdout)")
    common.add_argument("--seed", type=int, default=0)

    p = argparse.ArgumentParser(prog="wedgekit", description="Exact double-wedge intersection toolkit.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("intersect", parents=[common], help="common intersection of a wedge family")
    s.add_argument("--algo", default="auto", choices=["auto", "bowtie", "general", "parameterized", "oracle"])
    s.add_argument("--svg", help="also write an SVG picture here")
    s.set_defaults(func=cmd_intersect)

    s = sub.add_parser("decide", parents=[common], help="one witness point or 'empty'")
    s.set_defaults(func=cmd_decide)

    s = sub.add_parser("stab", parents=[common], help="line stabbing and avoiding segments")
    s.set_defaults(func=cmd_stab)

    s = sub.add_parser("generate", parents=[common], help="write a generated instance")
    s.add_argument("kind", choices=["grating", "nonagon", "sas-from-3sum", "random"])
    s.add_argument("--k", type=int)
    s.add_argument("--precision", type=int, default=6)
    s.add_argument("--numbers")
    s.add_argument("--n", type=int)
    s.add_argument("--hourglasses", type=int, default=0)
    s.set_defaults(func=cmd_generate)

    s = sub.add_parser("verify", parents=[common], help="run a verification suite")
    s.add_argument("kind", choices=sorted(VERIFIERS))
    s.add_argument("--k", type=int)
    s.add_argument("--precision", type=int, default=6)
    s.add_argument("--numbers")
    s.add_argument("--n", type=int)
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("render", parents=[common], help="SVG of a wedge family")
    s.add_argument("--svg", help="SVG output path (default: --out or stdout)")
    s.add_argument("--width", type=int, default=600)
    s.add_argument("--svg-precision", type=int, default=3)
    s.set_defaults(func=cmd_render)

    s = sub.add_parser("bench", parents=[common], help="timing CSV over growing sizes")
    s.add_argument("--algo", default="bowtie", choices=["auto", *sorted(BENCH_ALGOS)])
    s.add_argument("--sizes", help="'1k..64k' (doubling) or a comma list")
    s.set_defaults(func=cmd_bench)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        return args.func(args)
    except (InputError, FormatError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except Exception as exc:  # noqa: BLE001 - reported as an internal failure
        print(f"internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
