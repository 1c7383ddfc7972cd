"""Command line entry point: ``linres3 <command> [options]``.

Every command writes JSON to stdout (``render`` writes DOT or SVG);
diagnostics go to stderr.  Exit codes: 0 success, 1 a predicate came out
false (only with ``--strict``; ``sweep`` always exits 1 on mismatches),
2 usage or input error.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
import warnings

from .betti import betti_tables, socle_degrees_from_table
from .criterion import BadConfigWitness, has_linear_resolution_criterion, socle_monomials
from .dualgraph import is_linearly_presented
from .harness import reisner_demo, run_sweep
from .monomials import format_monomial, power
from .quotients import NotLinearlyPresentedError, TreeOrderError, colon_generators, tree_order
from .textio import ParseError, format_ideal, parse_ideal, render_dual_graph


def _read_ideal(source: str):
    if source is None:
        raise ParseError("--ideal is required")
    text = source
    if os.path.isfile(source):
        with open(source) as fh:
            text = fh.read()
    return parse_ideal(text)


def _gens(ideal) -> list:
    return [format_monomial(g) for g in ideal.generators]


def witness_to_json(ideal, verdict) -> dict | None:
    if verdict.ok:
        return None
    if isinstance(verdict.witness, BadConfigWitness):
        w = verdict.witness
        return {
            "kind": "bad_configuration",
            "inducer": format_monomial(w.inducer),
            "shadow": sorted(format_monomial(m) for m in w.shadow),
            "hits": {"x": format_monomial(w.hit_x), "y": format_monomial(w.hit_y),
                     "z": format_monomial(w.hit_z)},
        }
    f, g = verdict.witness
    return {"kind": "disconnected_pair", "pair": [format_monomial(ideal.generators[f]),
                                                  format_monomial(ideal.generators[g])]}


def cmd_check(args):
    ideal = _read_ideal(args.ideal)
    presented = is_linearly_presented(ideal)
    verdict = has_linear_resolution_criterion(ideal)
    out = {
        "ideal": _gens(ideal),
        "degree": ideal.degree,
        "linearly_presented": presented.ok,
        "linear_resolution": verdict.ok,
        "witness": witness_to_json(ideal, verdict),
    }
    if args.pretty:
        text = f"{format_ideal(ideal)}: linear resolution {'yes' if verdict.ok else 'no'}"
        if out["witness"]:
            text += f" ({json.dumps(out['witness'])})"
        return text, verdict.ok
    return out, verdict.ok


def cmd_betti(args):
    ideal = _read_ideal(args.ideal)
    tables = betti_tables(ideal, args.char or [0])
    if args.pretty:
        lines = []
        for t in tables:
            lines.append(f"characteristic {t.characteristic}: reg {t.regularity()}, pd {t.projective_dimension()}")
            for (i, j), r in t.graded().items():
                lines.append(f"  beta_{i},{j} = {r}")
        return "\n".join(lines), True
    return {"ideal": _gens(ideal), "tables": [t.to_json() for t in tables]}, True


def cmd_order(args):
    ideal = _read_ideal(args.ideal)
    try:
        tree = tree_order(ideal)
    except (NotLinearlyPresentedError, TreeOrderError) as exc:
        return {"ideal": _gens(ideal), "error": str(exc), "linear_quotients": False}, False
    gens = tree.monomials
    steps = []
    ok = True
    for i, m in enumerate(gens):
        colon = colon_generators(gens[:i], m)
        linear = all(q.degree == 1 for q in colon)
        ok = ok and linear
        steps.append({"position": i + 1, "generator": format_monomial(m),
                      "colon": [format_monomial(q) for q in colon], "linear": linear})
    out = {
        "ideal": _gens(ideal),
        "order": [format_monomial(m) for m in gens],
        "levels": [[format_monomial(ideal.generators[i]) for i in lev] for lev in tree.levels],
        "steps": steps,
        "linear_quotients": ok,
    }
    if args.pretty:
        return ", ".join(out["order"]) + f"\nlinear quotients: {'yes' if ok else 'no'}", ok
    return out, ok


def cmd_socle(args):
    ideal = _read_ideal(args.ideal)
    socle = socle_monomials(ideal)
    table = betti_tables(ideal, [args.char[0] if args.char else 0])[0]
    out = {
        "ideal": _gens(ideal),
        "socle": [format_monomial(m) for m in socle],
        "degrees": sorted(m.degree for m in socle),
        "back_twist_degrees": socle_degrees_from_table(table),
    }
    if args.pretty:
        return "socle: " + (", ".join(out["socle"]) or "(none)"), True
    return out, True


def cmd_power(args):
    ideal = _read_ideal(args.ideal)
    k = args.powers or 2
    p = power(ideal, k)
    if args.pretty:
        return format_ideal(p), True
    return {"ideal": _gens(ideal), "power": k, "generators": _gens(p)}, True


def cmd_render(args):
    ideal = _read_ideal(args.ideal)
    fmt = args.format or "svg"
    if fmt == "json":
        raise ParseError("render supports --format dot or svg")
    return render_dual_graph(ideal, fmt), True


def cmd_sweep(args):
    if args.degree is None:
        raise ParseError("sweep needs --degree")
    report = run_sweep(
        args.degree,
        mode=args.mode,
        powers_up_to=2 if args.powers is None else args.powers,
        characteristics=args.char or [0],
        search_quotients=not args.no_search,
        samples=args.samples,
        seed=args.seed,
        threads=args.threads,
        allow_large=args.allow_large,
    )
    print(f"sweep d={args.degree}: {report.population} ideals, "
          f"{len(report.mismatches)} mismatches, {report.elapsed_seconds:.1f}s", file=sys.stderr)
    if args.pretty:
        return (f"d={report.degree} population={report.population} "
                f"mismatches={len(report.mismatches)} counts={report.counts}"), report.ok
    return report.to_json(), report.ok


def cmd_reisner(args):
    out = reisner_demo(args.char or [0, 2, 3])
    if args.pretty:
        return "\n".join(f"char {c}: reg {v['regularity']}" for c, v in out["characteristics"].items()), True
    return out, True


COMMANDS = {
    "check": cmd_check,
    "betti": cmd_betti,
    "order": cmd_order,
    "socle": cmd_socle,
    "power": cmd_power,
    "render": cmd_render,
    "sweep": cmd_sweep,
    "reisner": cmd_reisner,
}
PREDICATES = {"check", "order"}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="linres3", description=__doc__.splitlines()[0])
    parser.add_argument("command", choices=sorted(COMMANDS))
    parser.add_argument("--ideal", help="generator list, or a file containing one")
    parser.add_argument("--char", type=int, action="append", help="field characteristic (repeatable)")
    parser.add_argument("--powers", type=int, help="power exponent / highest power checked in sweeps")
    parser.add_argument("--degree", type=int)
    parser.add_argument("--mode", choices=("exhaustive", "sample"), default="exhaustive")
    parser.add_argument("--samples", type=int, default=1000)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--format", choices=("dot", "svg", "json"))
    parser.add_argument("--threads", type=int, default=1)
    parser.add_argument("--pretty", action="store_true", help="human-readable summary instead of JSON")
    parser.add_argument("--strict", action="store_true", help="exit 1 when a predicate is false")
    parser.add_argument("--no-search", action="store_true", help="skip the exact linear-quotient search in sweeps")
    parser.add_argument("--allow-large", action="store_true", help="permit exhaustive sweeps beyond d = 4")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    with warnings.catch_warnings():
        warnings.simplefilter("always")
        warnings.showwarning = lambda msg, *a, **k: print(f"warning: {msg}", file=sys.stderr)
        try:
            result, ok = COMMANDS[args.command](args)
        except (ParseError, ValueError) as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 2
    if isinstance(result, str):
        sys.stdout.write(result if result.endswith("\n") else result + "\n")
    else:
        json.dump(result, sys.stdout, indent=2)
        sys.stdout.write("\n")
    if args.command == "sweep" and not ok:
        return 1
    if args.strict and args.command in PREDICATES and not ok:
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
