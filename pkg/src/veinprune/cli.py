"""Command line front end.

Exit codes: 0 success, 1 property violation (a structural fact failed on
some input, which should never happen), 2 input error. Diagnostics go to
the error stream; document output goes to standard output so it can be
piped back into other commands.
"""

from __future__ import annotations

import argparse
import os
import sys

from . import families, formats, pruning, suite, veins
from .errors import InternalOrderViolation, InvalidSpec, VeinpruneError
from .irreducibles import preservation_report, profiles
from .poset import Poset


def _load(path: str) -> formats.PosetDocument:
    if path == "-":
        text = sys.stdin.read()
    else:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    return formats.load_document(text)


def _env_seed() -> int:
    raw = os.environ.get("VEINPRUNE_SEED")
    if raw is None:
        return 42
    try:
        return int(raw)
    except ValueError:
        raise InvalidSpec(
            f"VEINPRUNE_SEED must be an integer, got {raw!r}") from None


def _yn(flag: bool) -> str:
    return "yes" if flag else "no"


def _count_maximal_chains(p: Poset) -> int:
    # paths from minimal to maximal elements, counted without enumeration
    total: dict[str, int] = {}
    for x in sorted(p.labels, key=lambda lab: len(p.strict_upset(lab))):
        ups = p.upper_covers(x)
        total[x] = sum(total[u] for u in ups) if ups else 1
    return sum(total[x] for x in p.minimal_elements())


# ----------------------------------------------------------------------
# subcommands


def _cmd_info(args: argparse.Namespace) -> int:
    doc = _load(args.file)
    p = doc.to_poset()
    if doc.name:
        print(f"name: {doc.name}")
    print(f"elements: {len(p)}")
    print(f"cover pairs: {len(p.covers)}")
    print(f"strict relations: {len(p.relations())}")
    print(f"minimal elements: {' '.join(p.minimal_elements())}")
    print(f"maximal elements: {' '.join(p.maximal_elements())}")
    print(f"height: {max(p.heights().values())}")
    chains = _count_maximal_chains(p)
    print(f"maximal chains: {chains}")
    if chains <= 20:
        for chain in p.maximal_chains():
            print("  " + " ".join(chain))
    print(f"conditionally complete: {_yn(p.is_conditionally_complete())}")
    return 0


def _cmd_veins(args: argparse.Namespace) -> int:
    p = _load(args.file).to_poset()
    strict = veins.strict_veins(p, mode=args.mode)
    if strict:
        print(f"strict veins ({len(strict)}):")
        for v in strict:
            print("  " + " ".join(v))
    else:
        print("strict veins: none")
    maximal = veins.maximal_veins(p)
    print(f"maximal veins ({len(maximal)}):")
    for v in maximal:
        print("  " + " ".join(v))
    return 0


def _cmd_prune(args: argparse.Namespace) -> int:
    doc = _load(args.file)
    rep = pruning.prune(doc.to_poset(), mode=args.mode)
    out_doc = formats.PosetDocument.from_poset(rep.pruned, name=doc.name)
    if args.format == "text":
        payload = formats.emit_text(out_doc)
    elif args.format == "json":
        payload = formats.emit_json(out_doc)
    else:
        payload = formats.emit_dot(rep.pruned)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(payload)
    else:
        sys.stdout.write(payload)
    return 0


def _cmd_iterate(args: argparse.Namespace) -> int:
    if args.max < 1:
        raise InvalidSpec(f"--max must be at least 1, got {args.max}")
    p = _load(args.file).to_poset()
    run = pruning.iterate_prune(p, max_iters=args.max, mode=args.mode)
    if run.fixpoint_index is None:
        print(f"error: no fixpoint within {args.max} iterations",
              file=sys.stderr)
        return 1
    idx = run.fixpoint_index
    print(f"fixpoint after {idx} iteration{'s' if idx != 1 else ''}")
    return 0


def _cmd_irr(args: argparse.Namespace) -> int:
    p = _load(args.file).to_poset()
    prof = profiles(p)
    width = max(len("element"), max(len(x) for x in p.labels))
    print(f"{'element':<{width}}  irreducible  coirreducible  doubly")
    for x in p.labels:
        entry = prof[x]
        print(f"{x:<{width}}  {_yn(entry.irreducible):<11}  "
              f"{_yn(entry.coirreducible):<13}  {_yn(entry.doubly)}")
    if not p.is_conditionally_complete():
        print("conditionally complete: no (preservation not evaluated)")
        return 0
    rep = preservation_report(p)
    if rep.preserved:
        print("preserved under pruning: yes")
        return 0
    print("error: irreducibility was not preserved under pruning",
          file=sys.stderr)
    return 1


def _cmd_check(args: argparse.Namespace) -> int:
    seed = args.seed if args.seed is not None else _env_seed()
    result = suite.run_suite(seed=seed, count=args.count,
                             max_size=args.max_size)
    for out in result.outcomes:
        if out.ok:
            print(f"ok   {out.name} ({out.checked} checked)")
        else:
            print(f"FAIL {out.name} ({out.checked} checked, "
                  f"{len(out.violations)} violations)")
    if result.ok:
        print(f"{len(result.outcomes)} checks passed (seed {seed})")
        return 0
    for out in result.outcomes:
        if out.ok:
            continue
        worst = out.smallest()
        print(f"\n{out.name}: {worst.detail}", file=sys.stderr)
        print("counterexample:", file=sys.stderr)
        sys.stderr.write(worst.poset)
    return 1


def _cmd_gen(args: argparse.Namespace) -> int:
    kind = args.kind
    if kind in families.FIXTURE_NAMES:
        spec = families.GenSpec(kind="named", name=kind)
    elif kind == "random":
        prob = 0.3 if args.edge_prob is None else args.edge_prob
        spec = families.GenSpec(kind="random", size=args.size,
                                seed=args.seed, edge_prob=prob)
    else:
        if args.edge_prob is not None:
            raise InvalidSpec("--edge-prob only applies to kind 'random'")
        spec = families.GenSpec(kind=kind, size=args.size, seed=args.seed)
    poset = families.generate(spec)
    name = kind if kind in families.FIXTURE_NAMES else None
    doc = formats.PosetDocument.from_poset(poset, name=name)
    sys.stdout.write(formats.emit_text(doc))
    return 0


def _cmd_dot(args: argparse.Namespace) -> int:
    p = _load(args.file).to_poset()
    sys.stdout.write(formats.emit_dot(p))
    return 0


# ----------------------------------------------------------------------
# wiring


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="veinprune",
        description="Vein detection, pruning, and irreducible-element "
                    "analysis for finite posets.")
    sub = parser.add_subparsers(dest="command", metavar="COMMAND",
                                required=True)

    def command(name: str, func, help_: str, file_arg: bool = True):
        sp = sub.add_parser(name, help=help_)
        if file_arg:
            sp.add_argument("file", metavar="FILE",
                            help="poset file, text or JSON; '-' reads "
                                 "standard input")
        sp.set_defaults(func=func)
        return sp

    def mode_flag(sp) -> None:
        sp.add_argument("--mode", choices=("fast", "oracle"), default="fast",
                        help="fast cover-graph route or definition-level "
                             "oracle (default: fast)")

    command("info", _cmd_info, "element and chain counts, completeness")

    sp = command("veins", _cmd_veins, "list strict and maximal veins")
    mode_flag(sp)

    sp = command("prune", _cmd_prune, "prune the poset once")
    mode_flag(sp)
    sp.add_argument("--out", metavar="FILE",
                    help="write the result here instead of standard output")
    sp.add_argument("--format", choices=("text", "json", "dot"),
                    default="text", help="output format (default: text)")

    sp = command("iterate", _cmd_iterate, "prune to a fixpoint")
    mode_flag(sp)
    sp.add_argument("--max", type=int, default=4, metavar="N",
                    help="iteration cap (default: 4)")

    command("irr", _cmd_irr, "irreducibility profiles and preservation")

    sp = command("check", _cmd_check, "run the property suite on a "
                                      "seeded corpus", file_arg=False)
    sp.add_argument("--seed", type=int, default=None, metavar="S",
                    help="corpus seed (default: VEINPRUNE_SEED or 42)")
    sp.add_argument("--count", type=int, default=100, metavar="N",
                    help="number of random posets (default: 100)")
    sp.add_argument("--max-size", type=int, default=10, metavar="K",
                    help="largest random poset (default: 10)")

    sp = command("gen", _cmd_gen, "emit a generated poset", file_arg=False)
    sp.add_argument("kind", metavar="KIND",
                    choices=families.KINDS[:4] + ("random", "downset_lattice")
                    + families.FIXTURE_NAMES,
                    help="chain, antichain, boolean, fence, random, "
                         "downset_lattice, or a fixture name "
                         "(C3, Yp, Vee, B3, A2)")
    sp.add_argument("--size", type=int, default=1, metavar="N",
                    help="element count or base size (default: 1)")
    sp.add_argument("--seed", type=int, default=0, metavar="S",
                    help="generator seed (default: 0)")
    sp.add_argument("--edge-prob", type=float, default=None, metavar="P",
                    help="edge probability for kind 'random' (default: 0.3)")

    command("dot", _cmd_dot, "emit a DOT drawing of the cover relation")

    return parser


def cli(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        if isinstance(exc.code, int):
            return exc.code
        return 0 if exc.code is None else 2
    try:
        return args.func(args)
    except InternalOrderViolation as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (VeinpruneError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> int:
    return cli(sys.argv[1:])


if __name__ == "__main__":
    sys.exit(main())
