"""Command-line surface: generate, verify and render trees; run growth
experiments; emit machine-readable results.

All numeric output is decimal strings (tree values outgrow 64 bits very
quickly).  Identical invocations produce byte-identical output; exit
code 0 means every exact check in scope passed.
"""

from __future__ import annotations

import argparse
import sys

from . import render
from .errors import TopographError
from .euclid import (
    PathSpec,
    lyapunov_estimate,
    lyapunov_exact_periodic,
    relative_shadow_growth,
    river_growth_exponent,
    topograph_growth_exponent,
)
from .forms import QuadForm, enumerate_topograph, find_river, region_vectors
from .markov import fibonacci_branch_shadow, markov_tree, shadow_markov_tree
from .mordell import (
    PellContext,
    mordell_tree,
    pell_fundamental,
    shadow_mordell_tree,
    special_orbit_shadow_tree,
)
from .trees import DEFAULT_DEPTH_LIMIT
from .verify import verify_suite

TREE_FORMATS = ("json", "csv", "dot", "svg")


def _parse_form(text: str) -> QuadForm:
    parts = text.split(",")
    if len(parts) != 3:
        raise argparse.ArgumentTypeError("form needs three integers a,h,b")
    try:
        a, h, b = (int(p) for p in parts)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad form coefficients: {exc}") from None
    return QuadForm(a, h, b)


def _parse_cf_text(text: str) -> PathSpec:
    """Quotients like '1,1,1', with a trailing period '1,(2,2)', or with a
    trailing '...' meaning the last quotient repeats forever."""
    text = text.strip()
    period: list[int] = []
    if text.endswith("..."):
        head = text[:-3].rstrip(", ")
        parts = [int(p) for p in head.split(",") if p]
        if not parts:
            raise argparse.ArgumentTypeError("'...' needs at least one quotient")
        return PathSpec.from_cf(parts, [parts[-1]])
    if "(" in text:
        head, _, tail = text.partition("(")
        if not tail.endswith(")"):
            raise argparse.ArgumentTypeError("unterminated period: use e.g. '1,(2)'")
        period = [int(p) for p in tail[:-1].split(",") if p]
        text = head.rstrip(", ")
    quotients = [int(p) for p in text.split(",") if p] if text else []
    try:
        return PathSpec.from_cf(quotients, period)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _parse_path(text: str) -> PathSpec | str:
    """Path argument: 'golden', 'sqrt:D', 'cf:...', 'river', or an L/R word."""
    if text == "golden":
        return PathSpec.golden()
    if text == "river":
        return "river"
    if text.startswith("sqrt:"):
        return PathSpec.sqrt(int(text.split(":", 1)[1]))
    if text.startswith("cf:"):
        return _parse_cf_text(text.split(":", 1)[1])
    try:
        return PathSpec.from_word(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _triple_strs(node) -> list[str]:
    return [str(v) for v in node]


def _labels(tree_values: dict[str, list[str]], labels: str) -> dict[str, str]:
    out = {}
    for word, values in tree_values.items():
        value_label = ",".join(values)
        if labels == "values":
            out[word] = value_label
            continue
        farey = "|".join(r.farey() for r in region_vectors(word))
        out[word] = farey if labels == "farey" else f"{value_label} @ {farey}"
    return out


def _emit_tree(args, tree_values: dict[str, list[str]], header: dict) -> int:
    fmt = args.format
    if fmt == "json":
        nodes = []
        for word, values in tree_values.items():
            regions = region_vectors(word)
            nodes.append({
                "word": word,
                "triple": values,
                "vectors": [list(r.as_tuple()) for r in regions],
                "farey": [r.farey() for r in regions],
            })
        sys.stdout.write(render.json_text({**header, "nodes": nodes}))
    elif fmt == "csv":
        rows = [(word, *values) for word, values in tree_values.items()]
        sys.stdout.write(render.csv_text(rows, header=("word", "x", "y", "z")))
    elif fmt == "dot":
        sys.stdout.write(render.dot_tree(_labels(tree_values, args.labels)))
    else:
        sys.stdout.write(render.svg_tree(_labels(tree_values, args.labels)))
    return 0


def _river_payload(q: QuadForm) -> dict:
    river = find_river(q)

    def edge(e):
        return {
            "left": list(e.left.as_tuple()),
            "right": list(e.right.as_tuple()),
            "left_value": str(e.left_value),
            "right_value": str(e.right_value),
            "ahead_value": str(e.ahead_value),
        }

    return {
        "form": {"a": str(q.a), "h": str(q.h), "b": str(q.b)},
        "discriminant": str(q.discriminant),
        "period": river.period,
        "period_length": len(river.period),
        "start": edge(river.start),
        "states": [edge(e) for e in river.states],
    }


def cmd_topograph(args) -> int:
    if args.river:
        sys.stdout.write(render.json_text(_river_payload(args.form)))
        return 0
    tree = enumerate_topograph(args.form, args.depth, args.limit)
    failures = sum(
        1 for node in tree.values()
        for i in range(3)
        if args.form(*node.regions[i].as_tuple()) != node.triple.as_tuple()[i])
    header = {
        "command": "topograph",
        "form": {"a": str(args.form.a), "h": str(args.form.h), "b": str(args.form.b)},
        "discriminant": str(args.form.discriminant),
        "depth": args.depth,
        "checks": {"ap_consistency_failures": failures, "nodes": len(tree)},
    }
    values = {w: [str(v) for v in n.triple.as_tuple()] for w, n in tree.items()}
    status = _emit_tree(args, values, header)
    if failures:
        print(f"ap consistency failed on {failures} entries", file=sys.stderr)
        return 1
    return status


def cmd_river(args) -> int:
    sys.stdout.write(render.json_text(_river_payload(args.form)))
    return 0


def cmd_markov(args) -> int:
    tree = markov_tree(args.depth, args.limit)
    header = {"command": "markov", "depth": args.depth}
    return _emit_tree(args, {w: [str(v) for v in t.as_tuple()] for w, t in tree.items()}, header)


def cmd_shadow_markov(args) -> int:
    tree = shadow_markov_tree(args.depth, args.limit)
    header = {"command": "shadow-markov", "depth": args.depth}
    if args.format == "json":
        nodes = [{"word": w,
                  "triple": [str(v) for v in t.as_tuple()],
                  "duals": [v.json_dict() for v in t.as_tuple()]}
                 for w, t in tree.items()]
        sys.stdout.write(render.json_text({**header, "nodes": nodes}))
        return 0
    return _emit_tree(args, {w: [str(v) for v in t.as_tuple()] for w, t in tree.items()}, header)


def cmd_pell(args) -> int:
    sol = pell_fundamental(args.d)
    payload = {
        "command": "pell",
        "d": str(sol.d),
        "p": str(sol.p),
        "q": str(sol.q),
        "check": str(sol.p**2 - sol.d * sol.q**2),
    }
    if args.format == "csv":
        sys.stdout.write(render.csv_text([(sol.d, sol.p, sol.q)], header=("d", "p", "q")))
    else:
        sys.stdout.write(render.json_text(payload))
    return 0


def cmd_mordell(args) -> int:
    ctx = PellContext.for_d(args.d, args.m)
    tree = mordell_tree(ctx, args.depth, args.limit)
    header = {"command": "mordell", "d": args.d, "depth": args.depth}
    return _emit_tree(args, {w: [str(v) for v in t.as_tuple()] for w, t in tree.items()}, header)


def cmd_shadow_mordell(args) -> int:
    ctx = PellContext.for_d(args.d, args.m)
    tree = shadow_mordell_tree(ctx, args.depth, args.limit)
    header = {"command": "shadow-mordell", "d": args.d, "m": args.m, "depth": args.depth}
    if args.format == "json":
        nodes = [{"word": w,
                  "value": [str(v) for v in t.value.as_tuple()],
                  "shadow": [str(s) for s in t.shadow]}
                 for w, t in tree.items()]
        sys.stdout.write(render.json_text({**header, "nodes": nodes}))
        return 0
    values = {w: [str(d) for d in t.duals()] for w, t in tree.items()}
    return _emit_tree(args, values, header)


def cmd_special_shadow(args) -> int:
    tree = special_orbit_shadow_tree(args.a, args.b, args.c, args.depth, args.limit)
    header = {"command": "special-shadow", "a": args.a, "b": args.b, "c": args.c,
              "depth": args.depth}
    if args.format == "json":
        nodes = [{"word": w,
                  "duals": [v.json_dict() for v in t],
                  "shadow": [str(v.sh) for v in t]}
                 for w, t in tree.items()]
        sys.stdout.write(render.json_text({**header, "nodes": nodes}))
        return 0
    return _emit_tree(args, {w: [str(v) for v in t] for w, t in tree.items()}, header)


def cmd_lyapunov(args) -> int:
    if args.exact_period:
        value = lyapunov_exact_periodic(args.exact_period)
        if args.format == "csv":
            sys.stdout.write(render.csv_text(
                [(args.exact_period, repr(value))], header=("period", "value")))
        else:
            sys.stdout.write(render.json_text({
                "command": "lyapunov",
                "method": "exact-periodic",
                "period": args.exact_period,
                "value": value,
            }))
        return 0
    spec = PathSpec.from_word(args.word) if args.word else args.cf
    est = lyapunov_estimate(spec, args.n)
    if args.format == "csv":
        from .euclid import euclid_path, ln_int
        path = euclid_path(spec.letters(args.n))
        rows = [(k, repr(ln_int(path[k].a) / k)) for k in range(1, args.n + 1)]
        sys.stdout.write(render.csv_text(rows, header=("step", "value")))
    else:
        sys.stdout.write(render.json_text({
            "command": "lyapunov",
            "method": est.method,
            "n": est.n,
            "value": est.value,
        }))
    return 0


def cmd_growth(args) -> int:
    if args.path == "river":
        value = river_growth_exponent(args.form, repeats=args.repeats)
        n = len(find_river(args.form).period) * args.repeats
        payload = {"command": "growth", "path": "river", "n": n, "exponent": value}
    else:
        value = topograph_growth_exponent(args.form, args.path, args.n)
        payload = {"command": "growth", "n": args.n, "exponent": value}
    if args.format == "csv":
        sys.stdout.write(render.csv_text([(payload.get("n"), repr(value))],
                                         header=("n", "exponent")))
    else:
        sys.stdout.write(render.json_text(payload))
    return 0


def cmd_relative_growth(args) -> int:
    ctx = PellContext.for_d(args.d, args.m)
    if isinstance(args.path, str):
        raise TopographError("relative-growth needs a word or continued-fraction path")
    value = relative_shadow_growth(ctx, args.path, args.n)
    payload = {"command": "relative-growth", "d": args.d, "m": args.m,
               "n": args.n, "value": value}
    if args.format == "csv":
        sys.stdout.write(render.csv_text([(args.n, repr(value))], header=("n", "value")))
    else:
        sys.stdout.write(render.json_text(payload))
    return 0


def cmd_sequence(args) -> int:
    if args.name == "shadow-fibonacci":
        values = fibonacci_branch_shadow(args.n)
    else:
        if args.d is None:
            print("sequence mordell-branch requires --d", file=sys.stderr)
            return 2
        ctx = PellContext.for_d(args.d)
        values = [ctx.half_trace(i) for i in range(1, args.n + 1)]
    if args.format == "json":
        sys.stdout.write(render.json_text({
            "command": "sequence",
            "name": args.name,
            "values": [str(v) for v in values],
        }))
    else:
        rows = [(i + 1, str(v)) for i, v in enumerate(values)]
        sys.stdout.write(render.csv_text(rows))
    return 0


def cmd_verify(args) -> int:
    kwargs = {}
    if args.suite == "markov" and args.depth is not None:
        kwargs["depth"] = args.depth
    if args.suite == "mordell":
        if args.d:
            kwargs["ds"] = tuple(int(p) for p in args.d.split(","))
        if args.range is not None:
            kwargs["bound"] = args.range
    suites = verify_suite(args.suite, **kwargs)
    failed = sum(s["failed"] for s in suites)
    passed = sum(s["passed"] for s in suites)
    sys.stdout.write(render.json_text({
        "command": "verify",
        "suite": args.suite,
        "passed": passed,
        "failed": failed,
        "suites": suites,
    }))
    return 0 if failed == 0 else 1


def _add_tree_options(p, default_depth=4) -> None:
    p.add_argument("--depth", type=int, default=default_depth)
    p.add_argument("--limit", type=int, default=DEFAULT_DEPTH_LIMIT,
                   help="depth cap (default 24)")
    p.add_argument("--format", choices=TREE_FORMATS, default="json")
    p.add_argument("--labels", choices=("values", "farey", "both"), default="values")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="topograph",
        description="Conway topographs, shadow Markov/Mordell triples, Pell "
                    "solutions, and Euclid-tree growth experiments (exact arithmetic).")
    parser.add_argument("--threads", type=int, default=1,
                        help="worker hint for subtree enumeration (currently "
                             "single-threaded; accepted for compatibility)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("topograph", help="values of a quadratic form on the topograph")
    p.add_argument("--form", type=_parse_form, required=True, metavar="a,h,b")
    p.add_argument("--river", action="store_true",
                   help="emit the Conway river description instead of the tree")
    _add_tree_options(p)
    p.set_defaults(fn=cmd_topograph)

    p = sub.add_parser("river", help="Conway river of an indefinite form")
    p.add_argument("--form", type=_parse_form, required=True, metavar="a,h,b")
    p.set_defaults(fn=cmd_river)

    p = sub.add_parser("markov", help="Markov triple tree")
    _add_tree_options(p)
    p.set_defaults(fn=cmd_markov)

    p = sub.add_parser("shadow-markov", help="shadow Markov tree over dual integers")
    _add_tree_options(p)
    p.set_defaults(fn=cmd_shadow_markov)

    p = sub.add_parser("pell", help="fundamental solution of p^2 - d q^2 = 1")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.set_defaults(fn=cmd_pell)

    p = sub.add_parser("mordell", help="Mordell triples indexed by the Euclid tree")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--m", type=int, default=1)
    _add_tree_options(p)
    p.set_defaults(fn=cmd_mordell)

    p = sub.add_parser("shadow-mordell", help="principal shadows of Mordell triples")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--m", type=int, default=1)
    _add_tree_options(p)
    p.set_defaults(fn=cmd_shadow_mordell)

    p = sub.add_parser("special-shadow",
                       help="dual Vieta orbit of (1,1,1) with starting shadows a,b,c")
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--b", type=int, required=True)
    p.add_argument("--c", type=int, required=True)
    _add_tree_options(p)
    p.set_defaults(fn=cmd_special_shadow)

    p = sub.add_parser("lyapunov", help="growth of Euclid triples along a path")
    p.add_argument("--cf", type=_parse_cf_text, metavar="c0,c1,... or c0,(p1,p2)")
    p.add_argument("--word", type=str)
    p.add_argument("--n", type=int, default=100)
    p.add_argument("--exact-period", type=str, metavar="WORD",
                   help="exact value for a periodic word (spectral radius)")
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.set_defaults(fn=cmd_lyapunov)

    p = sub.add_parser("growth", help="growth exponent of |Q| along a path")
    p.add_argument("--form", type=_parse_form, required=True, metavar="a,h,b")
    p.add_argument("--path", type=_parse_path, required=True,
                   metavar="golden|sqrt:D|cf:...|river|WORD")
    p.add_argument("--n", type=int, default=40)
    p.add_argument("--repeats", type=int, default=20,
                   help="periods to walk when --path river")
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.set_defaults(fn=cmd_growth)

    p = sub.add_parser("relative-growth",
                       help="relative growth of principal shadows along a path")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--m", type=int, default=1)
    p.add_argument("--path", type=_parse_path, required=True,
                   metavar="golden|sqrt:D|cf:...|WORD")
    p.add_argument("--n", type=int, default=30)
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.set_defaults(fn=cmd_relative_growth)

    p = sub.add_parser("sequence", help="named integer sequences as CSV/JSON")
    p.add_argument("name", choices=("shadow-fibonacci", "mordell-branch"))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int)
    p.add_argument("--format", choices=("json", "csv"), default="csv")
    p.set_defaults(fn=cmd_sequence)

    p = sub.add_parser("verify", help="run exact invariant suites")
    p.add_argument("--suite", choices=("all", "markov", "mordell", "growth", "topograph"),
                   default="all")
    p.add_argument("--depth", type=int, default=None)
    p.add_argument("--d", type=str, default=None, metavar="2,3,5")
    p.add_argument("--range", type=int, default=None)
    p.set_defaults(fn=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "lyapunov" and not args.exact_period \
            and (args.cf is None) == (args.word is None):
        parser.error("lyapunov needs exactly one of --cf or --word")
    if getattr(args, "n", 1) is not None and getattr(args, "n", 1) < 0:
        parser.error("--n must be nonnegative")
    try:
        return args.fn(args)
    except TopographError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
