"""Command line interface.

One verb per operation, deterministic output, machine readable with
``--json``. Exit codes follow the verdict convention: 0 integral or
success, 1 a failing witness was found, 2 inconclusive, 64 bad input.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from math import gcd

from . import __version__
from .height1 import (
    Height1ContradictionError,
    decide_height1,
    period_sets,
    sumset,
)
from .integral import (
    Verdict,
    check_multinomial,
    construct_failing_lambda,
    counts_signature,
    decide,
    extract_failing_mu,
    find_failing_mu,
    ratio_factored,
)
from .littlewood import (
    compose,
    core_tower,
    decompose,
    hook_count_divisible,
    quotient_tower,
)
from .partition import (
    Partition,
    format_partition,
    from_boundary,
    hook_multiset,
    parse_partition,
    render_hook_diagram,
    to_boundary,
)
from .ratio import RatioParams, bober_families, build_ftable, phi_bijection

EXIT_INPUT_ERROR = 64


class CliInputError(ValueError):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_INPUT_ERROR)


def _emit(payload: dict) -> None:
    print(json.dumps(payload, indent=2))


def _partition_arg(text: str) -> Partition:
    try:
        return parse_partition(text)
    except ValueError as exc:
        raise CliInputError(str(exc)) from None


def _int_list(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(tok.strip()) for tok in text.split(",") if tok.strip())
    except ValueError:
        raise CliInputError(f"malformed integer list {text!r}") from None


def _params_from_file(path: str) -> RatioParams:
    gammas = deltas = None
    try:
        with open(path, encoding="utf-8") as fh:
            for line in fh:
                line = line.strip()
                if not line or line.startswith("#"):
                    continue
                key, sep, rest = line.partition(":")
                if not sep:
                    raise CliInputError(f"malformed parameter line {line!r}")
                key = key.strip().lower()
                if key == "gamma":
                    gammas = _int_list(rest)
                elif key == "delta":
                    deltas = _int_list(rest)
                else:
                    raise CliInputError(f"unknown parameter key {key!r}")
    except OSError as exc:
        raise CliInputError(f"cannot read {path}: {exc}") from None
    if gammas is None or deltas is None:
        raise CliInputError(f"{path} must define both gamma: and delta: lines")
    return _build_params(gammas, deltas)


def _build_params(gammas, deltas) -> RatioParams:
    try:
        return RatioParams(tuple(gammas), tuple(deltas))
    except ValueError as exc:
        raise CliInputError(str(exc)) from None


def _params_arg(args) -> RatioParams:
    if getattr(args, "params", None):
        return _params_from_file(args.params)
    if args.gamma is None or args.delta is None:
        raise CliInputError("provide --gamma and --delta, or --params FILE")
    return _build_params(_int_list(args.gamma), _int_list(args.delta))


def _verdict_output(verdict: Verdict, args) -> int:
    if args.json:
        _emit(verdict.to_json_dict())
    else:
        print(f"verdict: {verdict.status}")
        if verdict.witness is not None:
            w = verdict.witness
            print(f"  mu     = {format_partition(w.mu) or '()'}")
            print(f"  p      = {w.p}")
            print(f"  lambda = {format_partition(w.lam)}")
            print(f"  valuation at p: {verdict.valuation_at_p}")
        if verdict.bound is not None:
            print(f"  searched sizes up to {verdict.bound}")
    return verdict.exit_code


def _cmd_hooks(args) -> int:
    lam = _partition_arg(args.partition)
    hooks = hook_multiset(lam)
    if args.json:
        _emit(
            {
                "partition": format_partition(lam),
                "size": lam.size,
                "hooks": {str(h): hooks[h] for h in sorted(hooks)},
            },
        )
        return 0
    diagram = render_hook_diagram(lam)
    print(diagram if diagram else "(empty partition)")
    flat = sorted(hooks.elements(), reverse=True)
    print(f"hooks: {' '.join(map(str, flat)) if flat else '(none)'}")
    return 0


def _cmd_boundary(args) -> int:
    lam = _partition_arg(args.partition)
    b = to_boundary(lam)
    if args.json:
        _emit(
            {
                "partition": format_partition(lam),
                "window": "".join(map(str, b.window)),
                "offset": b.offset,
                "interior_zeros": [i for i in b.zero_positions() if i >= 0],
                "rendered": b.render(),
                "centered": b.is_centered(),
            },
        )
        return 0
    print(b.render())
    print(f"round trip: {format_partition(from_boundary(b)) or '()'}")
    return 0


def _cmd_decompose(args) -> int:
    lam = _partition_arg(args.partition)
    dec = decompose(lam, args.p)
    if args.json:
        _emit(
            {
                "partition": format_partition(lam),
                "p": dec.p,
                "core": format_partition(dec.core),
                "quotients": [format_partition(q) for q in dec.quotients],
                "charges": list(dec.charges),
                "size": lam.size,
                "core_size": dec.core.size,
                "quotient_sizes": [q.size for q in dec.quotients],
            },
        )
        return 0
    print(f"core: {format_partition(dec.core) or '()'}")
    for j, q in enumerate(dec.quotients):
        print(f"quotient {j}: {format_partition(q) or '()'}  (charge {dec.charges[j]:+d})")
    print(
        f"size identity: {lam.size} = {dec.core.size} "
        f"+ {dec.p} * {dec.total_quotient_size()}"
    )
    return 0


def _cmd_compose(args) -> int:
    core = _partition_arg(args.core)
    quotients = [
        _partition_arg(tok) for tok in (args.quotients or "").split(";")
    ]
    lam = compose(core, quotients, args.p)
    if args.json:
        _emit(
            {
                "p": args.p,
                "core": format_partition(core),
                "quotients": [format_partition(q) for q in quotients],
                "partition": format_partition(lam),
            },
        )
        return 0
    print(format_partition(lam) or "()")
    return 0


def _cmd_tower(args) -> int:
    lam = _partition_arg(args.partition)
    tower = (
        core_tower(lam, args.p) if args.kind == "core" else quotient_tower(lam, args.p)
    )
    payload = {
        "partition": format_partition(lam),
        "p": args.p,
        "kind": args.kind,
        "labels": tower.to_json_dict(),
    }
    if args.json:
        _emit(payload)
        return 0
    for word, label in payload["labels"].items():
        print(f"{word or '(root)'}: {label or '()'}")
    return 0


def _cmd_ratio(args) -> int:
    lam = _partition_arg(args.partition)
    params = _params_arg(args)
    fr = ratio_factored(lam, params)
    if args.json:
        payload = {"partition": format_partition(lam)}
        payload.update(fr.to_json_dict())
        _emit(payload)
    else:
        print(str(fr))
    return 0 if fr.is_integral else 1


def _cmd_ftable(args) -> int:
    params = _params_arg(args)
    table = build_ftable(params)
    if args.json:
        _emit(table.to_json_dict())
        return 0
    print(f"M = {table.M}, P = {table.period}, min = {table.min}, max = {table.max}")
    print("x:    " + " ".join(f"{x:>2}" for x in range(table.M)))
    print("f(x): " + " ".join(f"{v:>2}" for v in table.values))
    return 0


def _cmd_check(args) -> int:
    params = _params_arg(args)
    verdict = decide(params, args.bound, workers=args.workers)
    return _verdict_output(verdict, args)


def _cmd_search_mu(args) -> int:
    params = _params_arg(args)
    mu = find_failing_mu(
        params, args.bound, hooks_only=args.hooks_only, workers=args.workers
    )
    if args.json:
        _emit(
            {
                "gamma": list(params.gammas),
                "delta": list(params.deltas),
                "bound": args.bound,
                "hooks_only": args.hooks_only,
                "mu": None if mu is None else format_partition(mu),
                "signature": None if mu is None else counts_signature(mu, params),
            },
        )
    else:
        if mu is None:
            print("no failing partition found")
        else:
            print(f"mu = {format_partition(mu)}  (signature {counts_signature(mu, params)})")
    return 0 if mu is None else 1


def _cmd_construct_lambda(args) -> int:
    mu = _partition_arg(args.mu)
    params = _params_arg(args)
    p, lam = construct_failing_lambda(mu, params)
    vp = ratio_factored(lam, params).exponent(p)
    if args.json:
        _emit(
            {
                "mu": format_partition(mu),
                "gamma": list(params.gammas),
                "delta": list(params.deltas),
                "p": p,
                "lambda": format_partition(lam),
                "valuation_at_p": vp,
            },
        )
    else:
        print(f"p = {p}")
        print(f"lambda = {format_partition(lam)}")
        print(f"valuation at {p}: {vp}")
    return 0


def _cmd_extract_mu(args) -> int:
    lam = _partition_arg(args.partition)
    params = _params_arg(args)
    mu = extract_failing_mu(lam, params, args.p)
    if args.json:
        _emit(
            {
                "lambda": format_partition(lam),
                "p": args.p,
                "mu": format_partition(mu),
                "signature": counts_signature(mu, params),
            },
        )
    else:
        print(f"mu = {format_partition(mu)}  (signature {counts_signature(mu, params)})")
    return 0


def _cmd_height1(args) -> int:
    params = _params_arg(args)
    try:
        verdict = decide_height1(params)
    except Height1ContradictionError as exc:
        print(f"diagnostic: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    try:
        sets = period_sets(params)
    except ValueError:
        sets = None  # one-row check failed; the level sets are undefined
    witness = None
    if verdict.witness is not None:
        witness = {
            "mu": format_partition(verdict.witness.mu),
            "p": verdict.witness.p,
            "lambda": format_partition(verdict.witness.lam),
        }
    if sets is None:
        payload = {
            "P": None, "A0": None, "A1": None, "Y": None,
            "sumset_missing": None,
            "verdict": verdict.status,
            "witness": witness,
        }
    else:
        report = sumset(sets.A0, sets.A0, sets.P)
        payload = {
            "P": sets.P,
            "A0": sorted(sets.A0),
            "A1": sorted(sets.A1),
            "Y": sorted(sets.Y),
            "sumset_missing": sorted(set(range(sets.P)) - report.sumset),
            "verdict": verdict.status,
            "witness": witness,
        }
    if args.json:
        _emit(payload)
    else:
        if sets is not None:
            print(f"P = {sets.P}")
            print(f"A0 = {sorted(sets.A0)}")
            print(f"Y  = {sorted(sets.Y)}")
            print(f"A0 + A0 misses {payload['sumset_missing']}")
        else:
            print("one-row check fails; level sets undefined")
        print(f"verdict: {verdict.status}")
        if witness:
            print(f"  mu = {witness['mu']}, p = {witness['p']}, lambda = {witness['lambda']}")
    return verdict.exit_code


def _cmd_multinomial(args) -> int:
    lam = _partition_arg(args.partition)
    if args.s < 1 or args.t < 1:
        raise CliInputError("s and t must be positive")
    ok = check_multinomial(lam, args.s, args.t)
    margin = hook_count_divisible(lam, args.s) - args.t * hook_count_divisible(
        lam, args.s * args.t
    )
    if args.json:
        _emit(
            {
                "partition": format_partition(lam),
                "s": args.s,
                "t": args.t,
                "count_margin": margin,
                "integral": ok,
            },
        )
    else:
        print(f"count margin: {margin}, integral: {ok}")
    return 0 if ok else 1


def _cmd_bober_scan(args) -> int:
    instances = []
    for x in range(1, args.bound + 1):
        for y in range(1, args.bound + 1):
            if gcd(x, y) != 1:
                continue
            fams = bober_families(x, y)
            labels = [1, 3] if x <= y else [1, 2, 3]
            for family, (alpha, beta) in zip(labels, fams):
                entry = {
                    "family": family,
                    "x": x,
                    "y": y,
                    "alpha": list(alpha),
                    "beta": list(beta),
                }
                if set(alpha) & set(beta):
                    entry["skipped"] = "alpha and beta share an entry"
                    instances.append(entry)
                    continue
                image = phi_bijection(RatioParams(alpha, beta))
                entry["gamma"] = list(image.gammas)
                entry["delta"] = list(image.deltas)
                verdict = decide_height1(image)
                entry["status"] = verdict.status
                if verdict.witness is not None:
                    entry["witness"] = {
                        "mu": format_partition(verdict.witness.mu),
                        "p": verdict.witness.p,
                        "lambda": format_partition(verdict.witness.lam),
                    }
                instances.append(entry)
    if args.json:
        _emit({"bound": args.bound, "instances": instances})
    else:
        for e in instances:
            head = f"family {e['family']} (x={e['x']}, y={e['y']}): {tuple(e['alpha'])} / {tuple(e['beta'])}"
            if "skipped" in e:
                print(f"{head}  [skipped: {e['skipped']}]")
            else:
                print(f"{head}  ->  {tuple(e['gamma'])} / {tuple(e['delta'])}: {e['status']}")
    return 0


def _add_params_options(sub) -> None:
    sub.add_argument("--gamma", help="comma separated gamma entries")
    sub.add_argument("--delta", help="comma separated delta entries")
    sub.add_argument("--params", help="parameter file with gamma: and delta: lines")


def build_parser() -> _Parser:
    parser = _Parser(prog="hookratio", description=__doc__)
    parser.add_argument("--version", action="version", version=f"hookratio {__version__}")
    parser.add_argument("--seed", type=int, help="seed for randomized extensions")
    sub = parser.add_subparsers(dest="verb", required=True)

    def verb(name, handler, help_text):
        s = sub.add_parser(name, help=help_text)
        s.set_defaults(handler=handler)
        s.add_argument("--json", action="store_true", help="machine readable output")
        return s

    s = verb("hooks", _cmd_hooks, "Young diagram with hook lengths")
    s.add_argument("--partition", required=True)

    s = verb("boundary", _cmd_boundary, "01 boundary sequence of a partition")
    s.add_argument("--partition", required=True)

    s = verb("decompose", _cmd_decompose, "core and quotients at a modulus")
    s.add_argument("--partition", required=True)
    s.add_argument("--p", type=int, required=True)

    s = verb("compose", _cmd_compose, "rebuild a partition from core and quotients")
    s.add_argument("--core", default="")
    s.add_argument("--quotients", default="", help="semicolon separated partition literals")
    s.add_argument("--p", type=int, required=True)

    s = verb("tower", _cmd_tower, "core or quotient tower labels")
    s.add_argument("--partition", required=True)
    s.add_argument("--p", type=int, required=True)
    s.add_argument("--kind", choices=("core", "quotient"), default="core")

    s = verb("ratio", _cmd_ratio, "factored hook product ratio at a partition")
    s.add_argument("--partition", required=True)
    _add_params_options(s)

    s = verb("f-table", _cmd_ftable, "period table of the step function")
    _add_params_options(s)

    s = verb("check", _cmd_check, "decide integrality for balanced parameters")
    _add_params_options(s)
    s.add_argument("--bound", type=int, default=20, help="exhaustive search size cap")
    s.add_argument("--workers", type=int, default=1, help="search fan-out")

    s = verb("search-mu", _cmd_search_mu, "search for a negative signature partition")
    _add_params_options(s)
    s.add_argument("--bound", type=int, default=20)
    s.add_argument("--hooks-only", action="store_true", dest="hooks_only")
    s.add_argument("--workers", type=int, default=1)

    s = verb("construct-lambda", _cmd_construct_lambda, "inflate mu into a failing partition")
    s.add_argument("--mu", required=True)
    _add_params_options(s)

    s = verb("extract-mu", _cmd_extract_mu, "recover a failing mu from a failing lambda")
    s.add_argument("--partition", required=True)
    s.add_argument("--p", type=int, required=True)
    _add_params_options(s)

    s = verb("height1", _cmd_height1, "height 1 decision with period sets")
    _add_params_options(s)

    s = verb("multinomial", _cmd_multinomial, "hook count margin for the pair (s, st)")
    s.add_argument("--partition", required=True)
    s.add_argument("--s", type=int, required=True)
    s.add_argument("--t", type=int, required=True)

    s = verb("bober-scan", _cmd_bober_scan, "survey the height 1 families")
    s.add_argument("--bound", type=int, default=6, help="max x and y")

    return parser


def run(argv: list[str]) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 0
    if args.seed is not None:
        random.seed(args.seed)
    try:
        return args.handler(args)
    except ValueError as exc:
        # CliInputError and any domain-level rejection (bad modulus, wrong
        # height, unbalanced parameters) are input errors to the shell
        print(f"hookratio: error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
