"""Command-line front end.

Every command except ``gen`` takes the profile file as its first positional
argument. Output is line-oriented ``key=value``; ``--pretty`` adds tables.

Exit codes: 0 success / efficient / no manipulation, 1 negative finding
(improvement or manipulation found), 2 usage error or unmet algorithm
precondition, 3 parse or validation error, 4 instance too large.
"""

from __future__ import annotations

import argparse
import random
import sys
from dataclasses import dataclass
from typing import Optional

from .errors import (
    InstanceTooLarge,
    ParseError,
    PreconditionViolated,
    SizeMismatch,
    ValidationError,
)
from .extensions import Extension, compare
from .mechanisms import MechanismId, random_permutation, run_mechanism, sp_check
from .model import (
    format_committee,
    format_order,
    format_profile,
    is_dichotomous,
    load_profile,
    make_committee,
    parse_committee,
    topwidth,
)
from .oracle import (
    DEFAULT_CAP,
    enumerate_efficient,
    find_improvement,
    improvement_chain,
    verify_bruteforce,
)
from .polyalgos import rs_improve_dichotomous_tw2, worst_verify
from .reductions import (
    parse_edge_list,
    parse_set_system,
    profile_from_hitting_set,
    profile_from_vertex_cover,
    random_profile,
)
from .relations import run_relations

EXIT_OK, EXIT_NEGATIVE, EXIT_USAGE, EXIT_PARSE, EXIT_TOO_LARGE = range(5)


@dataclass
class RunConfig:
    command: str
    profile_path: Optional[str]
    method: str
    seed: int
    cap: int
    pretty: bool
    args: argparse.Namespace


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--cap", type=int, default=DEFAULT_CAP,
                        help="largest number of committees an exhaustive scan may visit")
    common.add_argument("--pretty", action="store_true", help="human-readable tables")
    common.add_argument("--seed", type=int, default=0)

    parser = _Parser(prog="pareto-committees", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    exts = [e.value for e in Extension]
    algos = [a.value for a in MechanismId]

    p = sub.add_parser("elect", parents=[common], help="elect a committee")
    p.add_argument("profile")
    p.add_argument("--algo", required=True, choices=algos)
    p.add_argument("--perm", help="comma-separated agent order, or 'random'")

    p = sub.add_parser("verify", parents=[common], help="test a committee for efficiency")
    p.add_argument("profile")
    p.add_argument("--ext", required=True, choices=exts)
    p.add_argument("--committee", required=True)
    p.add_argument("--method", choices=["brute", "poly", "auto"], default="brute")

    p = sub.add_parser("improve", parents=[common],
                       help="follow Pareto improvements to an efficient committee")
    p.add_argument("profile")
    p.add_argument("--ext", required=True, choices=exts)
    p.add_argument("--committee", required=True)
    p.add_argument("--method", choices=["brute", "poly", "auto"], default="auto")

    p = sub.add_parser("enumerate", parents=[common], help="list all efficient committees")
    p.add_argument("profile")
    p.add_argument("--ext", required=True, choices=exts)

    p = sub.add_parser("dominates", parents=[common], help="compare two committees for one agent")
    p.add_argument("profile")
    p.add_argument("--ext", required=True, choices=exts)
    p.add_argument("--agent", required=True, type=int)
    p.add_argument("w")
    p.add_argument("v")

    p = sub.add_parser("spcheck", parents=[common], help="search for a profitable misreport")
    p.add_argument("profile")
    p.add_argument("--algo", required=True, choices=algos)
    p.add_argument("--perm")
    p.add_argument("--samples", type=int)
    p.add_argument("--ext", choices=exts, default="rs",
                   help="extension under which a manipulation must pay off")

    p = sub.add_parser("relations", parents=[common],
                       help="check the inclusions between the five efficient sets")
    p.add_argument("profile")

    p = sub.add_parser("gen", parents=[common], help="generate a profile")
    p.add_argument("--model", required=True, choices=["ic", "vc", "hs"])
    p.add_argument("--m", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--classes", type=int, help="classes per agent (ic); default random")
    p.add_argument("--graph", help="edge-list file (vc)")
    p.add_argument("--sets", help="set-system file (hs)")
    return parser


def _out(line=""):
    print(line)


def _perm(text, profile, seed):
    if text is None:
        return None
    if text == "random":
        return random_permutation(profile.n, random.Random(seed))
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise ValidationError(f"bad permutation {text!r}") from None


def _poly_verifier(profile, ext):
    """The polynomial verifier for ``ext`` on this profile, or None if none applies."""
    if ext is Extension.WORST:
        return lambda w: worst_verify(profile, w)
    if ext is Extension.RS and is_dichotomous(profile) and topwidth(profile) <= 2:
        return lambda w: rs_improve_dichotomous_tw2(profile, w)
    return None


def _verifier(cfg, profile, ext):
    if cfg.method == "brute":
        return lambda w: verify_bruteforce(profile, ext, w, cfg.cap)
    poly = _poly_verifier(profile, ext)
    if poly is not None:
        return poly
    if cfg.method == "poly":
        raise PreconditionViolated(
            f"no polynomial verifier for {ext.value} on this profile "
            "(needs worst, or rs with dichotomous preferences of top width <= 2)"
        )
    return lambda w: verify_bruteforce(profile, ext, w, cfg.cap)


def cmd_elect(cfg, profile):
    perm = _perm(cfg.args.perm, profile, cfg.seed)
    w = run_mechanism(MechanismId(cfg.args.algo), profile, perm)
    _out(f"committee={format_committee(w)}")
    return EXIT_OK


def cmd_verify(cfg, profile):
    ext = Extension.parse(cfg.args.ext)
    w = make_committee(parse_committee(cfg.args.committee), profile)
    verdict = _verifier(cfg, profile, ext)(w)
    _out(f"efficient={'true' if verdict.efficient else 'false'}")
    if verdict.efficient:
        return EXIT_OK
    _out(f"witness={format_committee(verdict.witness)}")
    return EXIT_NEGATIVE


def cmd_improve(cfg, profile):
    ext = Extension.parse(cfg.args.ext)
    w = make_committee(parse_committee(cfg.args.committee), profile)
    verify = _verifier(cfg, profile, ext)
    chain = improvement_chain(profile, ext, w, lambda c: verify(c).witness, cfg.cap)
    for i, c in enumerate(chain):
        _out(f"step={i} committee={format_committee(c)}")
    _out(f"efficient={format_committee(chain[-1])}")
    if len(chain) == 1:
        return EXIT_OK
    _out(f"witness={format_committee(chain[1])}")
    return EXIT_NEGATIVE


def cmd_enumerate(cfg, profile):
    ext = Extension.parse(cfg.args.ext)
    committees = enumerate_efficient(profile, ext, cfg.cap)
    for c in committees:
        _out(f"committee={format_committee(c)}")
    _out(f"count={len(committees)}")
    return EXIT_OK


def cmd_dominates(cfg, profile):
    ext = Extension.parse(cfg.args.ext)
    agent = cfg.args.agent
    if not 1 <= agent <= profile.n:
        raise ValidationError(f"agent {agent} outside 1..{profile.n}")
    w = parse_committee(cfg.args.w)
    v = parse_committee(cfg.args.v)
    for c in (w, v):
        if c and (c[0] < 1 or c[-1] > profile.m):
            raise ValidationError(f"committee members must lie in 1..{profile.m}")
    _out(compare(ext, profile.order(agent), w, v).value)
    return EXIT_OK


def cmd_spcheck(cfg, profile):
    perm = _perm(cfg.args.perm, profile, cfg.seed)
    found = sp_check(
        MechanismId(cfg.args.algo),
        profile,
        perm,
        samples=cfg.args.samples,
        seed=cfg.seed,
        ext=Extension.parse(cfg.args.ext),
    )
    if found is None:
        _out("manipulation=none")
        return EXIT_OK
    _out("manipulation=found")
    _out(f"agent={found.agent}")
    _out(f"report={format_order(found.report)}")
    _out(f"honest={format_committee(found.honest)}")
    _out(f"manipulated={format_committee(found.manipulated)}")
    return EXIT_NEGATIVE


def cmd_relations(cfg, profile):
    report = run_relations(profile, cfg.cap)
    if cfg.pretty:
        width = max(len(e.value) for e in Extension)
        for ext, committees in report.efficient.items():
            shown = " ".join("{" + format_committee(c) + "}" for c in committees)
            _out(f"{ext.value:<{width}}  {shown}")
        _out()
        for label, ok in report.checks:
            _out(f"{label:<8} {'PASS' if ok else 'FAIL'}")
    else:
        for ext, committees in report.efficient.items():
            _out(f"efficient.{ext.value}=" + ";".join(format_committee(c) for c in committees))
        for label, ok in report.checks:
            _out(f"check.{label}={'PASS' if ok else 'FAIL'}")
    return EXIT_OK if report.all_passed else EXIT_NEGATIVE


def _read(path):
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def cmd_gen(cfg):
    args = cfg.args
    if args.model == "ic":
        missing = [f"--{name}" for name in ("m", "n", "k") if getattr(args, name) is None]
        if missing:
            raise _UsageError(f"gen --model ic needs {' '.join(missing)}")
        profile = random_profile(args.m, args.n, args.k, random.Random(cfg.seed), args.classes)
        sys.stdout.write(format_profile(profile))
        return EXIT_OK
    if args.k is None:
        raise _UsageError(f"gen --model {args.model} needs --k")
    if args.model == "vc":
        if args.graph is None:
            raise _UsageError("gen --model vc needs --graph")
        profile, d = profile_from_vertex_cover(parse_edge_list(_read(args.graph)), args.k)
        sys.stdout.write(format_profile(profile))
        _out(f"# D = {format_committee(d)}")
        return EXIT_OK
    if args.sets is None:
        raise _UsageError("gen --model hs needs --sets")
    profile = profile_from_hitting_set(parse_set_system(_read(args.sets)), args.k)
    sys.stdout.write(format_profile(profile))
    return EXIT_OK


class _UsageError(Exception):
    pass


COMMANDS = {
    "elect": cmd_elect,
    "verify": cmd_verify,
    "improve": cmd_improve,
    "enumerate": cmd_enumerate,
    "dominates": cmd_dominates,
    "spcheck": cmd_spcheck,
    "relations": cmd_relations,
}


def dispatch(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    cfg = RunConfig(
        command=args.command,
        profile_path=getattr(args, "profile", None),
        method=getattr(args, "method", "brute"),
        seed=args.seed,
        cap=args.cap,
        pretty=args.pretty,
        args=args,
    )
    try:
        if cfg.command == "gen":
            return cmd_gen(cfg)
        profile = load_profile(cfg.profile_path)
        return COMMANDS[cfg.command](cfg, profile)
    except (_UsageError, PreconditionViolated) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ParseError, ValidationError, SizeMismatch, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except InstanceTooLarge as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_TOO_LARGE


def main():
    sys.exit(dispatch())
