"""Command line: analyze, dual, enumerate, verify.

Exit codes: 0 all applicable checks pass, 1 a verification failed,
2 invalid input, non-regular or non-dual-type input where a check was asked
for, or an I/O error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from .catalog import CHECK_NAMES, ORBIFOLD_AUTO_MAX_H, analyze, build_catalog, verification_suite
from .duality import classify, dual_search, saito_dual
from .errors import InvalidWeightsError
from .orbifold import is_dual_pair
from .weights import WeightSystem, is_regular

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _onoff(text: str) -> Optional[bool]:
    v = text.lower()
    if v in ("on", "yes", "true", "1"):
        return True
    if v in ("off", "no", "false", "0"):
        return False
    if v == "auto":
        return None
    raise argparse.ArgumentTypeError("expected on, off or auto")


def _add_weights(p: argparse.ArgumentParser) -> None:
    for name in ("a1", "a2", "a3", "h"):
        p.add_argument(name, type=int)


def _weights(args) -> Optional[WeightSystem]:
    try:
        return WeightSystem((args.a1, args.a2, args.a3), args.h)
    except InvalidWeightsError as exc:
        print(f"invalid weight system: {exc}", file=sys.stderr)
        return None


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="dualweights", description="Regular systems of weights and their duals.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("analyze", help="invariants, classification and all checks for one system")
    _add_weights(p)
    p.add_argument("--json", action="store_true", help="print the record as JSON")
    p.add_argument("--max-degree", type=int, default=None, help="Theorem (i) degree bound (default 2h)")
    p.add_argument("--orbifold", type=_onoff, default=None,
                   help=f"on/off/auto; auto runs it for h <= {ORBIFOLD_AUTO_MAX_H}")

    p = sub.add_parser("dual", help="dual candidates and duality verdicts")
    _add_weights(p)
    p.add_argument("--orbifold", type=_onoff, default=None)

    p = sub.add_parser("enumerate", help="write a line-delimited JSON catalog")
    p.add_argument("--h-max", type=int, required=True)
    p.add_argument("--out", default="-", help="output path, - for stdout")
    p.add_argument("--dual-only", action="store_true")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--orbifold", type=_onoff, default=None)

    p = sub.add_parser("verify", help="selected checks with witnesses")
    _add_weights(p)
    p.add_argument("--theorem", action="store_true", help="Theorem (i) presentation of R_W")
    p.add_argument("--orbifold", action="store_true", help="orbifold duality identity")
    p.add_argument("--saito", action="store_true", help="phi* duality and structural properties")
    p.add_argument("--lemma", action="store_true", help="existence of omega_W")
    p.add_argument("--milnor", action="store_true", help="graded Milnor algebra of f_W")
    p.add_argument("--exceptional", action="store_true", help="exceptional collection length")
    p.add_argument("--max-degree", type=int, default=None)
    p.add_argument("--json", action="store_true")
    return parser


def _print_record(rec) -> None:
    print(f"W = ({','.join(map(str, rec.weights))};{rec.h})  key {rec.key}")
    if not rec.regular:
        print("regular: no")
        return
    print("regular: yes")
    print(f"mu = {rec.mu}, epsilon = {rec.epsilon}, genus = {rec.genus}")
    print(f"exponents: {' '.join(map(str, rec.exponents))}")
    print(f"signature: ({rec.genus};{','.join(map(str, rec.signature))})")
    dec = " ".join(f"(l^{d}-1)^{e}" for d, e in rec.cyclotomic_exponents.items())
    print(f"characteristic polynomial: {dec}")
    if not rec.classification:
        print("not of dual type")
        return
    for c in rec.classification:
        print(f"type {c['type']} params {tuple(c['params'])} family order {tuple(c['family_weights'])}")
    print(f"dual: {rec.dual}" + (" (self-dual)" if rec.dual == rec.key else ""))
    _print_checks(rec.verifications)


def _print_checks(checks) -> None:
    for name, s in checks.items():
        print(f"  {'PASS' if s.passed else 'FAIL'} {name}: {s.detail}")


def cmd_analyze(args) -> int:
    w = _weights(args)
    if w is None:
        return EXIT_USAGE
    rec = analyze(w, args.max_degree, args.orbifold)
    if args.json:
        print(rec.to_json(indent=2))
    else:
        _print_record(rec)
    if not rec.regular:
        return EXIT_USAGE
    return EXIT_OK if rec.passed else EXIT_FAIL


def cmd_dual(args) -> int:
    w = _weights(args)
    if w is None:
        return EXIT_USAGE
    if is_regular(*w.weights, w.h) is None:
        print(f"{w} is not regular")
        return EXIT_USAGE
    res = dual_search(w)
    print(f"phi* candidates: {', '.join(c.key for c in res.candidates) or 'none'}")
    if res.classified_dual is None:
        print(f"{w.key} is not of dual type")
        return EXIT_USAGE
    ws = res.classified_dual
    print(f"classified dual: {ws.key}" + (" (self-dual)" if ws.same_system(w) else ""))
    ok = saito_dual(w, ws)
    print(f"  {'PASS' if ok else 'FAIL'} saito duality")
    run_orb = args.orbifold if args.orbifold is not None else w.h <= ORBIFOLD_AUTO_MAX_H
    if run_orb:
        orb = is_dual_pair(w, ws)
        print(f"  {'PASS' if orb else 'FAIL'} orbifold duality")
        ok = ok and orb
    return EXIT_OK if ok else EXIT_FAIL


def cmd_enumerate(args) -> int:
    if args.h_max < 2 or args.jobs < 1:
        print("--h-max must be at least 2 and --jobs at least 1", file=sys.stderr)
        return EXIT_USAGE
    lines = build_catalog(args.h_max, args.dual_only, args.jobs, args.orbifold)
    text = "".join(line + "\n" for line in lines)
    try:
        if args.out == "-":
            sys.stdout.write(text)
        else:
            with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
                fh.write(text)
    except OSError as exc:
        print(f"cannot write catalog: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return EXIT_OK


def cmd_verify(args) -> int:
    w = _weights(args)
    if w is None:
        return EXIT_USAGE
    if is_regular(*w.weights, w.h) is None:
        print(f"{w} is not regular", file=sys.stderr)
        return EXIT_USAGE
    if not classify(w):
        print(f"NotDualType: {w.key} is not of dual type", file=sys.stderr)
        return EXIT_USAGE
    flags = {"saito_duality": args.saito, "orbifold_duality": args.orbifold, "lemma_omega": args.lemma,
             "theorem_i": args.theorem, "milnor": args.milnor, "exceptional_length": args.exceptional}
    wanted = [k for k in CHECK_NAMES if flags[k]] or list(CHECK_NAMES)
    orb = True if args.orbifold else None
    res = verification_suite(w, wanted, args.max_degree, orb)
    if args.json:
        print(json.dumps({k: {"passed": v.passed, "detail": v.detail} for k, v in res.items()}, indent=2))
    else:
        print(f"verify {w.key}")
        _print_checks(res)
    return EXIT_OK if all(v.passed for v in res.values()) else EXIT_FAIL


COMMANDS = {"analyze": cmd_analyze, "dual": cmd_dual, "enumerate": cmd_enumerate, "verify": cmd_verify}


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    return COMMANDS[args.command](args)


if __name__ == "__main__":
    sys.exit(main())
