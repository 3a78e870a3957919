"""``argaudit`` command line.

Exit codes: 0 when the command succeeded and every check held, 1 when a
violation was found, 2 for usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from .errors import ArgauditError, NoExtensions
from .expansions import (
    ExpansionKind,
    GenParams,
    classify_expansion,
    generate_framework,
    generate_normal_expansion,
    generate_rational_mans_expansion,
    sorted_kinds,
)
from .framework import ArgumentationFramework, canonical_family, canonical_set
from .io import parse_framework, serialize_framework
from .preferences import (
    PafExpansionKind,
    PreferenceBasedFramework,
    check_paf_reference_independence,
    classify_paf_expansion,
    tau_preferred,
)
from .principles import (
    PrincipleId,
    SearchBounds,
    check_decision_reference_independence,
    check_principle,
    search_counterexamples,
)
from .semantics import Mode, Semantics, aggregate

EXIT_OK, EXIT_VIOLATION, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _load(path):
    try:
        with open(path, encoding="utf-8") as fh:
            return parse_framework(fh.read())
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    except ArgauditError as exc:
        raise UsageError(f"{path}: {exc}") from None


def _load_af(path) -> ArgumentationFramework:
    fw = _load(path)
    return fw.framework if isinstance(fw, PreferenceBasedFramework) else fw


def framework_tree(fw) -> dict:
    out = {
        "arguments": canonical_set(fw.arguments),
        "attacks": sorted(fw.attacks),
    }
    if isinstance(fw, PreferenceBasedFramework):
        out["prefs"] = sorted(fw.prefs)
    return out


def _flag_names(kinds) -> list:
    return [str(k) for k in sorted_kinds(kinds)]


def _paf_flag_names(kinds) -> list:
    return [str(k) for k in PafExpansionKind if k in kinds]


# -- commands ---------------------------------------------------------------


def cmd_solve(args):
    fw = _load(args.file)
    af = fw.framework if isinstance(fw, PreferenceBasedFramework) else fw
    sem, mode = Semantics.parse(args.semantics), Mode.parse(args.mode)
    out = {"semantics": str(sem), "mode": str(mode)}
    try:
        result = aggregate(af, sem, mode)
    except NoExtensions as exc:
        raise UsageError(str(exc)) from None
    if mode in (Mode.CREDULOUS, Mode.SKEPTICAL):
        out["extensions"] = canonical_family(result)
    else:
        out["decision_set"] = canonical_set(result)
    if isinstance(fw, PreferenceBasedFramework):
        out["tau_preferred"] = canonical_set(tau_preferred(fw))
    return out, EXIT_OK


def cmd_check_expansion(args):
    base, expanded = _load(args.base), _load(args.expanded)
    base_af = base.framework if isinstance(base, PreferenceBasedFramework) else base
    exp_af = expanded.framework if isinstance(expanded, PreferenceBasedFramework) else expanded
    out = {"flags": _flag_names(classify_expansion(base_af, exp_af))}
    if isinstance(base, PreferenceBasedFramework) and isinstance(expanded, PreferenceBasedFramework):
        out["paf_flags"] = _paf_flag_names(classify_paf_expansion(base, expanded))
    return out, EXIT_OK


def cmd_check_principle(args):
    principle = PrincipleId.parse(args.principle)
    sem, mode = Semantics.parse(args.semantics), Mode.parse(args.mode)
    base = _load_af(args.base)
    expanded = _load_af(args.expanded) if args.expanded else None
    if principle is PrincipleId.DECISION_REF_INDEPENDENCE:
        if mode not in (Mode.DECIDE_UNION, Mode.DECIDE_INTERSECTION):
            raise UsageError("decision_ref_independence needs --mode decide_union or decide_intersection")
    elif mode not in (Mode.CREDULOUS, Mode.SKEPTICAL):
        raise UsageError(f"{principle} needs --mode credulous or skeptical")
    if expanded is None and principle is not PrincipleId.DIRECTIONALITY:
        raise UsageError(f"{principle} needs --expanded")
    try:
        verdict = check_principle(principle, sem, base, expanded, mode)
    except NoExtensions as exc:
        raise UsageError(str(exc)) from None
    out = {"principle": str(principle), "semantics": str(sem), "mode": str(mode)}
    out.update(verdict.to_dict())
    return out, EXIT_OK if verdict.holds else EXIT_VIOLATION


def _audit_paf(frameworks, require_rm):
    flags = [classify_paf_expansion(a, b) for a, b in zip(frameworks, frameworks[1:])]
    steps, rejected = [], None
    for i, kinds in enumerate(flags, 1):
        steps.append({"index": i, "expansion_flags": _paf_flag_names(kinds)})
        if require_rm and rejected is None and PafExpansionKind.RATIONAL_MAN_PAF not in kinds:
            rejected = i
    if rejected is not None:
        return steps, rejected, "rejected"
    first = None
    for i, (a, b) in enumerate(zip(frameworks, frameworks[1:])):
        step = steps[i]
        step["decision_set"] = {
            "base": canonical_set(tau_preferred(a)),
            "expanded": canonical_set(tau_preferred(b)),
        }
        if PafExpansionKind.NORMAL_PAF not in flags[i]:
            step["verdict"] = None
            step["note"] = "not a normal expansion; principle not applicable"
            continue
        verdict = check_paf_reference_independence(a, b)
        step["verdict"] = verdict.to_dict()
        if not verdict.holds and first is None:
            first = i + 1
    return steps, first, "violation" if first else "ok"


def _audit_af(frameworks, sem, mode, require_rm):
    flags = [classify_expansion(a, b) for a, b in zip(frameworks, frameworks[1:])]
    steps, rejected = [], None
    for i, kinds in enumerate(flags, 1):
        steps.append({"index": i, "expansion_flags": _flag_names(kinds)})
        if require_rm and rejected is None and ExpansionKind.RATIONAL_MAN not in kinds:
            rejected = i
    if rejected is not None:
        return steps, rejected, "rejected"
    first = None
    for i, (a, b) in enumerate(zip(frameworks, frameworks[1:])):
        step = steps[i]
        try:
            step["decision_set"] = {
                "base": canonical_set(aggregate(a, sem, mode)),
                "expanded": canonical_set(aggregate(b, sem, mode)),
            }
        except NoExtensions as exc:
            step["decision_set"] = None
            step["verdict"] = None
            step["note"] = str(exc)
            continue
        if ExpansionKind.NORMAL not in flags[i]:
            step["verdict"] = None
            step["note"] = "not a normal expansion; principle not applicable"
            continue
        verdict = check_decision_reference_independence(sem, mode, a, b)
        step["verdict"] = verdict.to_dict()
        if not verdict.holds and first is None:
            first = i + 1
    return steps, first, "violation" if first else "ok"


def cmd_audit(args):
    if len(args.files) < 2:
        raise UsageError("audit needs at least two files")
    frameworks = [_load(f) for f in args.files]
    kinds = {isinstance(f, PreferenceBasedFramework) for f in frameworks}
    if len(kinds) > 1:
        raise UsageError("audit files must be all plain or all preference-based frameworks")
    require_rm = args.require == "rational-man"
    if kinds == {True}:
        out = {"acceptability": "tau_preferred"}
        steps, first, status = _audit_paf(frameworks, require_rm)
    else:
        sem, mode = Semantics.parse(args.semantics), Mode.parse(args.mode)
        if mode not in (Mode.DECIDE_UNION, Mode.DECIDE_INTERSECTION):
            raise UsageError("audit needs --mode decide_union or decide_intersection")
        out = {"semantics": str(sem), "mode": str(mode)}
        steps, first, status = _audit_af(frameworks, sem, mode, require_rm)
    if args.require:
        out["require"] = args.require
    out["steps"] = steps
    out["first_violation"] = first
    out["status"] = status
    return out, EXIT_OK if status == "ok" else EXIT_VIOLATION


def cmd_search(args):
    sem, mode = Semantics.parse(args.semantics), Mode.parse(args.mode)
    principle = PrincipleId.parse(args.principle)
    bounds = SearchBounds(
        max_arguments=args.max_args,
        exhaustive=args.random is None,
        count=args.random or 0,
        seed=args.seed,
        allow_self_attacks=not args.no_self_attacks,
        required=args.require,
    )
    found = search_counterexamples(sem, principle, bounds, mode)
    out = {
        "semantics": str(sem),
        "mode": str(mode),
        "principle": str(principle),
        "counterexamples": [
            {
                "base": framework_tree(c.base),
                "expanded": framework_tree(c.expanded),
                "verdict": c.verdict.to_dict(),
            }
            for c in found
        ],
    }
    return out, EXIT_VIOLATION if found else EXIT_OK


def cmd_generate(args):
    allow_self = not args.no_self_attacks
    if args.expand_from:
        base = _load_af(args.expand_from)
        params = GenParams(len(base), args.attack_prob, allow_self, args.new_args, args.seed)
        gen = generate_rational_mans_expansion if args.rational_man else generate_normal_expansion
        fw = gen(base, params)
    else:
        fw = generate_framework(GenParams(args.args, args.attack_prob, allow_self, seed=args.seed))
    return serialize_framework(fw), EXIT_OK


# -- output -----------------------------------------------------------------


def _text_lines(value, prefix=""):
    if isinstance(value, dict):
        for key, item in value.items():
            name = f"{prefix}.{key}" if prefix else key
            if isinstance(item, (dict, list)) and item and not _is_flat(item):
                yield from _text_lines(item, name)
            else:
                yield f"{name}: {_flat(item)}"
    elif isinstance(value, list):
        for i, item in enumerate(value):
            yield from _text_lines(item, f"{prefix}[{i}]")
    else:
        yield f"{prefix}: {_flat(value)}"


def _is_flat(value):
    if isinstance(value, dict):
        return False
    return all(
        isinstance(v, (str, tuple)) or (isinstance(v, list) and all(isinstance(x, str) for x in v))
        for v in value
    )


def _flat(value):
    if value is None:
        return "-"
    if isinstance(value, bool):
        return str(value).lower()
    if isinstance(value, tuple):
        return "(" + ",".join(value) + ")"
    if isinstance(value, list):
        if all(isinstance(v, str) for v in value):
            return "{" + ", ".join(value) + "}"
        return "{" + ", ".join(_flat(v) for v in value) + "}"
    return str(value)


def render(result, fmt: str) -> str:
    if isinstance(result, str):
        return result
    if fmt == "text":
        return "\n".join(_text_lines(result)) + "\n"
    return json.dumps(result, indent=2) + "\n"


def build_parser() -> argparse.ArgumentParser:
    sem_names = [s.value for s in Semantics]
    mode_names = [m.value for m in Mode]

    # --format is accepted before or after the subcommand
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "text"), default=argparse.SUPPRESS)
    parser = argparse.ArgumentParser(prog="argaudit", description=__doc__.splitlines()[0], parents=[common])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", parents=[common], help="enumerate extensions or a decision set")
    p.add_argument("--file", required=True)
    p.add_argument("--semantics", required=True, choices=sem_names)
    p.add_argument("--mode", default="credulous", choices=mode_names)
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("check-expansion", parents=[common], help="classify the expansion between two frameworks")
    p.add_argument("--base", required=True)
    p.add_argument("--expanded", required=True)
    p.set_defaults(func=cmd_check_expansion)

    p = sub.add_parser("check-principle", parents=[common], help="evaluate one principle on a framework pair")
    p.add_argument("--principle", required=True, choices=[x.value for x in PrincipleId])
    p.add_argument("--semantics", required=True, choices=sem_names)
    p.add_argument("--mode", default="credulous", choices=mode_names)
    p.add_argument("--base", required=True)
    p.add_argument("--expanded")
    p.set_defaults(func=cmd_check_principle)

    p = sub.add_parser("audit", parents=[common], help="check decision stability along a chain of frameworks")
    p.add_argument("--files", nargs="+", required=True)
    p.add_argument("--semantics", default="grounded", choices=sem_names)
    p.add_argument("--mode", default="decide_intersection", choices=mode_names)
    p.add_argument("--require", choices=("rational-man",))
    p.set_defaults(func=cmd_audit)

    p = sub.add_parser("search", parents=[common], help="look for counterexamples to a principle")
    p.add_argument("--semantics", required=True, choices=sem_names)
    p.add_argument("--principle", required=True, choices=[x.value for x in PrincipleId])
    p.add_argument("--mode", default="credulous", choices=mode_names)
    p.add_argument("--max-args", type=int, required=True)
    how = p.add_mutually_exclusive_group(required=True)
    how.add_argument("--exhaustive", action="store_true")
    how.add_argument("--random", type=int, metavar="COUNT")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--require", default="normal", choices=[k.value for k in ExpansionKind][1:])
    p.add_argument("--no-self-attacks", action="store_true")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("generate", parents=[common], help="write a random framework document")
    p.add_argument("--args", type=int, default=0)
    p.add_argument("--attack-prob", type=float, default=0.3)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--no-self-attacks", action="store_true")
    p.add_argument("--expand-from")
    p.add_argument("--new-args", type=int, default=0)
    p.add_argument("--rational-man", action="store_true", help="only add rational man's expansion attacks")
    p.set_defaults(func=cmd_generate)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        result, code = args.func(args)
    except (UsageError, ArgauditError, ValueError) as exc:
        print(f"argaudit: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    sys.stdout.write(render(result, getattr(args, "format", "json")))
    return code


if __name__ == "__main__":
    sys.exit(main())
