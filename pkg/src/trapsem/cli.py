"""``trapsem`` command-line interface.

Exit codes: 0 success, 1 usage error, 2 parse error, 3 resource cap
exceeded, 4 ``check`` answered false, 5 ``verify`` found a failing property.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

from .dynamics import (
    DEFAULT_MAX_ATOMS_GRAPH,
    Kind,
    build_graph,
    graph_to_json,
    is_class,
    is_strict_class,
    is_trap_set,
    strict_classes,
    to_dot,
)
from .errors import (
    InterpretationError,
    PreconditionError,
    ProgramSyntaxError,
    ResourceCapError,
    UnsupportedError,
)
from .interp import format_state, parse_interp, parse_state
from .oracle import GenConfig, gen_program
from .program import (
    DEFAULT_MAX_LFP_RULES,
    Program,
    completion,
    format_completion,
    format_program,
    lfp_transform,
    parse_program,
)
from .properties import check_program
from .semantics import (
    Method,
    Semantics,
    enumerate_models,
    format_models_text,
    is_stable_model,
    is_stable_partial,
    is_supported_model,
    is_supported_partial,
)
from .trapspaces import (
    DEFAULT_MAX_ATOMS_ENUM3,
    cover,
    enumerate_trap_spaces,
    is_stable_trap_space,
    is_supported_trap_space,
    minimal_trap_spaces,
    u_minimal_stable_trap_spaces,
)

EXIT_OK, EXIT_USAGE, EXIT_PARSE, EXIT_CAP, EXIT_FALSE, EXIT_VERIFY = range(6)
MAX_LISTED_CLASSES = 1 << 16

PROPERTY_NAMES = (
    "supported-trap-space",
    "stable-trap-space",
    "trap-set",
    "class",
    "strict-class",
    "stable-model",
    "supported-model",
    "stable-partial",
    "supported-partial",
)


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


@dataclass(frozen=True)
class RunConfig:
    max_atoms_graph: int = DEFAULT_MAX_ATOMS_GRAPH
    max_atoms_enum3: int = DEFAULT_MAX_ATOMS_ENUM3
    max_lfp_rules: int = DEFAULT_MAX_LFP_RULES
    fmt: str = "text"

    def __post_init__(self):
        if min(self.max_atoms_graph, self.max_atoms_enum3, self.max_lfp_rules) <= 0:
            raise UsageError("caps must be positive")


def _positive_int(text: str) -> int:
    value = int(text)
    if value <= 0:
        raise argparse.ArgumentTypeError("must be positive")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="trapsem", description="Trap space semantics workbench for ground normal logic programs.")
    common = _Parser(add_help=False)
    common.add_argument("program", help="program file ('-' for stdin)")
    common.add_argument("--format", dest="fmt", choices=("text", "json", "dot"), default="text")
    common.add_argument("--max-atoms-graph", type=_positive_int, default=DEFAULT_MAX_ATOMS_GRAPH)
    common.add_argument("--max-atoms-enum3", type=_positive_int, default=DEFAULT_MAX_ATOMS_ENUM3)
    common.add_argument("--max-lfp-rules", type=_positive_int, default=DEFAULT_MAX_LFP_RULES)
    kinds = [k.value for k in Kind]

    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("parse", parents=[common], help="print the canonical program")
    sub.add_parser("completion", parents=[common], help="print Clark's completion")
    sub.add_parser("lfp", parents=[common], help="print the least-fixpoint transformation")

    p = sub.add_parser("graph", parents=[common], help="dump a transition graph")
    p.add_argument("--kind", choices=kinds, required=True)
    p.add_argument("--highlight-strict", action="store_true", help="mark strict classes (dot only)")

    p = sub.add_parser("classes", parents=[common], help="list (strict) classes")
    p.add_argument("--kind", choices=kinds, required=True)
    p.add_argument("--strict", action="store_true")

    p = sub.add_parser("trapspaces", parents=[common], help="list trap spaces")
    p.add_argument("--kind", choices=kinds, required=True)
    which = p.add_mutually_exclusive_group()
    which.add_argument("--minimal", dest="which", action="store_const", const="minimal")
    which.add_argument("--u-minimal", dest="which", action="store_const", const="u-minimal")
    which.add_argument("--all", dest="which", action="store_const", const="all")
    p.set_defaults(which="minimal")

    p = sub.add_parser("cover", parents=[common], help="smallest trap space covering some states")
    p.add_argument("--kind", choices=kinds, required=True)
    p.add_argument("--states", required=True, help="compact states separated by ',' (explicit forms by ';')")

    p = sub.add_parser("models", parents=[common], help="enumerate models")
    p.add_argument("--semantics", choices=[s.value for s in Semantics], required=True)
    p.add_argument("--method", choices=[m.value for m in Method], default="direct")

    p = sub.add_parser("check", parents=[common], help="test one predicate")
    p.add_argument("--property", choices=PROPERTY_NAMES, required=True)
    p.add_argument("--interp", help="interpretation (compact or explicit)")
    p.add_argument("--states", help="state set for trap-set/class/strict-class")
    p.add_argument("--kind", choices=kinds, help="graph kind for trap-set/class/strict-class")

    p = sub.add_parser("verify", help="run every cross-route property on a generated corpus")
    p.add_argument("--corpus", required=True, help="JSON list of generator configs")
    p.add_argument("--format", dest="fmt", choices=("text", "json"), default="text")
    return parser


def _read_program(path: str) -> Program:
    try:
        if path == "-":
            text = sys.stdin.read()
        else:
            with open(path, encoding="utf-8") as fh:
                text = fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    return parse_program(text)


def _parse_states(text: str, p: Program) -> list[int]:
    parts = text.split(";") if "=" in text else text.split(",")
    states = [parse_state(part, p.atoms) for part in parts if part.strip()]
    if not states:
        raise UsageError("no states given")
    return sorted(set(states))


def _atoms_line(p: Program) -> str:
    return f"% atoms: {' '.join(p.atoms)}\n"


def _program_text(p: Program) -> str:
    return format_program(p) + _atoms_line(p)


def _dump(obj) -> str:
    return json.dumps(obj) + "\n"


def _cmd_parse(args, cfg, p):
    if cfg.fmt == "json":
        return _dump({"atoms": list(p.atoms), "rules": format_program(p).splitlines()})
    return _program_text(p)


def _cmd_completion(args, cfg, p):
    c = completion(p)
    if cfg.fmt == "json":
        return _dump({
            "atoms": list(p.atoms),
            "completion": {
                p.atoms[a]: [
                    {"pos": [p.atoms[b] for b in sorted(pos)], "neg": [p.atoms[b] for b in sorted(neg)]}
                    for pos, neg in ds
                ]
                for a, ds in enumerate(c.disjuncts)
            },
        })
    return format_completion(c)


def _cmd_lfp(args, cfg, p):
    q = lfp_transform(p, cfg.max_lfp_rules)
    if cfg.fmt == "json":
        return _dump({"atoms": list(q.atoms), "rules": format_program(q).splitlines()})
    return _program_text(q)


def _cmd_graph(args, cfg, p):
    g = build_graph(p, args.kind, cfg.max_atoms_graph)
    if cfg.fmt == "dot":
        return to_dot(g, strict_classes(g) if args.highlight_strict else ())
    if cfg.fmt == "json":
        return graph_to_json(g) + "\n"
    return "".join(f"{g.label(s)} -> {g.label(t)}\n" for s, t in enumerate(g.succ))


def _all_classes(g):
    cycles = strict_classes(g)
    if (1 << len(cycles)) - 1 > MAX_LISTED_CLASSES:
        raise ResourceCapError("class count", (1 << len(cycles)) - 1, MAX_LISTED_CLASSES)
    out = []
    for k in range(1, len(cycles) + 1):
        for combo in combinations(cycles, k):
            out.append(frozenset().union(*combo))
    return out


def _cmd_classes(args, cfg, p):
    g = build_graph(p, args.kind, cfg.max_atoms_graph)
    classes = strict_classes(g) if args.strict else _all_classes(g)
    rendered = sorted(sorted(g.label(s) for s in c) for c in classes)
    if cfg.fmt == "json":
        return _dump({"kind": args.kind, "strict": args.strict, "atoms": list(p.atoms), "classes": rendered})
    return "".join(" ".join(c) + "\n" for c in rendered)


def _cmd_trapspaces(args, cfg, p):
    if args.which == "all":
        ts = enumerate_trap_spaces(p, args.kind, cfg.max_atoms_enum3, cfg.max_lfp_rules)
    elif args.which == "u-minimal":
        if args.kind != Kind.STABLE.value:
            raise UsageError("--u-minimal is only defined for --kind stable")
        ts = u_minimal_stable_trap_spaces(p, cfg.max_atoms_graph, cfg.max_lfp_rules)
    else:
        ts = minimal_trap_spaces(p, args.kind, cfg.max_atoms_graph, cfg.max_lfp_rules)
    if cfg.fmt == "json":
        return ts.to_json() + "\n"
    return "".join(s + "\n" for s in ts.strings()) + _atoms_line(p)


def _cmd_cover(args, cfg, p):
    states = _parse_states(args.states, p)
    result = cover(p, args.kind, states, cfg.max_lfp_rules)
    if cfg.fmt == "json":
        return _dump({
            "kind": args.kind,
            "states": [format_state(s, p.n) for s in states],
            "cover": str(result),
            "atoms": list(p.atoms),
        })
    return f"{result}\n" + _atoms_line(p)


def _cmd_models(args, cfg, p):
    ms = enumerate_models(
        p, args.semantics, args.method,
        max_atoms_enum3=cfg.max_atoms_enum3,
        max_atoms_graph=cfg.max_atoms_graph,
        max_lfp_rules=cfg.max_lfp_rules,
    )
    if cfg.fmt == "json":
        return ms.to_json() + "\n"
    return format_models_text(ms) + _atoms_line(p)


def _check(args, cfg, p) -> bool:
    prop = args.property
    if prop in ("trap-set", "class", "strict-class"):
        if not args.states or not args.kind:
            raise UsageError(f"--property {prop} needs --states and --kind")
        g = build_graph(p, args.kind, cfg.max_atoms_graph)
        states = _parse_states(args.states, p)
        fn = {"trap-set": is_trap_set, "class": is_class, "strict-class": is_strict_class}[prop]
        return fn(g, states)
    if not args.interp:
        raise UsageError(f"--property {prop} needs --interp")
    i3 = parse_interp(args.interp, p.atoms)
    if prop == "supported-trap-space":
        return is_supported_trap_space(p, i3)
    if prop == "stable-trap-space":
        return is_stable_trap_space(p, i3, cfg.max_lfp_rules)
    if prop == "stable-partial":
        return is_stable_partial(p, i3)
    if prop == "supported-partial":
        return is_supported_partial(p, i3)
    if not i3.is_two_valued:
        raise UsageError(f"--property {prop} needs a two-valued interpretation")
    check2 = is_stable_model if prop == "stable-model" else is_supported_model
    return check2(p, i3.truth)


def _run_verify(args) -> tuple[int, str]:
    try:
        with open(args.corpus, encoding="utf-8") as fh:
            raw = json.load(fh)
        configs = [GenConfig(**entry) for entry in raw]
    except (OSError, ValueError, TypeError) as exc:
        raise UsageError(f"bad corpus file {args.corpus}: {exc}") from None
    failed = False
    report = []
    lines = []
    for cfg in configs:
        p = gen_program(cfg)
        results = dict(check_program(p))
        failed |= "FAIL" in results.values()
        report.append({"config": cfg.to_dict(), "atoms": p.n, "results": results})
        tag = f"seed={cfg.seed} n={p.n} rules={len(p.rules)}"
        lines.extend(f"{tag} {name} {status}\n" for name, status in results.items())
    if args.fmt == "json":
        out = _dump(report)
    else:
        out = "".join(lines) + ("FAILED\n" if failed else "ALL PASSED\n")
    return (EXIT_VERIFY if failed else EXIT_OK), out


COMMANDS = {
    "parse": _cmd_parse,
    "completion": _cmd_completion,
    "lfp": _cmd_lfp,
    "graph": _cmd_graph,
    "classes": _cmd_classes,
    "trapspaces": _cmd_trapspaces,
    "cover": _cmd_cover,
    "models": _cmd_models,
}


def run(argv: Sequence[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        if args.command == "verify":
            code, out = _run_verify(args)
            stdout.write(out)
            return code
        cfg = RunConfig(args.max_atoms_graph, args.max_atoms_enum3, args.max_lfp_rules, args.fmt)
        if cfg.fmt == "dot" and args.command != "graph":
            raise UsageError("--format dot is only available for graph")
        p = _read_program(args.program)
        if args.command == "check":
            ok = _check(args, cfg, p)
            stdout.write(_dump({"property": args.property, "result": ok}) if cfg.fmt == "json" else f"{str(ok).lower()}\n")
            return EXIT_OK if ok else EXIT_FALSE
        stdout.write(COMMANDS[args.command](args, cfg, p))
        return EXIT_OK
    except UsageError as exc:
        stderr.write(f"usage error: {exc}\n")
        return EXIT_USAGE
    except ProgramSyntaxError as exc:
        stderr.write(f"parse error: {exc}\n")
        return EXIT_PARSE
    except ResourceCapError as exc:
        stderr.write(f"resource cap exceeded: {exc}\n")
        return EXIT_CAP
    except (InterpretationError, PreconditionError, UnsupportedError) as exc:
        stderr.write(f"usage error: {exc}\n")
        return EXIT_USAGE
    except SystemExit as exc:  # --help
        return EXIT_OK if not exc.code else EXIT_USAGE


def main() -> None:
    sys.exit(run())
