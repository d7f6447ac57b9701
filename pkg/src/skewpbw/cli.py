"""Command-line front end.

Exit codes: 0 true/pass, 1 false/counterexample, 2 hypotheses unsatisfied,
3 invalid input, 4 resource bound exceeded.
"""

import argparse
import json
import sys
from dataclasses import dataclass, field

from . import classifiers as cl
from . import finite_rings as fr
from . import oracles as orc
from . import spectra
from .errors import (AssociativityCounterexample, AxiomViolation, HypothesisViolation,
                     InvalidSpec, LawViolation, NotInvariant, ParseError,
                     ResourceBoundExceeded, SkewPBWError)
from .fixtures import DESCRIPTIONS, build_extension
from .sigma_delta import compatibility_report

EXIT_TRUE, EXIT_FALSE, EXIT_UNSAT, EXIT_INVALID, EXIT_RESOURCE = 0, 1, 2, 3, 4

PROPERTIES = {"unit": "units", "nilpotent": "nilpotents", "idempotent": "idempotents",
              "vnr": "vnr", "pi_regular": "pi_regular", "vnl": "vnl", "clean": "clean"}


class InputError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # usage errors are invalid input, not "hypotheses unsatisfied"
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INVALID, f"{self.prog}: error: {message}\n")


@dataclass
class SessionConfig:
    command: str
    spec_path: str = None
    fixture: str = None
    element_expressions: list = field(default_factory=list)
    bounds: orc.SearchBounds = field(default_factory=orc.SearchBounds)
    output_format: str = "text"
    verbosity: int = 0
    property: str = None
    theorem: str = None
    max_degree: int = None
    inject_fault: bool = False


def load_description(cfg):
    if cfg.fixture:
        if cfg.fixture not in DESCRIPTIONS:
            raise InputError(f"unknown fixture {cfg.fixture!r}; choose from {sorted(DESCRIPTIONS)}")
        return DESCRIPTIONS[cfg.fixture]
    if not cfg.spec_path:
        raise InputError("a --spec file or --fixture name is required")
    try:
        with open(cfg.spec_path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {cfg.spec_path}: {exc.strerror}") from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"malformed JSON in {cfg.spec_path} at line {exc.lineno} column "
                         f"{exc.colno} (char {exc.pos}): {exc.msg}") from None


def load_extension(cfg):
    desc = load_description(cfg)
    if cfg.max_degree is not None and cfg.command == "elem nf":
        desc = dict(desc, max_degree=cfg.max_degree)
    return build_extension(desc)


def _elems(R, s):
    return [R.format_element(a) for a in sorted(s)]


# -- commands ------------------------------------------------------------------------------
# each returns (exit code, report dict, text)

def cmd_ring_inspect(cfg):
    desc = load_description(cfg)
    R = fr.build_ring(desc["ring"] if isinstance(desc, dict) and "ring" in desc else desc)
    rep = {"ring": R.name, "order": R.order, "characteristic": R.characteristic,
           "N": _elems(R, fr.nilpotents(R)), "U": _elems(R, fr.units(R)),
           "Idem": _elems(R, fr.idempotents(R)), "center": _elems(R, fr.center(R)),
           "J": _elems(R, fr.jacobson_radical(R).elements),
           "N_star": _elems(R, fr.prime_radical(R).elements),
           "flags": fr.ring_class_report(R).as_dict()}
    lines = [f"ring: {R.name} (order {R.order}, characteristic {rep['characteristic']})"]
    for key in ("N", "U", "Idem", "center", "J", "N_star"):
        lines.append(f"{key} = {{{', '.join(rep[key])}}}")
    lines += [f"{k}: {str(v).lower()}" for k, v in rep["flags"].items()]
    return EXIT_TRUE, rep, "\n".join(lines)


def _compat_json(R, compat):
    out = compat.as_dict()
    lit = R.format_element
    wits = {}
    for kind, w in out["witnesses"].items():
        if kind == "sigma_rigid":
            wits[kind] = {"r": lit(w[0]), "exp": list(w[1])}
        else:
            wits[kind] = {"a": lit(w[0]), "b": lit(w[1]), "exp": list(w[2])}
    out["witnesses"] = wits
    return out


def cmd_ext_validate(cfg):
    spec = load_extension(cfg)
    prof = cl.hypothesis_profile(spec)
    compat = compatibility_report(spec.system)
    diag = spec.diagnostics
    rep = {"ring": spec.base.name, "n": spec.n, "validated": spec.validated,
           "associativity_triples": diag.associativity_triples if diag else 0,
           "profile": prof.as_dict(), "compatibility": _compat_json(spec.base, compat),
           "warnings": list(spec.warnings)}
    lines = [f"extension over {spec.base.name} with {spec.n} variable(s): valid",
             f"associativity triples checked: {rep['associativity_triples']}"]
    lines += [f"{k}: {str(v).lower()}" for k, v in rep["profile"].items()]
    lines += [f"warning: {w}" for w in rep["warnings"]]
    return EXIT_TRUE, rep, "\n".join(lines)


def _parse_all(spec, cfg):
    if not cfg.element_expressions:
        raise InputError("--expr is required")
    return [spec.parse(e) for e in cfg.element_expressions]


def cmd_elem_nf(cfg):
    spec = load_extension(cfg)
    out = []
    for expr, f in zip(cfg.element_expressions, _parse_all(spec, cfg)):
        out.append({"expr": expr, "normal_form": f.to_text(), "degree": f.degree,
                    "terms": f.to_json()["terms"]})
    return EXIT_TRUE, {"elements": out}, "\n".join(e["normal_form"] for e in out)


def cmd_elem_classify(cfg):
    spec = load_extension(cfg)
    if cfg.property not in PROPERTIES:
        raise InputError(f"--property must be one of {sorted(PROPERTIES)}")
    theorem = PROPERTIES[cfg.property]
    results, code = [], EXIT_TRUE
    for expr, f in zip(cfg.element_expressions, _parse_all(spec, cfg)):
        verdict = orc.CLASSIFIERS[theorem](f)
        oracle = orc.ORACLES[theorem](f, cfg.bounds)
        results.append({"expr": expr, "element": f.to_text(), "verdict": verdict.to_json(),
                        "oracle": oracle.to_json()})
        c = {cl.TRUE: EXIT_TRUE, cl.FALSE: EXIT_FALSE, cl.UNSAT: EXIT_UNSAT}[verdict.value]
        code = max(code, c)
    lines = []
    for r in results:
        v = r["verdict"]
        line = f"{r['element']}: {cfg.property} = {v['value']}"
        if v.get("missing_hypotheses"):
            line += f" (missing {', '.join(v['missing_hypotheses'])})"
        lines.append(line)
        o = r["oracle"]
        w = "" if o["witness"] is None else f", witness {o['witness']}"
        lines.append(f"  oracle: {o['value']}{w}")
    return code, {"property": cfg.property, "results": results}, "\n".join(lines)


def _fault(theorem):
    base = orc.CLASSIFIERS.get(theorem, cl.product_in_nil)
    flip = {cl.TRUE: cl.FALSE, cl.FALSE: cl.TRUE, cl.UNSAT: cl.UNSAT}

    def corrupted(*args):
        v = base(*args)
        return cl.Verdict(flip[v.value], v.theorem, v.witness, v.missing)
    return corrupted


def cmd_verify(cfg):
    spec = load_extension(cfg)
    classifier = _fault(cfg.theorem) if cfg.inject_fault else None
    report = orc.theorem_crosscheck(spec, cfg.theorem, cfg.bounds, classifier)
    rep = report.to_json()
    if report.hypotheses_unsatisfied:
        code = EXIT_UNSAT
    elif report.counterexamples:
        code = EXIT_FALSE
    else:
        code = EXIT_TRUE
    lines = [f"theorem {cfg.theorem} over {spec.base.name}: swept {report.swept} ({report.coverage})",
             f"agreements: {report.agreements}/{report.swept}",
             f"counterexamples: {len(report.counterexamples)}",
             f"unconfirmed: {len(report.unconfirmed)}"]
    if report.hypotheses_unsatisfied:
        lines.append(f"hypotheses unsatisfied: {', '.join(report.hypotheses_unsatisfied)}")
    for c in report.counterexamples:
        lines.append(f"  counterexample {c['element']}: classifier {c['classifier']}, "
                     f"oracle {c['oracle']['value']} with {c['oracle']['witness']}")
    return code, rep, "\n".join(lines)


def cmd_spectra(cfg):
    spec = load_extension(cfg)
    rep = spectra.spectra_report(spec)
    code = EXIT_UNSAT if "missing_hypotheses" in rep["extension"] else EXIT_TRUE
    return code, rep, spectra.render_text(rep)


COMMANDS = {"ring inspect": cmd_ring_inspect, "ext validate": cmd_ext_validate,
            "elem nf": cmd_elem_nf, "elem classify": cmd_elem_classify,
            "verify": cmd_verify, "spectra": cmd_spectra}


# -- argument parsing -------------------------------------------------------------------------

def _common(p):
    p.add_argument("--spec", dest="spec_path", help="JSON ring or extension description")
    p.add_argument("--fixture", help=f"built-in extension: {', '.join(sorted(DESCRIPTIONS))}")
    p.add_argument("--format", dest="output_format", choices=("text", "json"), default="text")
    p.add_argument("-v", "--verbose", dest="verbosity", action="count", default=0)


def _bounds(p):
    p.add_argument("--max-degree", type=int, default=None,
                   help="search degree (classify), sweep degree (verify), engine bound (nf)")
    p.add_argument("--max-power", type=int, default=None)
    p.add_argument("--max-candidates", type=int, default=65536)
    p.add_argument("--seed", type=int, default=None,
                   help="enables seeded sampling beyond max-candidates")


def build_parser():
    parser = _Parser(prog="skewpbw", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="group", required=True, parser_class=_Parser)

    ring = sub.add_parser("ring").add_subparsers(dest="action", required=True, parser_class=_Parser)
    _common(ring.add_parser("inspect", help="element sets and class flags of a finite ring"))

    ext = sub.add_parser("ext").add_subparsers(dest="action", required=True, parser_class=_Parser)
    _common(ext.add_parser("validate", help="validate an extension and print its profile"))

    elem = sub.add_parser("elem").add_subparsers(dest="action", required=True, parser_class=_Parser)
    for name in ("nf", "classify"):
        p = elem.add_parser(name)
        _common(p)
        _bounds(p)
        p.add_argument("--expr", action="append", default=[], required=True)
        if name == "classify":
            p.add_argument("--property", required=True, choices=sorted(PROPERTIES))

    p = sub.add_parser("verify", help="crosscheck a theorem's classifier against its oracle")
    p.add_argument("theorem", choices=orc.THEOREMS)
    _common(p)
    _bounds(p)
    p.add_argument("--search-degree", type=int, default=3)
    p.add_argument("--inject-fault", action="store_true", help=argparse.SUPPRESS)

    _common(sub.add_parser("spectra", help="maximal ideals and Gelfand verdicts"))
    return parser


def make_config(args):
    command = args.group if args.group in ("verify", "spectra") else f"{args.group} {args.action}"
    kw = {}
    if hasattr(args, "max_candidates"):
        search = getattr(args, "search_degree", None)
        if command == "verify":
            kw = dict(max_degree=search, sweep_degree=1 if args.max_degree is None else args.max_degree)
        elif args.max_degree is not None and command == "elem classify":
            kw = dict(max_degree=args.max_degree)
        try:
            bounds = orc.SearchBounds(max_power=args.max_power, max_candidates=args.max_candidates,
                                      seed=args.seed, **kw)
        except ValueError as exc:
            raise InputError(str(exc)) from None
    else:
        bounds = orc.SearchBounds()
    return SessionConfig(command=command, spec_path=args.spec_path, fixture=args.fixture,
                         element_expressions=list(getattr(args, "expr", [])), bounds=bounds,
                         output_format=args.output_format, verbosity=args.verbosity,
                         property=getattr(args, "property", None),
                         theorem=getattr(args, "theorem", None),
                         max_degree=getattr(args, "max_degree", None),
                         inject_fault=getattr(args, "inject_fault", False))


def run(cfg):
    """Execute one command; returns ``(exit code, report, text)``."""
    try:
        return COMMANDS[cfg.command](cfg)
    except InputError as exc:
        return EXIT_INVALID, {"error": "invalid_input", "message": str(exc)}, f"error: {exc}"
    except ParseError as exc:
        return (EXIT_INVALID, {"error": "parse_error", "message": str(exc), "offset": exc.offset},
                f"parse error: {exc}")
    except ResourceBoundExceeded as exc:
        return EXIT_RESOURCE, {"error": "resource_bound", "message": str(exc)}, f"resource bound: {exc}"
    except (InvalidSpec, AxiomViolation, LawViolation, HypothesisViolation, NotInvariant,
            AssociativityCounterexample) as exc:
        return (EXIT_INVALID, {"error": type(exc).__name__, "message": str(exc)},
                f"invalid input: {exc}")
    except SkewPBWError as exc:
        return EXIT_INVALID, {"error": type(exc).__name__, "message": str(exc)}, f"error: {exc}"


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        cfg = make_config(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    code, report, text = run(cfg)
    if cfg.output_format == "json":
        print(json.dumps(report, sort_keys=True, indent=2))
    else:
        print(text, file=sys.stderr if code == EXIT_INVALID or code == EXIT_RESOURCE else sys.stdout)
    return code


if __name__ == "__main__":
    sys.exit(main())
