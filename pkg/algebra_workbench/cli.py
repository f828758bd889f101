"""Command-line front end: `alg <command> ...`.

Exit status 0 means every reported verdict holds (possibly up to a bound), 1 means some
verdict fails and its witness was printed, 2 means a usage, file or cap error.
"""
import argparse
import json
import logging
import random
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path
from typing import Any, Callable, Iterable, Sequence, TextIO

from . import constants as const
from .config import OUTPUT_FORMATS, POLICIES, RunConfig, resolve
from .errors import CapExceeded, InvalidParameter, WorkbenchError
from .library.AlgebraClasses import check_membership, class_by_name
from .library.AlgebraFile import load_algebra
from .library.Catalog import build_catalog, catalog_from_source, save_catalog
from .library.Congruences import all_congruences, is_semisimple
from .library.Deduction import MatrixFamily, consequence, filter_lattice, translation_by_style, translation_for
from .library.extensions.SimplePrinciples import check_simple_il
from .library.FiniteAlgebra import FiniteAlgebra
from .library.Formula import Formula, print_formula, random_formula
from .library.FormulaParser import parse, parse_list
from .library.Generators import generator_by_name
from .library.Glivenko import (
    SHIPPED_PAIRS,
    GlivenkoPair,
    glivenko_check,
    lukinfty_ddt_countermodel,
    pair_by_name,
)
from .library.Principles import (
    LemCrossEntry,
    LemCrossReport,
    antiadmissible,
    check_ddt,
    check_dual_il,
    check_il,
    check_pcp,
    check_rule,
    ddt_from_cil,
    default_shape,
    least_lem_index,
)
from .library.SchemeFamilies import LEM_FORMS, family_by_name, lem_axiom, parse_token
from .library.Search import canonical_hash
from .library.Verdict import Verdict, combine

EXIT_OK = 0
EXIT_FAILS = 1
EXIT_USAGE = 2


class Output:
    """Writes either text lines or one JSON record per verdict."""
    def __init__(self, mode: str, stream: TextIO | None = None) -> None:
        self.mode = mode
        self.stream = stream or sys.stdout

    def report(self, lines: Iterable[str], record: dict[str, Any]) -> None:
        if self.mode == "records":
            self.stream.write(json.dumps(record, sort_keys=True) + "\n")
        else:
            for line in lines:
                self.stream.write(line + "\n")


# Argument helpers
def _algebra(source: str) -> FiniteAlgebra:
    return load_algebra(source) if Path(source).is_file() else generator_by_name(source)

def _bound(text: str) -> int | None:
    if text == "auto":
        return None
    try:
        value = int(text)
    except ValueError:
        raise InvalidParameter(f"bound must be 'auto' or a positive integer, got {text!r}") from None
    if value < 1:
        raise InvalidParameter("bound must be at least 1")
    return value

def _index_range(text: str) -> range:
    first, sep, last = text.partition("..")
    try:
        low, high = int(first), int(last if sep else first)
    except ValueError:
        raise InvalidParameter(f"index range must look like 1..6, got {text!r}") from None
    if low < 1 or high < low:
        raise InvalidParameter(f"index range {text!r} is empty or starts below 1")
    return range(low, high + 1)

def _formulas(text: str | None) -> tuple[Formula, ...]:
    return parse_list(text) if text else ()

def _exit_for(verdicts: Sequence[Verdict]) -> int:
    return EXIT_FAILS if combine(list(verdicts)).failed else EXIT_OK

def _verdict_record(command: str, subject: str, verdict: Verdict, **extra: Any) -> dict[str, Any]:
    return {"command": command, "subject": subject, **verdict.to_record(), **extra}

def _ordered_map(function: Callable, items: Sequence, jobs: int) -> list:
    if jobs > 1 and len(items) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(function, items))
    return [function(item) for item in items]


# Commands
def cmd_check(args: argparse.Namespace, config: RunConfig, out: Output) -> int:
    algebra = _algebra(args.algebra)
    algebra_class = class_by_name(args.algebra_class)
    report = check_membership(algebra, algebra_class)
    verdict = "true" if report.verdict else "false"
    out.report(
        [f"member of {algebra_class.name}: {verdict}"] + report.lines(algebra),
        {
            "command": "check",
            "subject": algebra.name,
            "class": algebra_class.name,
            "member": report.verdict,
            "failures": [{"law": label, "valuation": valuation} for label, valuation in report.failures],
        },
    )
    return EXIT_OK if report.verdict else EXIT_FAILS

def cmd_congruences(args: argparse.Namespace, config: RunConfig, out: Output) -> int:
    algebra = _algebra(args.algebra)
    lattice = all_congruences(algebra, config.congruence_cap)
    out.report(
        [theta.format(algebra) for theta in lattice] + [f"{len(lattice)} congruences"],
        {"command": "congruences", "subject": algebra.name, "congruences": [list(t.blocks) for t in lattice]},
    )
    return EXIT_OK

def cmd_semisimple(args: argparse.Namespace, config: RunConfig, out: Output) -> int:
    algebra = _algebra(args.algebra)
    certificate = is_semisimple(algebra, config.congruence_cap)
    line = f"semisimple: {'true' if certificate.semisimple else 'false'}"
    if certificate.simple:
        line += " (simple)"
    out.report(
        [line] + [f"coatom {theta.format(algebra)}" for theta in certificate.coatoms],
        {
            "command": "semisimple",
            "subject": algebra.name,
            "semisimple": certificate.semisimple,
            "simple": certificate.simple,
            "coatoms": [list(theta.blocks) for theta in certificate.coatoms],
        },
    )
    return EXIT_OK if certificate.semisimple else EXIT_FAILS

def cmd_filters(args: argparse.Namespace, config: RunConfig, out: Output) -> int:
    algebra = _algebra(args.algebra)
    translation = translation_by_style(args.translation) if args.translation else translation_for(algebra)
    lattice = filter_lattice(algebra, translation, config.congruence_cap)
    maximal = {f.mask for f in lattice.maximal}
    out.report(
        [f.format(algebra) + (" (maximal)" if f.mask in maximal else "") for f in lattice.filters],
        {
            "command": "filters",
            "subject": algebra.name,
            "translation": translation.style,
            "filters": [list(f.elements) for f in lattice.filters],
            "maximal": [list(f.elements) for f in lattice.maximal],
        },
    )
    return EXIT_OK

def _matrices(config: RunConfig, policy: str | None) -> tuple[MatrixFamily, str]:
    catalog = catalog_from_source(config.catalog, config.jobs)
    family = MatrixFamily.from_algebras(catalog.algebras, policy or config.policy, cap=config.congruence_cap)
    return family, catalog.algebra_class

def _rule_command(name: str, check: Callable[..., Verdict]):
    def command(args: argparse.Namespace, config: RunConfig, out: Output) -> int:
        family, subject = _matrices(config, args.designate)
        gamma, phi = _formulas(args.gamma), parse(args.phi)
        verdict = check(family, gamma, phi, **({"simple_only": True} if getattr(args, "simple", False) else {}))
        rule = f"{'; '.join(print_formula(g) for g in gamma)} |- {print_formula(phi)}"
        out.report([f"{name} {rule}: {verdict.text()}"], _verdict_record(name, subject, verdict, rule=rule))
        return _exit_for([verdict])
    return command

cmd_consequence = _rule_command("consequence", consequence)
cmd_rule_check = _rule_command("rule-check", check_rule)
cmd_antiadmissible = _rule_command("antiadmissible", antiadmissible)

def _translation(args: argparse.Namespace, algebra: FiniteAlgebra):
    return translation_by_style(args.translation) if args.translation else translation_for(algebra)

def cmd_il_check(args: argparse.Namespace, config: RunConfig, out: Output) -> int:
    algebra = _algebra(args.algebra)
    translation = _translation(args, algebra)
    family = family_by_name(args.family)
    bound = _bound(args.bound)
    if args.simple:
        report = check_simple_il(algebra, translation, family, bound, args.exact)
        verdicts = [("simple-il", report.il), ("simple-dual-il", report.dual)]
    elif args.dual:
        verdicts = [("dual-il", check_dual_il(algebra, translation, family, bound, args.exact))]
    else:
        verdicts = [("il", check_il(algebra, translation, family, bound, args.exact))]
    for principle, verdict in verdicts:
        out.report(
            [f"{principle} {family.name} on {algebra.name}: {verdict.text(algebra.labels)}"],
            _verdict_record(principle, algebra.name, verdict, family=family.name),
        )
    return _exit_for([verdict for _, verdict in verdicts])

def cmd_ddt_check(args: argparse.Namespace, config: RunConfig, out: Output) -> int:
    algebra = _algebra(args.algebra)
    translation = _translation(args, algebra)
    bound = _bound(args.bound)
    if args.from_cil:
        family = ddt_from_cil(family_by_name(args.from_cil), args.shape or default_shape(algebra), bound or algebra.size)
    elif args.family:
        family = family_by_name(args.family)
    else:
        raise InvalidParameter("ddt-check needs --family or --from-cil")
    verdict = check_ddt(algebra, translation, family, bound, args.exact)
    out.report(
        [f"ddt {family.name} on {algebra.name}: {verdict.text(algebra.labels)}"],
        _verdict_record("ddt", algebra.name, verdict, family=family.name),
    )
    return _exit_for([verdict])

_DEFAULT_JOINS = {"fl": "(1 /\\ p) \\/ (1 /\\ q)", "modal": "[]p \\/ []q"}

def cmd_pcp_check(args: argparse.Namespace, config: RunConfig, out: Output) -> int:
    algebra = _algebra(args.algebra)
    translation = _translation(args, algebra)
    join_scheme = parse_list(args.join or _DEFAULT_JOINS[translation.style])
    verdict = check_pcp(algebra, translation, join_scheme)
    scheme = "; ".join(print_formula(f) for f in join_scheme)
    out.report(
        [f"pcp {{{scheme}}} on {algebra.name}: {verdict.text(algebra.labels)}"],
        _verdict_record("pcp", algebra.name, verdict, join=scheme),
    )
    return _exit_for([verdict])

def cmd_lem_check(args: argparse.Namespace, config: RunConfig, out: Output) -> int:
    algebra = _algebra(args.algebra)
    class_name, _ = parse_token(args.algebra_class)
    n_range = _index_range(args.n)
    least = least_lem_index(algebra, args.form, class_name, n_range)
    if least is None:
        line = f"no n <= {n_range[-1]} validates {print_formula(lem_axiom(args.form, class_name, n_range[-1]))}"
    else:
        line = f"least n = {least}: {print_formula(lem_axiom(args.form, class_name, least))} is valid"
    out.report(
        [line],
        {"command": "lem-check", "subject": algebra.name, "form": args.form, "least_n": least, "range": list(n_range)},
    )
    return EXIT_OK if least is not None else EXIT_FAILS

def _cross_entry(job: tuple[FiniteAlgebra, str, tuple[int, ...], str, int]) -> LemCrossEntry:
    algebra, class_name, n_range, form, cap = job
    return LemCrossEntry(
        algebra.name,
        is_semisimple(algebra, cap).semisimple,
        least_lem_index(algebra, form, class_name, n_range),
    )

def cmd_cross_check(args: argparse.Namespace, config: RunConfig, out: Output) -> int:
    catalog = catalog_from_source(config.catalog, config.jobs)
    class_name, _ = parse_token(args.algebra_class)
    n_range = tuple(_index_range(args.n))
    jobs = [(algebra, class_name, n_range, args.form, config.congruence_cap) for algebra in catalog]
    report = LemCrossReport(class_name, args.form, n_range, tuple(_ordered_map(_cross_entry, jobs, config.jobs)))
    lines = [
        f"DISAGREE {e.algebra}: semisimple={e.semisimple} least_n={e.least_n}" for e in report.discrepancies
    ]
    lines.append(f"agree: {'true' if report.agree else 'false'} ({len(report.entries)} algebras)")
    out.report(
        lines,
        {
            "command": "cross-check",
            "subject": catalog.algebra_class,
            "agree": report.agree,
            "entries": [{"algebra": e.algebra, "semisimple": e.semisimple, "least_n": e.least_n} for e in report.entries],
        },
    )
    return EXIT_OK if report.agree else EXIT_FAILS

def _pair(args: argparse.Namespace) -> GlivenkoPair:
    if args.pair:
        return pair_by_name(args.pair)
    if not (args.weak and args.strong and args.scheme):
        raise InvalidParameter("glivenko needs --pair or all of --weak, --strong and --scheme")
    return GlivenkoPair("custom", args.weak, args.strong, parse(args.scheme))

def cmd_glivenko(args: argparse.Namespace, config: RunConfig, out: Output) -> int:
    pair = _pair(args)
    weak = catalog_from_source(pair.weak, config.jobs)
    strong = catalog_from_source(pair.strong, config.jobs)
    gamma = _formulas(args.gamma)
    formulas = list(_formulas(args.phi))
    if args.sample:
        rng = random.Random(config.seed)
        formulas += [random_formula(rng, args.max_nodes) for _ in range(args.sample)]
        out.report([f"seed: {config.seed}"], {"command": "glivenko", "seed": config.seed})
    if not formulas:
        raise InvalidParameter("glivenko needs --phi or --sample")
    mismatches = 0
    for phi in formulas:
        report = glivenko_check(pair, gamma, phi, config.policy, weak, strong)
        mismatches += not report.match
        out.report(report.lines(), {"command": "glivenko", **report.to_record()})
    return EXIT_FAILS if mismatches else EXIT_OK

def cmd_luk_counterexample(args: argparse.Namespace, config: RunConfig, out: Output) -> int:
    certificate = lukinfty_ddt_countermodel(args.n)
    valuation = certificate.valuation
    out.report(
        certificate.lines(),
        {
            "command": "luk-counterexample",
            "n": valuation.n,
            "epsilon": str(valuation.epsilon),
            "i_max": valuation.i_max,
            "p": str(valuation.p),
            "q": [str(v) for v in valuation.q],
            "chain_premises": [str(v) for v in certificate.chain_premises],
            "negation_premises": [str(v) for v in certificate.negation_premises],
            "conclusion": str(certificate.conclusion),
            "passed": certificate.passed,
        },
    )
    return EXIT_OK if certificate.passed else EXIT_FAILS

def _check_search_cap(class_token: str, size: int, config: RunConfig) -> None:
    limit = config.modal_cap if class_by_name(class_token).modal else config.fl_cap
    if size > limit:
        raise CapExceeded(f"size {size} is above the search cap {limit} for {class_token}")

def cmd_enumerate(args: argparse.Namespace, config: RunConfig, out: Output) -> int:
    _check_search_cap(args.algebra_class, args.size, config)
    catalog = build_catalog(args.algebra_class, args.size, config.jobs, args.min)
    lines = [f"size {n}: {count}" for n, count in catalog.counts().items() if n >= args.min]
    lines += [f"{algebra.name} {canonical_hash(algebra)}" for algebra in catalog]
    if args.out:
        lines.append(f"wrote {save_catalog(catalog, args.out)}")
    out.report(
        lines,
        {
            "command": "enumerate",
            "subject": catalog.algebra_class,
            "counts": {str(n): c for n, c in catalog.counts().items() if n >= args.min},
            "entries": [{"name": a.name, "hash": canonical_hash(a)} for a in catalog],
        },
    )
    return EXIT_OK


# Parser
def _common_flags(default: object) -> argparse.ArgumentParser:
    # subcommand copies of the global flags default to SUPPRESS
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", dest="output", choices=OUTPUT_FORMATS, default=default)
    common.add_argument("--seed", type=int, default=default, help=f"sampling seed (default {const.DEFAULT_SEED})")
    common.add_argument("--jobs", type=int, default=default)
    common.add_argument("--cap", dest="congruence_cap", type=int, default=default, help="congruence cap")
    common.add_argument("--catalog", default=default, help=f"catalog directory or source token (env {const.CATALOG_ENV})")
    common.add_argument("--verbose", action="store_true", default=default)
    return common

def _with_translation(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--translation", choices=("fl", "modal"), default=None)

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="alg", description="Finite algebra workbench", parents=[_common_flags(None)])
    common = _common_flags(argparse.SUPPRESS)
    commands = parser.add_subparsers(dest="command", required=True)

    def add(name: str, handler: Callable, help_text: str) -> argparse.ArgumentParser:
        sub = commands.add_parser(name, parents=[common], help=help_text)
        sub.set_defaults(handler=handler)
        return sub

    sub = add("check", cmd_check, "check membership in a class")
    sub.add_argument("algebra")
    sub.add_argument("--class", dest="algebra_class", required=True)

    add("congruences", cmd_congruences, "list all congruences").add_argument("algebra")
    add("semisimple", cmd_semisimple, "decide semisimplicity").add_argument("algebra")

    sub = add("filters", cmd_filters, "list deductive filters")
    sub.add_argument("algebra")
    _with_translation(sub)

    for name, handler, help_text in (
        ("consequence", cmd_consequence, "decide gamma |= phi over a catalog"),
        ("rule-check", cmd_rule_check, "decide validity of a rule over a catalog"),
        ("antiadmissible", cmd_antiadmissible, "decide antiadmissibility of a rule over a catalog"),
    ):
        sub = add(name, handler, help_text)
        sub.add_argument("--gamma", default="")
        sub.add_argument("--phi", required=True)
        sub.add_argument("--designate", choices=POLICIES, default=None)
        if name == "antiadmissible":
            sub.add_argument("--simple", action="store_true", help="maximal filters only")

    sub = add("il-check", cmd_il_check, "check an inconsistency lemma family")
    sub.add_argument("algebra")
    sub.add_argument("--family", required=True)
    sub.add_argument("--bound", default="auto")
    sub.add_argument("--exact", action="store_true")
    sub.add_argument("--dual", action="store_true")
    sub.add_argument("--simple", action="store_true")
    _with_translation(sub)

    sub = add("ddt-check", cmd_ddt_check, "check a deduction theorem family")
    sub.add_argument("algebra")
    sub.add_argument("--family")
    sub.add_argument("--from-cil", dest="from_cil")
    sub.add_argument("--shape", choices=("fusion", "meet"))
    sub.add_argument("--bound", default="auto")
    sub.add_argument("--exact", action="store_true")
    _with_translation(sub)

    sub = add("pcp-check", cmd_pcp_check, "check proof by cases for a join scheme")
    sub.add_argument("algebra")
    sub.add_argument("--join")
    _with_translation(sub)

    sub = add("lem-check", cmd_lem_check, "find the least n validating an excluded-middle axiom")
    sub.add_argument("algebra")
    sub.add_argument("--class", dest="algebra_class", required=True)
    sub.add_argument("--n", default="1..6")
    sub.add_argument("--form", choices=LEM_FORMS, default="pcp")

    sub = add("cross-check", cmd_cross_check, "compare semisimplicity with excluded middle over a catalog")
    sub.add_argument("--class", dest="algebra_class", required=True)
    sub.add_argument("--n", default="1..6")
    sub.add_argument("--form", choices=LEM_FORMS, default="pcp")

    sub = add("glivenko", cmd_glivenko, "compare a logic pair under a translation scheme")
    sub.add_argument("--pair", choices=[p.name for p in SHIPPED_PAIRS])
    sub.add_argument("--weak")
    sub.add_argument("--strong")
    sub.add_argument("--scheme")
    sub.add_argument("--phi")
    sub.add_argument("--gamma", default="")
    sub.add_argument("--sample", type=int, default=0)
    sub.add_argument("--max-nodes", dest="max_nodes", type=int, default=const.DEFAULT_SAMPLE_NODES)

    sub = add("luk-counterexample", cmd_luk_counterexample, "certify the rational deduction countermodel")
    sub.add_argument("--n", type=int, required=True)

    sub = add("enumerate", cmd_enumerate, "enumerate a class up to isomorphism")
    sub.add_argument("--class", dest="algebra_class", required=True)
    sub.add_argument("--size", type=int, required=True)
    sub.add_argument("--min", type=int, default=1)
    sub.add_argument("--out")
    return parser


def _configure_logging(verbose: bool) -> None:
    logging.basicConfig(
        level=logging.DEBUG if verbose else logging.WARNING,
        stream=sys.stderr,
        format="%(levelname)s %(name)s %(message)s",
    )

def main(argv: Sequence[str] | None = None, stdout: TextIO | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exit_request:
        return EXIT_USAGE if exit_request.code else EXIT_OK
    try:
        config = resolve(
            output=args.output,
            seed=args.seed,
            jobs=args.jobs,
            congruence_cap=args.congruence_cap,
            catalog=args.catalog,
            verbose=args.verbose,
        )
        _configure_logging(config.verbose)
        return args.handler(args, config, Output(config.output, stdout))
    except WorkbenchError as error:
        print(f"error ({type(error).__name__}): {error}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
