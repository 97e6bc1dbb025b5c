"""Command line front end (``metabicay``).

Exit status: 0 on success, 1 on a domain error (the error class name is
printed), 2 on a usage error.
"""

from __future__ import annotations

import argparse
import re
import sys
from typing import Sequence

from . import graphio
from . import verify as verify_mod
from .bicayley import (
    BiCayleyGraph,
    BiCayleySpec,
    compute_F,
    compute_I,
    normalizer_decomposition,
    translation_group,
)
from .catalog import CatalogRecord, append_record, now
from .errors import MetabicayError, TooLarge
from .havt import (
    HavtParams,
    certify_with_witnesses,
    constructible_params,
    construct_havt,
    eq3_root,
    solve_eq3,
)
from .metacyclic import GroupElem, GroupParams, enumerate_automorphisms
from .symmetry.analysis import (
    classify_symmetry,
    is_normal_subgroup,
    normalizer,
    survey_small_connection_sets,
    sylow_condition_holds,
)
from .symmetry.search import automorphism_group

SIGN_ALIASES = {"plus": "+", "+": "+", "minus": "-", "-": "-"}


class UsageError(Exception):
    pass


# -- argument helpers -----------------------------------------------------

def _add_group(p: argparse.ArgumentParser, required: bool = True, beta: bool = True) -> None:
    g = p.add_argument_group("group G_{alpha,beta,gamma}(p)")
    g.add_argument("--p", type=int, required=required)
    g.add_argument("--alpha", type=int, required=required)
    if beta:
        g.add_argument("--beta", type=int, required=required)
    g.add_argument("--gamma", type=int, required=required)


def _add_havt(p: argparse.ArgumentParser, sign: bool = True) -> None:
    g = p.add_argument_group("construction parameters")
    g.add_argument("--m", type=int, required=True)
    g.add_argument("--k", type=int, required=True)
    g.add_argument("--l", type=int, required=True)
    if sign:
        g.add_argument("--sign", choices=sorted(SIGN_ALIASES), default="plus")


def _add_source(p: argparse.ArgumentParser) -> None:
    """A graph from a file, a construction, or an explicit bi-Cayley spec."""
    p.add_argument("--in", dest="infile", metavar="PATH", help="read a graph file")
    p.add_argument("--in-format", choices=graphio.FORMATS, help="override the format inferred from the suffix")
    _add_group(p, required=False)
    g = p.add_argument_group("construction parameters")
    g.add_argument("--m", type=int)
    g.add_argument("--k", type=int)
    g.add_argument("--l", type=int)
    g.add_argument("--sign", choices=sorted(SIGN_ALIASES), default="plus")
    s = p.add_argument_group("explicit bi-Cayley spec (words in a and b, comma separated)")
    s.add_argument("--R", default="")
    s.add_argument("--L", default="")
    s.add_argument("--S", default="")


def _group(args) -> GroupParams:
    missing = [f"--{f}" for f in ("p", "alpha", "beta", "gamma") if getattr(args, f, None) is None]
    if missing:
        raise UsageError(f"missing group flag(s): {', '.join(missing)}")
    return GroupParams(args.p, args.alpha, args.beta, args.gamma)


def _havt_params(args) -> HavtParams:
    missing = [f"--{f}" for f in ("m", "k", "l") if getattr(args, f, None) is None]
    if missing:
        raise UsageError(f"missing construction flag(s): {', '.join(missing)}")
    return HavtParams(_group(args), args.m, args.k, args.l, SIGN_ALIASES[args.sign])


_TOKEN = re.compile(r"([ab])(?:\^(-?\d+))?")


def parse_element(word: str, G: GroupParams) -> GroupElem:
    """Parse a word such as ``b a^3``, ``ba^-1`` or ``1``."""
    w = word.replace(" ", "").replace("*", "")
    if w in ("1", "e", ""):
        return G.identity
    x, pos = G.identity, 0
    while pos < len(w):
        m = _TOKEN.match(w, pos)
        if not m:
            raise UsageError(f"cannot parse group element {word!r}")
        gen = G.a if m.group(1) == "a" else G.b
        x = x * gen ** int(m.group(2) or 1)
        pos = m.end()
    return x


def _elements(text: str, G: GroupParams) -> list[GroupElem]:
    return [parse_element(w, G) for w in text.split(",") if w.strip()]


def _bicayley_from_args(args) -> tuple[BiCayleyGraph, HavtParams | None]:
    if args.S:
        G = _group(args)
        spec = BiCayleySpec(G, _elements(args.R, G), _elements(args.L, G), _elements(args.S, G))
        return BiCayleyGraph(spec), None
    params = _havt_params(args)
    return construct_havt(params).graph, params


def _graph_from_args(args):
    if args.infile:
        return graphio.read_graph(args.infile, args.in_format), None
    return _bicayley_from_args(args)


# -- subcommands ----------------------------------------------------------

def cmd_construct(args, out) -> None:
    params = _havt_params(args)
    c = construct_havt(params)
    text = graphio.dumps(c.graph, args.format) if args.format != "summary" else _summary(c)
    if args.out:
        graphio.write_graph(c.graph, args.out, args.format if args.format != "summary" else None)
    else:
        out.write(text)
    if args.catalog:
        aut_order = label = None
        try:
            report = classify_symmetry(c.graph)
            aut_order, label = report.aut_order, report.label
        except TooLarge:
            pass
        G = params.G
        append_record(args.catalog, CatalogRecord(
            G.p, G.alpha, G.beta, G.gamma, params.m, params.k, params.l, params.sign,
            c.n.value, c.graph.n, c.valency, aut_order, label, now()))


def _summary(c) -> str:
    P = c.params
    lines = [
        f"group: {P.G}",
        f"params: m={P.m} k={P.k} l={P.l} sign={P.sign}",
        f"e = {c.e.value}, u = {c.u.value}, n = {c.n.value}",
        "T  = [" + ", ".join(str(t.value) for t in c.T) + "]",
        "T' = [" + ", ".join(str(t.value) for t in c.Tprime) + "]",
        "S  = {" + ", ".join(repr(s) for s in sorted(c.S)) + "}",
        f"vertices: {c.graph.n}",
        f"valency: {c.valency}",
        f"connected: {c.graph.connected}",
    ]
    return "\n".join(lines) + "\n"


def cmd_solve_eq3(args, out) -> None:
    beta = args.beta if args.beta is not None else args.alpha - args.gamma
    G = GroupParams(args.p, args.alpha, beta, args.gamma)
    sols = solve_eq3(G, args.m, args.k, args.l)
    if not sols:
        out.write("no solution\n")
        return
    u = eq3_root(G, args.m, args.k, args.l)
    out.write(f"u = {u.value}\nn+ = {sols[0].value}\nn- = {sols[1].value}\n")


def cmd_classify(args, out) -> None:
    graph, _ = _graph_from_args(args)
    A = automorphism_group(graph)
    report = classify_symmetry(graph, A)
    for key, value in report.as_dict().items():
        out.write(f"{key}: {value}\n")
    if isinstance(graph, BiCayleyGraph):
        syl = sylow_condition_holds(graph, A)
        out.write(f"sylow_condition: {syl}\n")
        if syl:
            out.write(f"translations_normal: {is_normal_subgroup(translation_group(graph), A)}\n")
        else:
            out.write("scope: Sylow condition fails (|G| does not exactly divide |Aut|)\n")


def cmd_aut(args, out) -> None:
    graph, _ = _graph_from_args(args)
    A = automorphism_group(graph)
    out.write(f"order: {A.order()}\n")
    out.write(f"base: {list(A.base)}\n")
    out.write(f"basic_orbit_sizes: {list(A.basic_orbit_sizes)}\n")
    if args.generators:
        for g in A.generators:
            out.write(f"{g!r}\n")


def cmd_normalizer(args, out) -> None:
    graph, _ = _bicayley_from_args(args)
    auts = enumerate_automorphisms(graph.G)
    F = compute_F(graph, auts)
    I = compute_I(graph, auts)
    N = normalizer_decomposition(graph, auts)
    out.write(f"|F|: {F.order()}\n|I|: {len(I)}\nnormalizer_order: {N.order()}\n")
    if args.compare:
        A = automorphism_group(graph)
        brute = normalizer(translation_group(graph), A)
        out.write(f"aut_order: {A.order()}\nmatches_brute_force: {brute == N}\n")


def cmd_enumerate_params(args, out) -> None:
    primes = tuple(args.p) if args.p else None
    for P in constructible_params(args.max_vertices, primes):
        G = P.G
        out.write(f"p={G.p} alpha={G.alpha} beta={G.beta} gamma={G.gamma} "
                  f"m={P.m} k={P.k} l={P.l} sign={P.sign} vertices={2 * G.order}\n")


def cmd_survey(args, out) -> None:
    report = survey_small_connection_sets(_group(args), args.max_size)
    for e in report.entries:
        S = "{" + ", ".join(repr(s) for s in e.S) + "}"
        out.write(f"S={S} class_size={e.class_size} label={e.report.label} "
                  f"aut_order={e.report.aut_order} locally_transitive={e.locally_transitive}\n")
    out.write(f"classes: {len(report.entries)}\ngenerating_sets: {report.generating_sets}\n"
              f"locally_transitive: {len(report.hits)}\n")


def cmd_verify(args, out) -> int:
    checks = verify_mod.run(args.suite, small=args.small)
    for c in checks:
        out.write(c.line() + "\n")
    failed = sum(not c.ok for c in checks)
    out.write(f"{len(checks) - failed} passed, {failed} failed\n")
    return 1 if failed else 0


def cmd_export(args, out) -> None:
    graph, _ = _graph_from_args(args)
    if args.out:
        graphio.write_graph(graph, args.out, args.format)
    else:
        out.write(graphio.dumps(graph, args.format or "edgelist"))


def cmd_witnesses(args, out) -> None:
    c = construct_havt(_havt_params(args))
    cert = certify_with_witnesses(c)
    for key, value in cert.__dict__.items():
        out.write(f"{key}: {value}\n")
    out.write(f"certified: {cert.ok}\n")


# -- parser ---------------------------------------------------------------

class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="metabicay", description="Bi-Cayley graphs over split metacyclic p-groups.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("construct", help="build a half-arc-transitive graph")
    _add_group(p)
    _add_havt(p)
    p.add_argument("--format", choices=(*graphio.FORMATS, "summary"), default="edgelist")
    p.add_argument("--out", metavar="PATH")
    p.add_argument("--catalog", metavar="PATH", help="append a record to this catalog")

    p = sub.add_parser("solve-eq3", help="solve the quadratic defining the construction")
    _add_group(p, beta=False)
    p.add_argument("--beta", type=int)
    _add_havt(p, sign=False)

    for name, help_ in (("classify", "transitivity classification"), ("aut", "automorphism group")):
        p = sub.add_parser(name, help=help_)
        _add_source(p)
        if name == "aut":
            p.add_argument("--generators", action="store_true")

    p = sub.add_parser("normalizer", help="normalizer of the translation group from F and I")
    _add_source(p)
    p.add_argument("--compare", action="store_true", help="also compute it by brute force")

    p = sub.add_parser("enumerate-params", help="list constructible parameter tuples")
    p.add_argument("--max-vertices", type=int, default=250)
    p.add_argument("--p", type=int, action="append")

    p = sub.add_parser("survey", help="locally transitive search over small connection sets")
    _add_group(p)
    p.add_argument("--max-size", type=int, required=True)

    p = sub.add_parser("verify", help="run the self-check suites")
    p.add_argument("--suite", choices=("all", *verify_mod.SUITES), default="all")
    p.add_argument("--small", action="store_true")

    p = sub.add_parser("export", help="convert or write a graph in another format")
    _add_source(p)
    p.add_argument("--format", choices=graphio.FORMATS)
    p.add_argument("--out", metavar="PATH")

    p = sub.add_parser("witnesses", help="certify a construction with its explicit automorphisms")
    _add_group(p)
    _add_havt(p)
    return parser


COMMANDS = {
    "construct": cmd_construct,
    "solve-eq3": cmd_solve_eq3,
    "classify": cmd_classify,
    "aut": cmd_aut,
    "normalizer": cmd_normalizer,
    "enumerate-params": cmd_enumerate_params,
    "survey": cmd_survey,
    "verify": cmd_verify,
    "export": cmd_export,
    "witnesses": cmd_witnesses,
}


def dispatch(argv: Sequence[str], out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(list(argv))
        return COMMANDS[args.command](args, out) or 0
    except UsageError as exc:
        err.write(f"usage error: {exc}\n")
        return 2
    except MetabicayError as exc:
        err.write(f"error: {type(exc).__name__}: {exc}\n")
        return 1


def main() -> None:
    sys.exit(dispatch(sys.argv[1:]))


if __name__ == "__main__":
    main()
