"""Command-line interface.

Exit codes: 0 success (and positive analytic results), 1 negative analytic
result (not regular, no induced reduction, functoriality failure), 2 input
errors, 3 resource caps.  Primary results go to standard output, diagnostics
to standard error.
"""

import argparse
import json
import sys

from . import documents
from .core import (
    MultiNetwork,
    blockmodel_network,
    coarsest_regular_bruteforce,
    enumerate_partitions,
    is_inward_regular,
    is_outward_regular,
    max_regular_partition,
)
from .dot import export_dot
from .errors import (
    EngineError,
    InputError,
    NotAReductionError,
    ResourceLimitError,
    StructuralError,
    WellDefinednessError,
)
from .hypergraph import (
    MultiHypergraph,
    UndirectedHypergraph,
    blockmodel_multihypergraph,
    coarsest_regular_hyper_bruteforce,
    from_undirected,
    is_regular_hyper,
    max_regular_hyper_partition,
)
from .reduction import (
    ActorMap,
    check_functoriality,
    reorder_relations,
    validate_positional_reduction,
)
from .semigroup import (
    DEFAULT_CAP,
    find_absorbing,
    find_identity,
    generator_induced_hom,
    render_table_csv,
    role_semigroup,
)


def _write_text(path, text):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text)


def _load_multirelational(path):
    net = documents.load_network(path)
    if isinstance(net, UndirectedHypergraph):
        raise InputError(f"{path}: undirected hypergraphs carry no named relations; "
                         "convert to fhyper first")
    return net


def _resolve_mode(mode, net):
    if isinstance(net, MultiHypergraph):
        if mode is not None:
            raise InputError("--mode applies only to graph networks")
        return None
    return mode or "both"


def _element_json(element):
    if hasattr(element, "label_pairs"):
        doc = sorted([a, b] for a, b in element.label_pairs())
    else:
        doc = [{"src": s, "tgt": list(t)} for s, t in sorted(element.label_edges())]
    return json.dumps(doc, sort_keys=True)


# ── subcommands ──────────────────────────────────────────────────────────────

def _cmd_check_regular(args):
    net = _load_multirelational(args.network)
    e = documents.load_partition(args.partition, net.actors)
    mode = _resolve_mode(args.mode, net)
    ok = True
    if isinstance(net, MultiNetwork):
        for name, rel in net.relations.items():
            flags = []
            if mode in ("out", "both"):
                out = is_outward_regular(rel, e)
                flags.append(f"outward={_yn(out)}")
                ok = ok and out
            if mode in ("in", "both"):
                inw = is_inward_regular(rel, e)
                flags.append(f"inward={_yn(inw)}")
                ok = ok and inw
            print(f"{name}: " + " ".join(flags))
    else:
        for name, h in net.relations.items():
            reg = is_regular_hyper(h, e)
            print(f"{name}: regular={_yn(reg)}")
            ok = ok and reg
    print(f"result: {'regular' if ok else 'not regular'}")
    return 0 if ok else 1


def _cmd_max_regular(args):
    net = _load_multirelational(args.network)
    mode = _resolve_mode(args.mode, net)
    seed = documents.load_partition(args.seed, net.actors) if args.seed else None
    if isinstance(net, MultiNetwork):
        e = max_regular_partition(net, mode=mode, seed=seed)
    else:
        e = max_regular_hyper_partition(net, seed=seed)
    sys.stdout.write(documents.dumps_canonical(documents.partition_to_doc(e)))
    return 0


def _cmd_blockmodel(args):
    net = _load_multirelational(args.network)
    e = documents.load_partition(args.partition, net.actors)
    if isinstance(net, MultiNetwork):
        quotient = blockmodel_network(net, e)
    else:
        quotient = blockmodel_multihypergraph(net, e)
    text = documents.dumps_canonical(documents.network_to_doc(quotient))
    if args.output:
        _write_text(args.output, text)
    else:
        sys.stdout.write(text)
    if args.dot:
        _write_text(args.dot, export_dot(quotient))
    return 0


def _cmd_roles(args):
    net = _load_multirelational(args.network)
    s = role_semigroup(net, args.compose, prune_empty=args.prune_empty, cap=args.cap)

    table_to_stdout = args.table == "-"
    summary_stream = sys.stderr if table_to_stdout else sys.stdout
    zero = find_absorbing(s)
    ident = find_identity(s)
    print(f"kind: {args.compose}" + (" (prune-empty)" if args.prune_empty else ""),
          file=summary_stream)
    print(f"generators: {','.join(s.generator_names)}", file=summary_stream)
    print(f"elements: {len(s)}", file=summary_stream)
    print(f"nonzero: {len(s.nonzero_indices())}", file=summary_stream)
    print(f"absorbing: {s.word_label(zero) if zero is not None else 'absent'}",
          file=summary_stream)
    print(f"identity: {s.word_label(ident) if ident is not None else 'absent'}",
          file=summary_stream)
    if args.words:
        for i in range(len(s)):
            print(f"{s.word_label(i)}\t{_element_json(s.elements[i])}", file=summary_stream)

    if args.table:
        csv_text = render_table_csv(s)
        if table_to_stdout:
            sys.stdout.write(csv_text)
        else:
            _write_text(args.table, csv_text)
    return 0


def _cmd_induce(args):
    src = _load_multirelational(args.source)
    dst = _load_multirelational(args.target)
    if type(src) is not type(dst):
        raise InputError("source and target networks must be the same kind")
    f = documents.load_map(args.map, src.actors, dst.actors)

    report = validate_positional_reduction(f, src, dst)
    print(f"surjective: {_yn(report.surjective)}")
    for name, v in report.preserves.items():
        print(f"preserves[{name}]: {_yn(v)}")
    for name, v in report.reflects.items():
        print(f"reflects[{name}]: {_yn(v)}")
    print(f"blockmodel-match: {_yn(report.matches_blockmodel)}")
    print(f"validation: {'ok' if report.ok else 'failed'}")

    s_src = role_semigroup(src, args.compose, prune_empty=args.prune_empty, cap=args.cap)
    s_dst = role_semigroup(
        reorder_relations(dst, src.names), args.compose, prune_empty=args.prune_empty, cap=args.cap
    )
    try:
        hom = generator_induced_hom(s_src, s_dst)
    except WellDefinednessError as exc:
        print("hom: ill-defined")
        print(f"witness: {exc}")
        return 1
    print("hom: well-defined")
    for i in range(len(s_src)):
        print(f"  {s_src.word_label(i)} -> {s_dst.word_label(hom.image[i])}")
    print(f"hom surjective: {_yn(hom.is_surjective)}")
    return 0 if report.ok else 1


def _cmd_functor_check(args):
    stages = [documents.load_stage(path) for path in args.stages]
    if len(stages) < 2:
        raise InputError("need at least two stages")
    networks = [net for net, _ in stages]
    if stages[-1][1] is not None:
        raise InputError(f"{args.stages[-1]}: the final stage must not carry a map")
    maps = []
    for i, (net, mapping) in enumerate(stages[:-1]):
        if mapping is None:
            raise InputError(f"{args.stages[i]}: stage needs a 'map' onto the next stage")
        try:
            maps.append(ActorMap.from_labels(net.actors, networks[i + 1].actors, mapping))
        except StructuralError as exc:
            raise InputError(f"{args.stages[i]}: {exc}") from None

    try:
        report = check_functoriality(
            networks, maps, args.compose, prune_empty=args.prune_empty, cap=args.cap
        )
    except NotAReductionError as exc:
        print(f"stage validation failed: {exc.report.summary()}")
        return 1
    for i, step in enumerate(report.step_reports, start=1):
        print(f"stage {i}: {step.summary()}")
    print(f"identity law: {'ok' if report.identity_ok else 'failed'}")
    print(f"composition law: {'ok' if report.holds else 'failed'}")
    if report.counterexample:
        print(f"counterexample: {report.counterexample}")
    return 0 if report.ok else 1


def _cmd_convert(args):
    net = documents.load_network(args.undirected)
    if not isinstance(net, UndirectedHypergraph):
        raise InputError(f"{args.undirected}: expected kind 'undirected'")
    h = from_undirected(net)
    out = MultiHypergraph(net.actors, [("H", h)])
    text = documents.dumps_canonical(documents.network_to_doc(out))
    if args.output:
        _write_text(args.output, text)
    else:
        sys.stdout.write(text)
    return 0


def _cmd_oracle(args):
    net = _load_multirelational(args.network)
    if args.what == "partitions":
        for e in enumerate_partitions(net.actors):
            print(json.dumps(documents.partition_to_doc(e), sort_keys=True))
        return 0
    mode = _resolve_mode(args.mode, net)
    if isinstance(net, MultiNetwork):
        e = coarsest_regular_bruteforce(net, mode=mode)
    else:
        e = coarsest_regular_hyper_bruteforce(net)
    sys.stdout.write(documents.dumps_canonical(documents.partition_to_doc(e)))
    return 0


def _yn(v):
    return "yes" if v else "no"


# ── parser ───────────────────────────────────────────────────────────────────

def _add_compose_options(sub):
    sub.add_argument("--compose", required=True, choices=["graph", "tight", "loose"])
    sub.add_argument("--prune-empty", action="store_true",
                     help="drop empty-target hyperedges after each loose composite")
    sub.add_argument("--cap", type=int, default=DEFAULT_CAP,
                     help="closure size limit (default %(default)s)")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="roleblock",
        description="Role and positional analysis of multirelational networks "
                    "and F-hypergraphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check-regular", help="test a partition for regularity")
    p.add_argument("--network", required=True)
    p.add_argument("--partition", required=True)
    p.add_argument("--mode", choices=["out", "in", "both"])
    p.set_defaults(func=_cmd_check_regular)

    p = sub.add_parser("max-regular", help="coarsest regular partition refining a seed")
    p.add_argument("--network", required=True)
    p.add_argument("--mode", choices=["out", "in", "both"])
    p.add_argument("--seed", help="seed partition document (default: one block)")
    p.set_defaults(func=_cmd_max_regular)

    p = sub.add_parser("blockmodel", help="quotient a network by a partition")
    p.add_argument("--network", required=True)
    p.add_argument("--partition", required=True)
    p.add_argument("-o", "--output", help="write the quotient document here (default stdout)")
    p.add_argument("--dot", help="also write a DOT rendering of the quotient")
    p.set_defaults(func=_cmd_blockmodel)

    p = sub.add_parser("roles", help="generate the role semigroup")
    p.add_argument("--network", required=True)
    _add_compose_options(p)
    p.add_argument("--table", help="write the multiplication table as CSV ('-' for stdout)")
    p.add_argument("--words", action="store_true", help="list each element with its word")
    p.set_defaults(func=_cmd_roles)

    p = sub.add_parser("induce", help="role reduction induced by an actor map")
    p.add_argument("--source", required=True)
    p.add_argument("--map", required=True)
    p.add_argument("--target", required=True)
    _add_compose_options(p)
    p.set_defaults(func=_cmd_induce)

    p = sub.add_parser("functor-check", help="check the composition law along a chain")
    p.add_argument("--stages", nargs="+", required=True)
    _add_compose_options(p)
    p.set_defaults(func=_cmd_functor_check)

    p = sub.add_parser("convert", help="read an undirected hypergraph as an F-hypergraph")
    p.add_argument("--undirected", required=True)
    p.add_argument("-o", "--output", help="write the fhyper document here (default stdout)")
    p.set_defaults(func=_cmd_convert)

    p = sub.add_parser("oracle", help="small-instance brute-force oracles")
    p.add_argument("what", choices=["partitions", "coarsest"])
    p.add_argument("--network", required=True)
    p.add_argument("--mode", choices=["out", "in", "both"])
    p.set_defaults(func=_cmd_oracle)

    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ResourceLimitError as exc:
        print(f"resource limit: {exc}", file=sys.stderr)
        return 3
    except StructuralError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except EngineError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return 2


def run():
    raise SystemExit(main())
