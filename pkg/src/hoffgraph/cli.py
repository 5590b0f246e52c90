"""Command-line front end.

Subcommands: spectrum, profile, hoffman-build, hoffman-expand, catalog,
quasi, assoc, verify, corpus, mprime, tprime, convergence.

Graph input comes from exactly one source per invocation: --g6 (inline
graph6), --file (newline-delimited graph6, every line processed), or
--family with --param key=value pairs. Output is text (default) or json;
identical invocations produce byte-identical output. Exit codes: 0 success,
2 input error, 1 internal failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .graph6 import Graph6Error, graph6_decode, graph6_encode
from .graphs import Graph, named_graph, regularity_profile
from .hoffman import (
    CATALOG_FAMILIES,
    catalog,
    expand,
    hoffman_from_fat,
    hoffman_from_text,
    hoffman_to_text,
    lambda_min_hoffman,
)
from .quasiclique import associated_hoffman_graph, quasi_clique_system, system_report_text
from .spectral import eigenvalues
from .verifier import (
    corpus_run,
    m_prime,
    neumaier_check,
    t_prime,
    theorem5_check,
)

__all__ = ["run", "main"]


def _fmt(x: float) -> str:
    return f"{x:.10g}"


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hoffgraph",
        description="spectral graph toolkit: profiles, Hoffman graphs, "
        "quasi-cliques, and eigenvalue-bound checks",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, helptext: str, graph_input: bool = False) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=helptext)
        if graph_input:
            p.add_argument("--g6", help="inline graph6 string")
            p.add_argument("--file", help="newline-delimited graph6 file")
            p.add_argument("--family", help="named graph family")
            p.add_argument(
                "--param",
                action="append",
                default=[],
                metavar="K=V",
                help="family parameter (repeatable)",
            )
        p.add_argument("--format", choices=("text", "json"), default="text")
        return p

    add("spectrum", "adjacency eigenvalues of a graph", graph_input=True)
    add("profile", "regularity profile of a graph", graph_input=True)

    p = add("hoffman-build", "validate a slim/fat labeling", graph_input=True)
    p.add_argument("--fat", default="", help="comma-separated fat vertex indices")

    p = add("hoffman-expand", "replace fat vertices by joined cliques", graph_input=True)
    p.add_argument("--p", type=int, required=True, help="clique order")

    add("catalog", "named Hoffman family and its closed-form eigenvalue",
        graph_input=True)

    p = add("quasi", "quasi-clique decomposition", graph_input=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)

    p = add("assoc", "associated Hoffman graph of the quasi-clique classes",
            graph_input=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)

    p = add("verify", "sesqui-regular branch check", graph_input=True)
    p.add_argument("--lambda", dest="lam", type=int, help="override lambda")

    add("corpus", "run the built-in verification corpus")

    p = add("mprime", "least m with the half-apex clique eigenvalue below -lambda")
    p.add_argument("--lambda", dest="lam", type=int, required=True)

    p = add("tprime", "least t with the star eigenvalue below -lambda")
    p.add_argument("--lambda", dest="lam", type=int, required=True)

    p = add("convergence", "expansion eigenvalue table for p = 1..pmax",
            graph_input=True)
    p.add_argument("--pmax", type=int, default=20)
    p.add_argument("--plot", help="also render the table to this image file")

    return parser


# ---------------------------------------------------------------------------
# input handling


def _parse_params(pairs: list[str]) -> dict:
    params = {}
    for item in pairs:
        if "=" not in item:
            raise ValueError(f"--param expects K=V, got {item!r}")
        key, _, value = item.partition("=")
        if key == "parts":
            params[key] = [int(tok) for tok in value.split(",") if tok]
        else:
            params[key] = int(value)
    return params


def _load_graphs(args) -> list[tuple[str, Graph]]:
    """Resolve the graph input source to a list of (label, graph)."""
    sources = [s for s in ("g6", "file", "family") if getattr(args, s, None)]
    if len(sources) != 1:
        raise ValueError("exactly one of --g6, --file, --family is required")
    if args.g6:
        return [(f"g6:{args.g6}", graph6_decode(args.g6))]
    if args.file:
        out = []
        with open(args.file) as fh:
            for i, line in enumerate(fh):
                if line.strip():
                    out.append((f"{args.file}:{i + 1}", graph6_decode(line.strip())))
        if not out:
            raise ValueError(f"no graphs in {args.file}")
        return out
    params = _parse_params(args.param)
    label = args.family
    if params:
        label += "(" + ",".join(f"{k}={v}" for k, v in sorted(params.items())) + ")"
    return [(label, named_graph(args.family, **params))]


def _load_single_graph(args) -> tuple[str, Graph]:
    loaded = _load_graphs(args)
    if len(loaded) != 1:
        raise ValueError(f"this subcommand takes one graph, got {len(loaded)}")
    return loaded[0]


def _load_hoffman(args):
    """Hoffman input: a catalog family (q_of takes the graph source) or a
    two-line hoffman text file. Returns (label, HoffmanCatalogEntry) for
    families and (label, HoffmanGraph) for files."""
    if args.family and args.family in CATALOG_FAMILIES:
        params = _parse_params(args.param)
        if args.family == "q_of":
            base_args = argparse.Namespace(
                g6=args.g6, file=args.file, family=None, param=[]
            )
            label, base = _load_single_graph(base_args)
            return f"q_of({label})", catalog("q_of", base)
        key = "t" if args.family in ("h_t", "h_t1") else "n"
        if set(params) != {key}:
            raise ValueError(f"family {args.family!r} needs exactly --param {key}=...")
        return f"{args.family}({params[key]})", catalog(args.family, params[key])
    if args.file and not args.family:
        with open(args.file) as fh:
            h = hoffman_from_text(fh.read())
        return args.file, h
    raise ValueError(
        "hoffman input: --family h_t|h_t1|c_n with --param, "
        "--family q_of with a graph source, or --file with a hoffman text file"
    )


# ---------------------------------------------------------------------------
# subcommand handlers; each returns (text, json-able object)


def _cmd_spectrum(args):
    blocks, payload = [], []
    for label, g in _load_graphs(args):
        spec = eigenvalues(g.adjacency_matrix())
        blocks.append(
            f"subject={label}\nn={g.n}\n"
            f"lambda_min={_fmt(spec.smallest)}\nlambda_max={_fmt(spec.largest)}\n"
            "eigenvalues=" + " ".join(_fmt(v) for v in spec.values)
        )
        payload.append(
            {
                "subject": label,
                "n": g.n,
                "lambda_min": spec.smallest,
                "lambda_max": spec.largest,
                "eigenvalues": list(spec.values),
                "tolerance": spec.tolerance,
            }
        )
    return "\n\n".join(blocks) + "\n", _unwrap(payload)


def _cmd_profile(args):
    blocks, payload = [], []
    for label, g in _load_graphs(args):
        prof = regularity_profile(g)
        items = [f"subject={label}", f"n={g.n}"]
        items += [f"{k}={_show(v)}" for k, v in prof.to_dict().items()]
        blocks.append("\n".join(items))
        payload.append({"subject": label, "n": g.n, **prof.to_dict()})
    return "\n\n".join(blocks) + "\n", _unwrap(payload)


def _cmd_hoffman_build(args):
    label, g = _load_single_graph(args)
    fat = [int(tok) for tok in args.fat.split(",") if tok.strip()]
    h = hoffman_from_fat(g, fat)
    text = hoffman_to_text(h)
    payload = {
        "subject": label,
        "graph6": graph6_encode(h.underlying),
        "fat": list(h.fat_vertices),
        "slim": list(h.slim_vertices),
        "lambda_min": lambda_min_hoffman(h) if h.slim_vertices else None,
    }
    return text, payload


def _cmd_hoffman_expand(args):
    label, entry = _load_hoffman(args)
    h = entry if not hasattr(entry, "hoffman") else entry.hoffman
    if args.p < 1:
        raise ValueError(f"--p must be positive, got {args.p}")
    g = expand(h, args.p)
    g6 = graph6_encode(g)
    spec = eigenvalues(g.adjacency_matrix())
    text = (
        f"subject=expand({label},p={args.p})\nn={g.n}\ngraph6={g6}\n"
        f"lambda_min={_fmt(spec.smallest)}\n"
    )
    payload = {
        "subject": f"expand({label},p={args.p})",
        "n": g.n,
        "graph6": g6,
        "lambda_min": spec.smallest,
    }
    return text, payload


def _cmd_catalog(args):
    label, entry = _load_hoffman(args)
    if not hasattr(entry, "hoffman"):
        raise ValueError("catalog needs a family, not a hoffman file")
    computed = lambda_min_hoffman(entry.hoffman)
    text = (
        f"family={label}\n"
        f"slim={len(entry.hoffman.slim_vertices)} fat={len(entry.hoffman.fat_vertices)}\n"
        f"closed_form_lambda_min={_fmt(entry.closed_form_lambda_min)}\n"
        f"computed_lambda_min={_fmt(computed)}\n"
        + hoffman_to_text(entry.hoffman)
    )
    payload = {
        "family": label,
        "slim": len(entry.hoffman.slim_vertices),
        "fat": len(entry.hoffman.fat_vertices),
        "closed_form_lambda_min": entry.closed_form_lambda_min,
        "computed_lambda_min": computed,
        "graph6": graph6_encode(entry.hoffman.underlying),
        "fat_vertices": list(entry.hoffman.fat_vertices),
    }
    return text, payload


def _cmd_quasi(args):
    label, g = _load_single_graph(args)
    system = quasi_clique_system(g, args.m, args.n)
    text = f"subject={label}\n" + system_report_text(system)
    payload = {
        "subject": label,
        "m": system.m,
        "n": system.n,
        "forbidden_ok": system.forbidden_ok,
        "classes": [
            {"cliques": [list(c) for c in members], "quasi_clique": list(q)}
            for members, q in zip(system.classes, system.quasi_cliques)
        ],
    }
    return text, payload


def _cmd_assoc(args):
    label, g = _load_single_graph(args)
    system = quasi_clique_system(g, args.m, args.n)
    import warnings as warnmod

    with warnmod.catch_warnings(record=True) as caught:
        warnmod.simplefilter("always")
        h = associated_hoffman_graph(g, args.m, args.n, system=system)
    notes = [str(w.message) for w in caught]
    text = f"subject={label}\nfat_count={len(h.fat_vertices)}\n" + hoffman_to_text(h)
    for note in notes:
        text += f"warning: {note}\n"
    payload = {
        "subject": label,
        "fat_count": len(h.fat_vertices),
        "graph6": graph6_encode(h.underlying),
        "fat_vertices": list(h.fat_vertices),
        "forbidden_ok": system.forbidden_ok,
        "warnings": notes,
    }
    return text, payload


def _report_text(report) -> str:
    lines = [
        f"subject={report.subject}",
        f"lambda={report.lam}",
        f"outcome={report.outcome}",
    ]
    for key in sorted(report.margins):
        lines.append(f"margin[{key}]={_fmt(report.margins[key])}")
    if report.profile is not None:
        prof = " ".join(f"{k}={_show(v)}" for k, v in report.profile.to_dict().items())
        lines.append("profile: " + prof)
    if report.neumaier is not None:
        nm = report.neumaier
        lines.append(
            f"neumaier: outcome={nm.outcome} multipartite={_show(nm.is_complete_multipartite)} "
            f"c={nm.c} bound={nm.c_bound} margin={nm.margin}"
        )
    for w in report.warnings:
        lines.append(f"warning: {w}")
    return "\n".join(lines)


def _cmd_verify(args):
    import dataclasses

    blocks, payload = [], []
    for label, g in _load_graphs(args):
        report = theorem5_check(g, lambda_override=args.lam, subject=label)
        try:
            nm = neumaier_check(g, subject=label)
        except ValueError:
            nm = None
        report = dataclasses.replace(report, neumaier=nm)
        blocks.append(_report_text(report))
        payload.append(report.to_dict())
    return "\n\n".join(blocks) + "\n", _unwrap(payload)


def _cmd_corpus(args):
    reports = corpus_run()
    text = "\n\n".join(_report_text(r) for r in reports) + "\n"
    return text, [r.to_dict() for r in reports]


def _cmd_mprime(args):
    value = m_prime(args.lam)
    return f"{value}\n", {"lambda": args.lam, "m_prime": value}


def _cmd_tprime(args):
    value = t_prime(args.lam)
    return f"{value}\n", {"lambda": args.lam, "t_prime": value}


def _cmd_convergence(args):
    label, entry = _load_hoffman(args)
    if not hasattr(entry, "hoffman"):
        h = entry
        limit = lambda_min_hoffman(h)
    else:
        h = entry.hoffman
        limit = entry.closed_form_lambda_min
    if not 1 <= args.pmax <= 10**4:
        raise ValueError(f"--pmax must be in 1..10000, got {args.pmax}")
    orders = list(range(1, args.pmax + 1))
    values = [
        eigenvalues(expand(h, p).adjacency_matrix()).smallest for p in orders
    ]
    rows = "\n".join(f"{p}\t{_fmt(v)}" for p, v in zip(orders, values))
    text = "p\tlambda_min\n" + rows + "\n"
    if args.plot:
        from .plotting import save_convergence_plot

        save_convergence_plot(args.plot, label, orders, values, limit)
    payload = {
        "family": label,
        "lambda_min_hoffman": limit,
        "rows": [{"p": p, "lambda_min": v} for p, v in zip(orders, values)],
    }
    return text, payload


def _show(value) -> str:
    if value is None:
        return "none"
    if isinstance(value, bool):
        return "yes" if value else "no"
    return str(value)


def _unwrap(items: list):
    return items[0] if len(items) == 1 else items


_HANDLERS = {
    "spectrum": _cmd_spectrum,
    "profile": _cmd_profile,
    "hoffman-build": _cmd_hoffman_build,
    "hoffman-expand": _cmd_hoffman_expand,
    "catalog": _cmd_catalog,
    "quasi": _cmd_quasi,
    "assoc": _cmd_assoc,
    "verify": _cmd_verify,
    "corpus": _cmd_corpus,
    "mprime": _cmd_mprime,
    "tprime": _cmd_tprime,
    "convergence": _cmd_convergence,
}


def run(argv: Sequence[str] | None = None) -> int:
    """Parse argv, execute the subcommand, print the report. Returns the
    exit code: 0 success, 2 input error, 1 internal failure."""
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    handler = _HANDLERS[args.command]
    try:
        text, payload = handler(args)
    except Graph6Error as exc:
        print(f"error: malformed graph6: {exc}", file=sys.stderr)
        return 2
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except AssertionError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return 1
    if args.format == "json":
        sys.stdout.write(json.dumps(payload, indent=2) + "\n")
    else:
        sys.stdout.write(text)
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
