"""Batch command-line interface for the simplification pipeline.

Exit codes: 0 success, 1 data error (bad input contents), 2 flag error.
All diagnostics go to stderr; artifacts go to --output or stdout.
"""

from __future__ import annotations

import sys

import click

from .errors import HypersimpError
from .formats import (
    barcode_to_doc,
    canonical_json,
    layout_to_doc,
    metrics_to_doc,
    result_to_doc,
)
from .graphs import SingletonMode, WeightScheme, s_connected_components
from .layout import DEFAULT_HULL_MARGIN, bipartite_layout, venn_hulls
from .metrics import metrics_report
from .pipeline import Side, SimplificationParams, simplify
from .svg import render_svg


def _read_hypergraph(path: str, fmt: str):
    from .formats import parse_hypergraph

    with open(path, "rb") as fh:
        data = fh.read()
    return parse_hypergraph(data, fmt)


def _params(side, s, weight, epsilon, collapse_vertices, collapse_edges, singletons, expand):
    return SimplificationParams(
        side=Side.VERTEX if side == "vertex" else Side.HYPEREDGE,
        s=s,
        scheme=WeightScheme(weight),
        epsilon=epsilon,
        pre_collapse_vertices=collapse_vertices,
        pre_collapse_edges=collapse_edges,
        singleton_mode=SingletonMode(singletons),
        expanded_bars=frozenset(expand),
    )


def _emit(data: bytes, output: str | None) -> None:
    if output:
        with open(output, "wb") as fh:
            fh.write(data)
    else:
        sys.stdout.buffer.write(data)


def _layout_and_metrics(h, seed):
    lay = bipartite_layout(h, seed=seed)
    hulls = venn_hulls(h, lay, DEFAULT_HULL_MARGIN)
    return lay, hulls, metrics_report(h, lay, hulls)


def _ratio(before: float, after: float) -> float | None:
    return before / after if after else None


pipeline_options = [
    click.option("--input", "input_path", required=True, type=click.Path(exists=True, dir_okay=False)),
    click.option("--format", "fmt", type=click.Choice(["json", "csv"]), default="json", show_default=True),
    click.option("--side", type=click.Choice(["vertex", "edge"]), default="edge", show_default=True),
    click.option("--s", "s", type=int, default=1, show_default=True),
    click.option("--weight", type=click.Choice(["jaccard", "overlap"]), default="jaccard", show_default=True),
    click.option("--epsilon", type=float, default=0.0, show_default=True),
    click.option("--collapse-vertices", is_flag=True, default=False),
    click.option("--collapse-edges", is_flag=True, default=False),
    click.option("--singletons", type=click.Choice(["greyout", "filter"]), default="greyout", show_default=True),
    click.option("--expand", "expand", type=int, multiple=True, help="Bar id to expand; repeatable."),
    click.option("--seed", type=int, default=42, show_default=True),
    click.option("--output", type=click.Path(dir_okay=False), default=None),
]


def with_pipeline_options(fn):
    for option in reversed(pipeline_options):
        fn = option(fn)
    return fn


@click.group()
def main() -> None:
    """Topological simplification of hypergraphs."""


@main.command("simplify")
@with_pipeline_options
@click.option("--emit", type=click.Choice(["result", "barcode", "metrics", "svg"]), default="result", show_default=True)
def simplify_cmd(input_path, fmt, side, s, weight, epsilon, collapse_vertices,
                 collapse_edges, singletons, expand, seed, output, emit) -> None:
    """Run the full pipeline and write the requested artifact."""
    try:
        h = _read_hypergraph(input_path, fmt)
        params = _params(side, s, weight, epsilon, collapse_vertices,
                         collapse_edges, singletons, expand)
        result = simplify(h, params)
        if emit == "result":
            lay = bipartite_layout(result.simplified_hypergraph, seed=seed)
            hulls = venn_hulls(result.simplified_hypergraph, lay, DEFAULT_HULL_MARGIN)
            data = canonical_json(
                result_to_doc(result, layout=layout_to_doc(lay, hulls))
            )
        elif emit == "barcode":
            data = canonical_json(barcode_to_doc(result.barcode))
        elif emit == "metrics":
            data = _metrics_doc(result, seed)
        else:  # svg
            lay = bipartite_layout(result.simplified_hypergraph, seed=seed)
            hulls = venn_hulls(result.simplified_hypergraph, lay, DEFAULT_HULL_MARGIN)
            data = render_svg(result.simplified_hypergraph, lay, hulls)
        _emit(data, output)
    except HypersimpError as exc:
        raise click.ClickException(str(exc)) from exc


def _metrics_doc(result, seed) -> bytes:
    _, _, before = _layout_and_metrics(result.original, seed)
    _, _, after = _layout_and_metrics(result.simplified_hypergraph, seed)
    doc = {
        "before": metrics_to_doc(before),
        "after": metrics_to_doc(after),
        "ratio": {
            "m_i": _ratio(before.m_i, after.m_i),
            "m_c": _ratio(before.m_c, after.m_c),
            "m_l": _ratio(before.m_l, after.m_l),
            "m_a": _ratio(before.m_a, after.m_a),
        },
    }
    return canonical_json(doc)


@main.command("barcode")
@with_pipeline_options
def barcode_cmd(input_path, fmt, side, s, weight, epsilon, collapse_vertices,
                collapse_edges, singletons, expand, seed, output) -> None:
    """Compute the barcode of the chosen graph representation."""
    try:
        h = _read_hypergraph(input_path, fmt)
        params = _params(side, s, weight, epsilon, collapse_vertices,
                         collapse_edges, singletons, expand)
        result = simplify(h, params)
        _emit(canonical_json(barcode_to_doc(result.barcode)), output)
    except HypersimpError as exc:
        raise click.ClickException(str(exc)) from exc


@main.command("metrics")
@with_pipeline_options
def metrics_cmd(input_path, fmt, side, s, weight, epsilon, collapse_vertices,
                collapse_edges, singletons, expand, seed, output) -> None:
    """Aesthetic metrics before and after simplification (Table-style B/A)."""
    try:
        h = _read_hypergraph(input_path, fmt)
        params = _params(side, s, weight, epsilon, collapse_vertices,
                         collapse_edges, singletons, expand)
        result = simplify(h, params)
        _emit(_metrics_doc(result, seed), output)
    except HypersimpError as exc:
        raise click.ClickException(str(exc)) from exc


@main.command("components")
@click.option("--input", "input_path", required=True, type=click.Path(exists=True, dir_okay=False))
@click.option("--format", "fmt", type=click.Choice(["json", "csv"]), default="json", show_default=True)
@click.option("--s", "s", type=int, default=1, show_default=True)
@click.option("--output", type=click.Path(dir_okay=False), default=None)
def components_cmd(input_path, fmt, s, output) -> None:
    """Print the s-connected components of the hyperedge set."""
    try:
        h = _read_hypergraph(input_path, fmt)
        comps = s_connected_components(h, s)
        doc = {
            "s": s,
            "components": [
                {"edges": c, "labels": [h.edge_labels[e] for e in c]} for c in comps
            ],
        }
        _emit(canonical_json(doc), output)
    except HypersimpError as exc:
        raise click.ClickException(str(exc)) from exc


@main.command("serve")
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--port", type=int, default=8000, show_default=True)
@click.option("--static-dir", type=click.Path(file_okay=False), default=None,
              help="Directory with the web UI bundle to serve at /.")
def serve_cmd(host, port, static_dir) -> None:
    """Start the HTTP session service."""
    import uvicorn

    from .service import create_app

    uvicorn.run(create_app(static_dir=static_dir), host=host, port=port)


if __name__ == "__main__":
    main()
