"""Serialization: hypergraph documents, incidence CSV, and result documents.

Hypergraph JSON schema::

    {"vertices": [{"id": ..., "label": ...}],
     "hyperedges": [{"id": ..., "label": ..., "members": [vertex ids]}]}

Incidence CSV: header ``edge,vertex``, one row per incidence (RFC 4180).
Duplicated rows are dropped with a warning.

Internal ids are dense and assigned in file order, so identical bytes always
produce identical id assignments. Exact rational quantities (edge weights, bar
lengths) serialize as a float plus a ``[numerator, denominator]`` companion,
which makes parse(serialize(x)) the identity.
"""

from __future__ import annotations

import csv
import io
import json
import warnings
from fractions import Fraction
from typing import Any

from .errors import ParseError, ValidationError
from .hypergraph import Hypergraph, MergeRecord
from .graphs import SingletonMode, WeightScheme, WeightedGraph
from .layout import HullPolygon, Layout
from .metrics import MetricsReport
from .persistence import (
    Bar,
    Barcode,
    Dendrogram,
    DendrogramNode,
    DendrogramTree,
    EpsilonPartition,
)
from .pipeline import (
    Correspondence,
    Side,
    SimplificationParams,
    SimplificationResult,
)


def canonical_json(obj: Any) -> bytes:
    """Stable byte encoding: sorted keys, compact separators, trailing newline."""
    return (json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n").encode()


# ---------------------------------------------------------------------------
# hypergraph documents


def hypergraph_to_doc(h: Hypergraph) -> dict:
    return {
        "vertices": [
            {"id": i, "label": label} for i, label in enumerate(h.vertex_labels)
        ],
        "hyperedges": [
            {"id": i, "label": h.edge_labels[i], "members": sorted(h.edge_members[i])}
            for i in range(h.edge_count)
        ],
    }


def hypergraph_from_doc(doc: Any) -> Hypergraph:
    if not isinstance(doc, dict):
        raise ParseError("hypergraph document must be a JSON object")
    for key in ("vertices", "hyperedges"):
        if not isinstance(doc.get(key), list):
            raise ParseError(f"hypergraph document needs a {key!r} list")
    index: dict[Any, int] = {}
    vertex_labels: list[str] = []
    for entry in doc["vertices"]:
        if not isinstance(entry, dict) or "id" not in entry:
            raise ParseError(f"vertex entry without an id: {entry!r}")
        vid = entry["id"]
        if vid in index:
            raise ValidationError(f"duplicate vertex id {vid!r}")
        index[vid] = len(vertex_labels)
        vertex_labels.append(str(entry.get("label", vid)))
    edge_ids: set[Any] = set()
    edge_labels: list[str] = []
    members: list[frozenset[int]] = []
    dangling: list[Any] = []
    for entry in doc["hyperedges"]:
        if not isinstance(entry, dict) or "id" not in entry:
            raise ParseError(f"hyperedge entry without an id: {entry!r}")
        eid = entry["id"]
        if eid in edge_ids:
            raise ValidationError(f"duplicate hyperedge id {eid!r}")
        edge_ids.add(eid)
        edge_labels.append(str(entry.get("label", eid)))
        got: set[int] = set()
        for ref in entry.get("members", []):
            if ref in index:
                got.add(index[ref])
            else:
                dangling.append(ref)
        members.append(frozenset(got))
    if dangling:
        raise ValidationError(
            "hyperedge members reference undeclared vertices: "
            + ", ".join(repr(r) for r in dangling)
        )
    return Hypergraph(tuple(vertex_labels), tuple(edge_labels), tuple(members))


def _parse_incidence_csv(text: str) -> Hypergraph:
    reader = csv.reader(io.StringIO(text))
    try:
        header = next(reader)
    except StopIteration:
        raise ParseError("empty CSV: expected an 'edge,vertex' header") from None
    if [c.strip() for c in header] != ["edge", "vertex"]:
        raise ParseError(f"CSV header must be 'edge,vertex', got {header!r}")
    vertex_index: dict[str, int] = {}
    vertex_labels: list[str] = []
    edge_index: dict[str, int] = {}
    edge_labels: list[str] = []
    members: list[set[int]] = []
    seen: set[tuple[int, int]] = set()
    for row_no, row in enumerate(reader, start=2):
        if not row:
            continue
        if len(row) != 2 or not row[0] or not row[1]:
            raise ParseError(
                f"CSV row {row_no}: expected two non-empty fields, got {row!r}"
            )
        edge, vertex = row
        if edge not in edge_index:
            edge_index[edge] = len(edge_labels)
            edge_labels.append(edge)
            members.append(set())
        if vertex not in vertex_index:
            vertex_index[vertex] = len(vertex_labels)
            vertex_labels.append(vertex)
        pair = (edge_index[edge], vertex_index[vertex])
        if pair in seen:
            warnings.warn(
                f"duplicate incidence ({edge!r}, {vertex!r}) at CSV row {row_no}",
                stacklevel=2,
            )
            continue
        seen.add(pair)
        members[pair[0]].add(pair[1])
    return Hypergraph(
        tuple(vertex_labels),
        tuple(edge_labels),
        tuple(frozenset(m) for m in members),
    )


def parse_hypergraph(data: bytes | str, fmt: str = "json") -> Hypergraph:
    """Parse and validate a hypergraph from JSON or incidence-CSV bytes."""
    text = data.decode() if isinstance(data, bytes) else data
    if fmt == "json":
        try:
            doc = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(
                f"malformed JSON at line {exc.lineno} column {exc.colno}: {exc.msg}"
            ) from None
        return hypergraph_from_doc(doc)
    if fmt == "csv":
        return _parse_incidence_csv(text)
    raise ParseError(f"unknown format {fmt!r} (expected 'json' or 'csv')")


def serialize_hypergraph(h: Hypergraph) -> bytes:
    return canonical_json(hypergraph_to_doc(h))


# ---------------------------------------------------------------------------
# exact numbers


def _num_to_doc(value: Fraction | float | int) -> dict:
    if isinstance(value, Fraction):
        return {
            "value": float(value),
            "exact": [value.numerator, value.denominator],
        }
    return {"value": float(value)}


def _num_from_doc(doc: dict) -> Fraction | float:
    if "exact" in doc:
        return Fraction(doc["exact"][0], doc["exact"][1])
    return doc["value"]


# ---------------------------------------------------------------------------
# graphs, barcodes, dendrograms, partitions


def graph_to_doc(g: WeightedGraph) -> dict:
    return {
        "nodes": list(g.nodes),
        "labels": list(g.labels),
        "edges": [
            [u, v, float(w), [w.numerator, w.denominator]] for u, v, w in g.edges
        ],
        "singleton": list(g.singleton),
    }


def graph_from_doc(doc: dict) -> WeightedGraph:
    return WeightedGraph(
        nodes=tuple(doc["nodes"]),
        labels=tuple(doc["labels"]),
        edges=tuple(
            (u, v, Fraction(exact[0], exact[1])) for u, v, _, exact in doc["edges"]
        ),
        singleton=tuple(bool(x) for x in doc["singleton"]),
    )


def barcode_to_doc(b: Barcode) -> dict:
    bars = []
    for bar in b.bars:
        if bar.essential:
            bars.append({"id": bar.id, "essential": True})
        else:
            bars.append(
                {
                    "id": bar.id,
                    "length": float(bar.length),
                    "length_exact": [bar.length.numerator, bar.length.denominator],
                    "edge": list(bar.mst_edge),
                }
            )
    return {
        "bars": bars,
        "node_count": b.node_count,
        "component_count": b.component_count,
    }


def barcode_from_doc(doc: dict) -> Barcode:
    bars = []
    for entry in doc["bars"]:
        if entry.get("essential"):
            bars.append(Bar(entry["id"], None, None, essential=True))
        else:
            length = Fraction(entry["length_exact"][0], entry["length_exact"][1])
            bars.append(Bar(entry["id"], length, tuple(entry["edge"])))
    return Barcode(tuple(bars), doc["node_count"], doc["component_count"])


def _tree_to_doc(t: DendrogramTree) -> Any:
    if isinstance(t, DendrogramNode):
        return [t.bar_id, _tree_to_doc(t.left), _tree_to_doc(t.right)]
    return t


def dendrogram_to_doc(d: Dendrogram) -> dict:
    return {"leaves": list(d.leaves), "trees": [_tree_to_doc(t) for t in d.roots]}


def dendrogram_from_doc(doc: dict, barcode: Barcode) -> Dendrogram:
    by_id = {bar.id: bar for bar in barcode.finite_bars}

    def build(t: Any) -> DendrogramTree:
        if isinstance(t, list):
            bar = by_id[t[0]]
            return DendrogramNode(
                bar.id, bar.length, bar.mst_edge, build(t[1]), build(t[2])
            )
        return t

    return Dendrogram(tuple(doc["leaves"]), tuple(build(t) for t in doc["trees"]))


def partition_to_doc(p: EpsilonPartition) -> dict:
    doc = {
        "epsilon": _num_to_doc(p.epsilon),
        "expanded_bars": sorted(p.expanded_bars),
        "classes": [list(c) for c in p.classes],
    }
    return doc


def partition_from_doc(doc: dict) -> EpsilonPartition:
    return EpsilonPartition(
        epsilon=_num_from_doc(doc["epsilon"]),
        expanded_bars=frozenset(doc["expanded_bars"]),
        classes=tuple(tuple(c) for c in doc["classes"]),
    )


# ---------------------------------------------------------------------------
# params, correspondence, merges


def params_to_doc(p: SimplificationParams) -> dict:
    return {
        "side": p.side.value,
        "s": p.s,
        "weight": p.scheme.value,
        "epsilon": _num_to_doc(p.epsilon),
        "collapse_vertices": p.pre_collapse_vertices,
        "collapse_edges": p.pre_collapse_edges,
        "singletons": p.singleton_mode.value,
        "expanded_bars": sorted(p.expanded_bars),
    }


def params_from_doc(doc: dict) -> SimplificationParams:
    return SimplificationParams(
        side=Side(doc["side"]),
        s=doc["s"],
        scheme=WeightScheme(doc["weight"]),
        epsilon=_num_from_doc(doc["epsilon"]),
        pre_collapse_vertices=bool(doc["collapse_vertices"]),
        pre_collapse_edges=bool(doc["collapse_edges"]),
        singleton_mode=SingletonMode(doc["singletons"]),
        expanded_bars=frozenset(doc["expanded_bars"]),
    )


def _merges_to_doc(records: tuple[MergeRecord, ...]) -> list:
    return [
        {"new_id": r.new_id, "constituents": list(r.constituents), "kind": r.kind}
        for r in records
    ]


def _merges_from_doc(entries: list) -> tuple[MergeRecord, ...]:
    return tuple(
        MergeRecord(e["new_id"], tuple(e["constituents"]), e["kind"]) for e in entries
    )


def correspondence_to_doc(c: Correspondence) -> dict:
    return {
        "vertex_to_collapsed": list(c.vertex_to_collapsed),
        "edge_to_collapsed": list(c.edge_to_collapsed),
        "filtered": list(c.filtered),
        "node_to_class": {str(k): v for k, v in sorted(c.node_to_class.items())},
    }


def correspondence_from_doc(doc: dict) -> Correspondence:
    return Correspondence(
        vertex_to_collapsed=tuple(doc["vertex_to_collapsed"]),
        edge_to_collapsed=tuple(doc["edge_to_collapsed"]),
        filtered=tuple(doc["filtered"]),
        node_to_class={int(k): v for k, v in doc["node_to_class"].items()},
    )


# ---------------------------------------------------------------------------
# layout and metrics


def layout_to_doc(layout: Layout, hulls: list[HullPolygon] | None = None) -> dict:
    doc = {
        "seed": layout.seed,
        "vertices": [[x, y] for x, y in layout.vertex_pos],
        "hyperedges": [[x, y] for x, y in layout.edge_pos],
    }
    if hulls is not None:
        doc["hulls"] = [
            {
                "edge_id": p.edge_id,
                "margin": p.margin,
                "points": [[x, y] for x, y in p.points],
            }
            for p in hulls
        ]
    return doc


def metrics_to_doc(m: MetricsReport) -> dict:
    return {"m_i": m.m_i, "m_c": m.m_c, "m_l": m.m_l, "m_a": m.m_a}


# ---------------------------------------------------------------------------
# result documents


def result_to_doc(
    r: SimplificationResult,
    layout: dict | None = None,
    metrics: dict | None = None,
) -> dict:
    doc = {
        "params": params_to_doc(r.params),
        "original": hypergraph_to_doc(r.original),
        "collapsed": hypergraph_to_doc(r.collapsed),
        "vertex_merges": _merges_to_doc(r.vertex_merges),
        "edge_merges": _merges_to_doc(r.edge_merges),
        "graph": graph_to_doc(r.graph),
        "barcode": barcode_to_doc(r.barcode),
        "dendrogram": dendrogram_to_doc(r.dendrogram),
        "partition": partition_to_doc(r.partition),
        "simplified_hypergraph": hypergraph_to_doc(r.simplified_hypergraph),
        "simplified_graph": graph_to_doc(r.simplified_graph),
        "correspondence": correspondence_to_doc(r.correspondence),
    }
    if layout is not None:
        doc["layout"] = layout
    if metrics is not None:
        doc["metrics"] = metrics
    return doc


def serialize_result(
    r: SimplificationResult,
    layout: dict | None = None,
    metrics: dict | None = None,
) -> bytes:
    return canonical_json(result_to_doc(r, layout, metrics))


def result_from_doc(doc: dict) -> SimplificationResult:
    barcode = barcode_from_doc(doc["barcode"])
    return SimplificationResult(
        original=hypergraph_from_doc(doc["original"]),
        collapsed=hypergraph_from_doc(doc["collapsed"]),
        vertex_merges=_merges_from_doc(doc["vertex_merges"]),
        edge_merges=_merges_from_doc(doc["edge_merges"]),
        params=params_from_doc(doc["params"]),
        graph=graph_from_doc(doc["graph"]),
        barcode=barcode,
        dendrogram=dendrogram_from_doc(doc["dendrogram"], barcode),
        partition=partition_from_doc(doc["partition"]),
        simplified_hypergraph=hypergraph_from_doc(doc["simplified_hypergraph"]),
        simplified_graph=graph_from_doc(doc["simplified_graph"]),
        correspondence=correspondence_from_doc(doc["correspondence"]),
    )


def parse_result(data: bytes | str) -> SimplificationResult:
    text = data.decode() if isinstance(data, bytes) else data
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(
            f"malformed JSON at line {exc.lineno} column {exc.colno}: {exc.msg}"
        ) from None
    return result_from_doc(doc)
