"""Hypergraph data model, dual construction, and exact vertex/hyperedge collapse.

Vertices and hyperedges carry dense 0-based integer ids within one hypergraph.
Hyperedges form a *family*: empty member sets and duplicate member sets are
both legal (duplicates only disappear through an explicit collapse).
All values are immutable after construction.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property


@dataclass(frozen=True)
class MergeRecord:
    """One super-vertex or super-edge produced by an exact collapse.

    ``constituents`` lists the original ids merged into ``new_id``, in
    declaration order. Only groups of size >= 2 produce records.
    """

    new_id: int
    constituents: tuple[int, ...]
    kind: str  # "vertex" | "edge"


@dataclass(frozen=True, repr=False)
class Hypergraph:
    """A vertex set plus an ordered family of hyperedges (vertex subsets)."""

    vertex_labels: tuple[str, ...]
    edge_labels: tuple[str, ...]
    edge_members: tuple[frozenset[int], ...]

    def __post_init__(self) -> None:
        if len(self.edge_labels) != len(self.edge_members):
            raise ValueError("edge_labels and edge_members must have equal length")

    @property
    def vertex_count(self) -> int:
        return len(self.vertex_labels)

    @property
    def edge_count(self) -> int:
        return len(self.edge_members)

    @cached_property
    def vertex_memberships(self) -> tuple[frozenset[int], ...]:
        """Per vertex, the set of incident edge ids (the transpose of edge_members)."""
        incident: list[set[int]] = [set() for _ in range(self.vertex_count)]
        for eid, members in enumerate(self.edge_members):
            for vid in members:
                if 0 <= vid < self.vertex_count:
                    incident[vid].add(eid)
        return tuple(frozenset(s) for s in incident)

    def __repr__(self) -> str:
        return f"Hypergraph(|V|={self.vertex_count}, |E|={self.edge_count})"


def hypergraph(
    vertex_labels: list[str] | tuple[str, ...],
    edges: list[tuple[str, list[int] | set[int] | frozenset[int]]],
) -> Hypergraph:
    """Convenience constructor from (label, members) pairs."""
    return Hypergraph(
        vertex_labels=tuple(vertex_labels),
        edge_labels=tuple(label for label, _ in edges),
        edge_members=tuple(frozenset(members) for _, members in edges),
    )


def validate(h: Hypergraph) -> list[str]:
    """Return one human-readable violation per invariant breach; empty list iff valid."""
    violations: list[str] = []
    for eid, members in enumerate(h.edge_members):
        for vid in sorted(members):
            if not (0 <= vid < h.vertex_count):
                violations.append(
                    f"hyperedge {eid} ({h.edge_labels[eid]!r}) references undeclared vertex {vid}"
                )
    return violations


def dual(h: Hypergraph) -> Hypergraph:
    """Swap the roles of vertices and hyperedges.

    The result's vertices are h's hyperedges; each original vertex v becomes the
    hyperedge of v's incidences. dual(dual(h)) == h exactly.
    """
    return Hypergraph(
        vertex_labels=h.edge_labels,
        edge_labels=h.vertex_labels,
        edge_members=h.vertex_memberships,
    )


def _signature_groups(signatures: list[frozenset[int]]) -> list[list[int]]:
    """Group ids by identical signature, groups ordered by first occurrence."""
    order: dict[frozenset[int], int] = {}
    groups: list[list[int]] = []
    for i, sig in enumerate(signatures):
        g = order.get(sig)
        if g is None:
            order[sig] = len(groups)
            groups.append([i])
        else:
            groups[g].append(i)
    return groups


def super_label(labels: list[str]) -> str:
    if len(labels) == 1:
        return labels[0]
    return f"{min(labels)} (x{len(labels)})"


def vertex_collapse_groups(h: Hypergraph) -> list[list[int]]:
    """Vertex ids grouped by identical edge membership, in first-occurrence order."""
    return _signature_groups(list(h.vertex_memberships))


def edge_collapse_groups(h: Hypergraph) -> list[list[int]]:
    """Edge ids grouped by identical member set, in first-occurrence order."""
    return _signature_groups(list(h.edge_members))


def collapse_vertices(h: Hypergraph) -> tuple[Hypergraph, list[MergeRecord]]:
    """Merge vertices that belong to exactly the same set of hyperedges.

    Degree-0 vertices all share the empty signature and so merge into a single
    super-vertex. Super-vertex labels are the smallest constituent label plus a
    count suffix. New ids are assigned in first-occurrence order.
    """
    groups = vertex_collapse_groups(h)
    old_to_new = [0] * h.vertex_count
    labels: list[str] = []
    records: list[MergeRecord] = []
    for new_id, group in enumerate(groups):
        for old in group:
            old_to_new[old] = new_id
        labels.append(super_label([h.vertex_labels[i] for i in group]))
        if len(group) >= 2:
            records.append(MergeRecord(new_id, tuple(group), "vertex"))
    members = tuple(
        frozenset(old_to_new[v] for v in e) for e in h.edge_members
    )
    out = Hypergraph(tuple(labels), h.edge_labels, members)
    return out, records


def collapse_edges(h: Hypergraph) -> tuple[Hypergraph, list[MergeRecord]]:
    """Merge hyperedges that share exactly the same set of vertices."""
    groups = edge_collapse_groups(h)
    labels: list[str] = []
    members: list[frozenset[int]] = []
    records: list[MergeRecord] = []
    for new_id, group in enumerate(groups):
        labels.append(super_label([h.edge_labels[i] for i in group]))
        members.append(h.edge_members[group[0]])
        if len(group) >= 2:
            records.append(MergeRecord(new_id, tuple(group), "edge"))
    out = Hypergraph(h.vertex_labels, tuple(labels), tuple(members))
    return out, records
