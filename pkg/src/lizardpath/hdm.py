"""First pipeline phase: breadth-layered labeling over the region partition.

One pass assigns every reachable node a region id (its hop layer from the
source), a parent, and a provisional total weight.  Each arc is screened
exactly once; an arc pointing into the next layer may improve that leaf's
label, while arcs into the same or an earlier layer are left to the
correction phase.  Distances produced here are upper bounds; they are
exact when every arc of the instance crosses exactly one layer forward.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .graph import Graph, LabelState, NodeOutOfRangeError


@dataclass
class RegionPartition:
    """Layer lists r_1..r_k; regions[0] is the source layer (id 1)."""

    regions: list[list[int]] = field(default_factory=list)

    @property
    def k(self) -> int:
        return len(self.regions)


@dataclass
class HdmOutput:
    labels: LabelState
    partition: RegionPartition
    origins: list[int]
    arc_scans: int


def hdm_run(g: Graph, source: int, seeking: bool = False) -> HdmOutput:
    """Layered labeling pass from the source.

    With ``seeking`` enabled, roots observed (at scan time) with an arc
    into their own or an earlier layer that would improve the leaf are
    gathered as origins for the correction phase.
    """
    labels = LabelState.initial(g.n, source)
    parent = labels.parent
    dist = labels.dist
    region = labels.region
    adj = g._adj

    regions = [[source]]
    origins: list[int] = []
    in_origins = [False] * g.n
    arc_scans = 0

    frontier = regions[0]
    i = 1
    while frontier:
        next_frontier: list[int] = []
        for v in frontier:
            dv = dist[v]
            rv = region[v]
            for leaf, w in adj[v]:
                arc_scans += 1
                nw = dv + w
                rl = region[leaf]
                if rl == 0:
                    region[leaf] = i + 1
                    next_frontier.append(leaf)
                    parent[leaf] = v
                    dist[leaf] = nw
                elif rl > rv:
                    if dist[leaf] > nw:
                        parent[leaf] = v
                        dist[leaf] = nw
                elif seeking and dist[leaf] > nw and not in_origins[v]:
                    in_origins[v] = True
                    origins.append(v)
        if next_frontier:
            regions.append(next_frontier)
        frontier = next_frontier
        i += 1

    return HdmOutput(labels, RegionPartition(regions), origins, arc_scans)


def hdm_run_with_seeking(g: Graph, source: int) -> HdmOutput:
    """Labeling pass that also gathers origins inline while scanning.

    Kept for fidelity with the one-pass formulation; the default pipeline
    prefers :func:`collect_origins`, which cannot miss arcs whose tail
    got relabeled after the arc was screened.
    """
    return hdm_run(g, source, seeking=True)


def collect_origins(g: Graph, labels: LabelState) -> list[int]:
    """Duplicate-free roots of every arc still violating optimality.

    Full post-pass over all arcs; a superset-or-equal of the inline
    seeking list, so no improvable node is orphaned when the correction
    phase starts.
    """
    dist = labels.dist
    region = labels.region
    origins: list[int] = []
    for v in range(g.n):
        if region[v] == 0:
            continue
        dv = dist[v]
        for leaf, w in g._adj[v]:
            dl = dist[leaf]
            if dl is None or dl > dv + w:
                origins.append(v)
                break
    return origins


def check_partition(g: Graph, out: HdmOutput, source: int) -> str | None:
    """Validate region-partition invariants; returns a message or None.

    Checks: first region is exactly the source, regions are disjoint,
    their union is the reachable set, and every node in region i > 1 has
    an in-arc from region i-1.
    """
    regions = out.partition.regions
    region = out.labels.region
    if not regions or regions[0] != [source]:
        return "first region must be exactly [source]"
    seen: set[int] = set()
    for idx, nodes in enumerate(regions, start=1):
        for v in nodes:
            if v in seen:
                return f"node {v} appears in two regions"
            seen.add(v)
            if region[v] != idx:
                return f"node {v} region id {region[v]} != layer {idx}"
    labeled = {v for v in range(g.n) if region[v] > 0}
    if seen != labeled:
        return "regions do not cover exactly the labeled nodes"
    # feed arcs: some in-arc from the previous layer must exist
    feeds: list[set[int]] = [set() for _ in range(len(regions) + 2)]
    for v, leaf, _ in g.arcs():
        rv = region[v]
        rl = region[leaf]
        if rv > 0 and rl == rv + 1:
            feeds[rl].add(leaf)
    for idx in range(2, len(regions) + 1):
        for v in regions[idx - 1]:
            if v not in feeds[idx]:
                return f"node {v} in region {idx} has no arc from region {idx - 1}"
    return None
