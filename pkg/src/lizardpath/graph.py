"""Weighted digraph model, label arrays, and DIMACS shortest-path I/O.

A graph is stored as one leaf list per root node: every node owns the
ordered list of (leaf, weight) pairs its out-arcs point to.  Graphs are
immutable after construction; solvers keep their working state in a
separate :class:`LabelState`.
"""

from __future__ import annotations

from typing import Iterable, Iterator, TextIO

# Arc weights must fit an unsigned 32-bit integer; path totals are
# accumulated in plain Python ints, so no sum can overflow.
MAX_WEIGHT = 2**32 - 1

LeafList = tuple[tuple[int, int], ...]


class GraphError(ValueError):
    """Base class for graph construction and parsing failures."""


class NodeOutOfRangeError(GraphError):
    def __init__(self, node: int, n: int):
        super().__init__(f"node id {node} out of range [0, {n})")
        self.node = node


class NegativeWeightError(GraphError):
    def __init__(self, src: int, dst: int, weight: int):
        super().__init__(f"arc ({src}, {dst}) has negative weight {weight}")
        self.src = src
        self.dst = dst


class WeightTooLargeError(GraphError):
    def __init__(self, src: int, dst: int, weight: int):
        super().__init__(
            f"arc ({src}, {dst}) weight {weight} exceeds 32-bit limit {MAX_WEIGHT}"
        )


class SelfLoopError(GraphError):
    def __init__(self, node: int):
        super().__init__(f"self-loop on node {node} is not allowed")
        self.node = node


class DimacsParseError(GraphError):
    def __init__(self, lineno: int, message: str):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


class HeaderMismatchError(GraphError):
    def __init__(self, declared: int, actual: int):
        super().__init__(f"header declares {declared} arcs, file contains {actual}")
        self.declared = declared
        self.actual = actual


class Graph:
    """Immutable weighted digraph.

    ``n`` is the node count, ``arc_count`` the number of stored arcs after
    parallel-arc deduplication.  Safe to share across threads; nothing in
    the solver stack ever mutates a built graph.
    """

    __slots__ = ("n", "arc_count", "_adj")

    def __init__(self, n: int, adj: tuple[LeafList, ...], arc_count: int):
        self.n = n
        self._adj = adj
        self.arc_count = arc_count

    @classmethod
    def _from_leaf_lists(cls, n: int, leaf_lists: Iterable[Iterable[tuple[int, int]]]) -> Graph:
        """Trusted constructor for generators that build valid arcs directly."""
        adj = tuple(tuple(leaves) for leaves in leaf_lists)
        assert len(adj) == n
        return cls(n, adj, sum(len(ll) for ll in adj))

    def leaf_set(self, v: int) -> LeafList:
        """Ordered (leaf, weight) pairs of node v's out-arcs; () if none."""
        if not 0 <= v < self.n:
            raise NodeOutOfRangeError(v, self.n)
        return self._adj[v]

    def out_degree(self, v: int) -> int:
        if not 0 <= v < self.n:
            raise NodeOutOfRangeError(v, self.n)
        return len(self._adj[v])

    def arcs(self) -> Iterator[tuple[int, int, int]]:
        """Yield (src, dst, weight) in stored order."""
        for v, leaves in enumerate(self._adj):
            for leaf, w in leaves:
                yield v, leaf, w

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self._adj == other._adj

    def __hash__(self):
        return hash((self.n, self._adj))

    def __repr__(self):
        return f"Graph(n={self.n}, arcs={self.arc_count})"


def build_graph(n: int, arcs: Iterable[tuple[int, int, int]]) -> Graph:
    """Validate and assemble a graph from an (src, dst, weight) arc list.

    Parallel arcs collapse to the minimum weight, keeping the position of
    the first occurrence; self-loops are rejected.
    """
    if n < 0:
        raise GraphError(f"node count must be nonnegative, got {n}")
    # per root: leaf -> position in the leaf list, so duplicates can be
    # min-merged in place while preserving first-insertion order
    lists: list[list[list[int]]] = [[] for _ in range(n)]
    index: list[dict[int, int]] = [{} for _ in range(n)]
    for src, dst, w in arcs:
        if not 0 <= src < n:
            raise NodeOutOfRangeError(src, n)
        if not 0 <= dst < n:
            raise NodeOutOfRangeError(dst, n)
        if src == dst:
            raise SelfLoopError(src)
        if w < 0:
            raise NegativeWeightError(src, dst, w)
        if w > MAX_WEIGHT:
            raise WeightTooLargeError(src, dst, w)
        pos = index[src].get(dst)
        if pos is None:
            index[src][dst] = len(lists[src])
            lists[src].append([dst, w])
        elif w < lists[src][pos][1]:
            lists[src][pos][1] = w
    adj = tuple(tuple((d, w) for d, w in ll) for ll in lists)
    return Graph(n, adj, sum(len(ll) for ll in adj))


class LabelState:
    """Per-node labeling arrays shared by the solver pipeline.

    ``parent[v]`` is the predecessor on the current best path (None for
    the source and unvisited nodes), ``dist[v]`` the current total weight
    (None = unset), ``region[v]`` the layer id assigned by the first
    pass (0 = wild, i.e. never visited).
    """

    __slots__ = ("parent", "dist", "region")

    def __init__(self, parent: list[int | None], dist: list[int | None], region: list[int]):
        self.parent = parent
        self.dist = dist
        self.region = region

    @classmethod
    def initial(cls, n: int, source: int) -> LabelState:
        if not 0 <= source < n:
            raise NodeOutOfRangeError(source, n)
        parent: list[int | None] = [None] * n
        dist: list[int | None] = [None] * n
        region = [0] * n
        dist[source] = 0
        region[source] = 1
        return cls(parent, dist, region)

    def copy(self) -> LabelState:
        return LabelState(list(self.parent), list(self.dist), list(self.region))

    def is_labeled(self, v: int) -> bool:
        return self.region[v] > 0 or self.dist[v] is not None


def find_shorter_arms(g: Graph, labels: LabelState) -> list[tuple[int, int]]:
    """All arcs that still violate optimality under the given labels.

    An arc (v, leaf) qualifies when v is labeled and the leaf is either
    wild or reachable more cheaply through v.  An empty result certifies
    that every labeled distance is optimal.
    """
    dist = labels.dist
    region = labels.region
    out: list[tuple[int, int]] = []
    for v in range(g.n):
        if region[v] == 0:
            continue
        dv = dist[v]
        for leaf, w in g._adj[v]:
            dl = dist[leaf]
            if dl is None or dl > dv + w:
                out.append((v, leaf))
    return out


def load_dimacs(stream: TextIO | Iterable[str]) -> Graph:
    """Parse the 9th DIMACS Challenge shortest-path text format.

    Accepts ``c`` comment lines, a single ``p sp <n> <m>`` header, and
    ``a <src> <dst> <weight>`` arc lines with 1-based node ids.  Node ids
    are converted to 0-based internally.
    """
    n = -1
    declared = -1
    raw_arcs = 0
    arcs: list[tuple[int, int, int]] = []
    lineno = 0
    for lineno, line in enumerate(stream, start=1):
        line = line.strip()
        if not line or line.startswith("c"):
            continue
        fields = line.split()
        kind = fields[0]
        if kind == "p":
            if n >= 0:
                raise DimacsParseError(lineno, "duplicate problem line")
            if len(fields) != 4 or fields[1] != "sp":
                raise DimacsParseError(lineno, f"malformed problem line: {line!r}")
            try:
                n = int(fields[2])
                declared = int(fields[3])
            except ValueError:
                raise DimacsParseError(lineno, f"non-integer problem line: {line!r}") from None
            if n < 0 or declared < 0:
                raise DimacsParseError(lineno, "negative count in problem line")
        elif kind == "a":
            if n < 0:
                raise DimacsParseError(lineno, "arc line before problem line")
            if len(fields) != 4:
                raise DimacsParseError(lineno, f"malformed arc line: {line!r}")
            try:
                u, v, w = int(fields[1]), int(fields[2]), int(fields[3])
            except ValueError:
                raise DimacsParseError(lineno, f"non-integer arc line: {line!r}") from None
            raw_arcs += 1
            arcs.append((u - 1, v - 1, w))
        else:
            raise DimacsParseError(lineno, f"unknown line type {kind!r}")
    if n < 0:
        raise DimacsParseError(lineno, "missing problem line")
    if raw_arcs != declared:
        raise HeaderMismatchError(declared, raw_arcs)
    return build_graph(n, arcs)


def save_dimacs(g: Graph, stream: TextIO) -> None:
    """Write a graph in DIMACS shortest-path format with 1-based ids."""
    stream.write(f"p sp {g.n} {g.arc_count}\n")
    for src, dst, w in g.arcs():
        stream.write(f"a {src + 1} {dst + 1} {w}\n")
