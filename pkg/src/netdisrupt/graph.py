"""Undirected weighted simple graph keyed by stable integer node ids."""
from __future__ import annotations

import hashlib
import math
from dataclasses import dataclass
from enum import Enum
from typing import Iterator, NamedTuple

import numpy as np

from . import kernels


class WeightMode(str, Enum):
    UNWEIGHTED = "unweighted"
    WEIGHTED = "weighted"

    @classmethod
    def parse(cls, value: str | WeightMode) -> WeightMode:
        if isinstance(value, cls):
            return value
        try:
            return cls(str(value).lower())
        except ValueError as exc:
            raise ValueError(f"weight mode must be one of {[m.value for m in cls]}, got {value!r}") from exc


class GraphError(ValueError):
    """Base class for rejected graph mutations and queries."""


class DuplicateNodeError(GraphError):
    def __init__(self, node):
        super().__init__(f"node {node} already present")
        self.node = node


class MissingNodeError(GraphError):
    def __init__(self, node):
        super().__init__(f"node {node} not in graph")
        self.node = node


class SelfLoopError(GraphError):
    def __init__(self, node):
        super().__init__(f"self-loop on node {node} not allowed")
        self.node = node


class DuplicateEdgeError(GraphError):
    def __init__(self, i, j):
        super().__init__(f"edge ({i}, {j}) already present")
        self.edge = (i, j)


class InvalidWeightError(GraphError):
    def __init__(self, i, j, weight):
        super().__init__(f"edge ({i}, {j}) has non-positive weight {weight!r}")
        self.edge = (i, j)
        self.weight = weight


class CSR(NamedTuple):
    """Compressed adjacency; row ``k`` belongs to node ``ids[k]``."""

    ids: np.ndarray
    indptr: np.ndarray
    indices: np.ndarray
    weights: np.ndarray


@dataclass(frozen=True)
class ComponentPartition:
    components: list[frozenset[int]]
    lcc_size: int

    def __len__(self) -> int:
        return len(self.components)


def _check_node_id(n) -> int:
    if isinstance(n, bool) or not isinstance(n, (int, np.integer)) or n < 0:
        raise GraphError(f"node id must be a non-negative integer, got {n!r}")
    return int(n)


class Graph:
    """Undirected simple graph with positive edge weights.

    Parallel observations of the same pair are expected to be folded into a
    single edge whose weight is the interaction count.
    """

    def __init__(self):
        self._adj: dict[int, dict[int, float]] = {}
        self._attrs: dict[int, dict[str, str]] = {}
        self._n_edges = 0

    @classmethod
    def from_edges(cls, edges, nodes=()) -> Graph:
        """Build from ``(i, j)`` or ``(i, j, w)`` tuples, adding endpoints as needed."""
        g = cls()
        for n in nodes:
            g.add_node(n)
        for e in edges:
            i, j = e[0], e[1]
            w = e[2] if len(e) > 2 else 1
            for n in (i, j):
                if n not in g:
                    g.add_node(n)
            g.add_edge(i, j, w)
        return g

    # -- structure ---------------------------------------------------------

    def __contains__(self, n) -> bool:
        return n in self._adj

    def __len__(self) -> int:
        return len(self._adj)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._adj == other._adj

    def __repr__(self) -> str:
        return f"Graph(nodes={self.number_of_nodes()}, edges={self.number_of_edges()})"

    @property
    def nodes(self) -> list[int]:
        return sorted(self._adj)

    def number_of_nodes(self) -> int:
        return len(self._adj)

    def number_of_edges(self) -> int:
        return self._n_edges

    def edges(self) -> Iterator[tuple[int, int, float]]:
        """Each undirected edge once as ``(i, j, w)`` with ``i < j``, in sorted order."""
        for i in self.nodes:
            for j in sorted(self._adj[i]):
                if i < j:
                    yield i, j, self._adj[i][j]

    def neighbors(self, n) -> list[int]:
        self._require(n)
        return sorted(self._adj[n])

    def has_edge(self, i, j) -> bool:
        return i in self._adj and j in self._adj[i]

    def weight(self, i, j) -> float:
        self._require(i)
        self._require(j)
        try:
            return self._adj[i][j]
        except KeyError:
            raise GraphError(f"no edge ({i}, {j})") from None

    def attributes(self, n) -> dict[str, str]:
        self._require(n)
        return dict(self._attrs.get(n, {}))

    def copy(self) -> Graph:
        g = Graph()
        g._adj = {n: dict(nbrs) for n, nbrs in self._adj.items()}
        g._attrs = {n: dict(a) for n, a in self._attrs.items()}
        g._n_edges = self._n_edges
        return g

    def checksum(self) -> str:
        """SHA-256 over the canonical node and edge listing."""
        h = hashlib.sha256()
        h.update((",".join(map(str, self.nodes)) + "\n").encode())
        for i, j, w in self.edges():
            h.update(f"{i},{j},{w!r}\n".encode())
        return h.hexdigest()

    # -- mutation ----------------------------------------------------------

    def add_node(self, n, attrs: dict[str, str] | None = None) -> None:
        n = _check_node_id(n)
        if n in self._adj:
            raise DuplicateNodeError(n)
        self._adj[n] = {}
        if attrs:
            self._attrs[n] = dict(attrs)

    def add_edge(self, i, j, w: float = 1) -> None:
        if i == j:
            raise SelfLoopError(i)
        self._require(i)
        self._require(j)
        if j in self._adj[i]:
            raise DuplicateEdgeError(i, j)
        if isinstance(w, bool) or not isinstance(w, (int, float, np.integer, np.floating)) \
                or not math.isfinite(w) or w <= 0:
            raise InvalidWeightError(i, j, w)
        self._adj[i][j] = w
        self._adj[j][i] = w
        self._n_edges += 1

    def remove_node(self, n) -> None:
        self._require(n)
        for m in self._adj.pop(n):
            del self._adj[m][n]
            self._n_edges -= 1
        self._attrs.pop(n, None)

    def remove_nodes(self, nodes) -> None:
        for n in nodes:
            self.remove_node(n)

    # -- queries -----------------------------------------------------------

    def degree(self, n, mode: WeightMode | str = WeightMode.UNWEIGHTED) -> float:
        """Incident edge count, or incident weight sum in weighted mode."""
        self._require(n)
        if WeightMode.parse(mode) is WeightMode.WEIGHTED:
            return sum(self._adj[n].values())
        return len(self._adj[n])

    def to_csr(self, mode: WeightMode | str = WeightMode.WEIGHTED) -> CSR:
        """Adjacency in CSR form, rows in ascending id order; unit weights in unweighted mode."""
        weighted = WeightMode.parse(mode) is WeightMode.WEIGHTED
        ids = np.array(self.nodes, dtype=np.int64)
        pos = {int(n): k for k, n in enumerate(ids)}
        indptr = np.zeros(len(ids) + 1, dtype=np.int64)
        indices = np.empty(2 * self._n_edges, dtype=np.int64)
        weights = np.ones(2 * self._n_edges, dtype=np.float64)
        p = 0
        for k, n in enumerate(ids):
            nbrs = self._adj[int(n)]
            for m in sorted(nbrs):
                indices[p] = pos[m]
                if weighted:
                    weights[p] = nbrs[m]
                p += 1
            indptr[k + 1] = p
        return CSR(ids, indptr, indices, weights)

    def connected_components(self) -> ComponentPartition:
        """Components ordered by size (largest first), then by smallest id."""
        csr = self.to_csr(WeightMode.UNWEIGHTED)
        labels = kernels.component_labels(csr.indptr, csr.indices)
        groups: dict[int, set[int]] = {}
        for k, lab in enumerate(labels):
            groups.setdefault(int(lab), set()).add(int(csr.ids[k]))
        comps = sorted((frozenset(c) for c in groups.values()), key=lambda c: (-len(c), min(c)))
        return ComponentPartition(comps, len(comps[0]) if comps else 0)

    def lcc_size(self) -> int:
        csr = self.to_csr(WeightMode.UNWEIGHTED)
        return int(kernels.largest_component_size(csr.indptr, csr.indices))

    def shortest_path_lengths(self, source, mode: WeightMode | str = WeightMode.UNWEIGHTED) -> dict[int, float]:
        """Minimal path cost from ``source`` to every reachable node.

        Weighted mode sums raw edge weights along the path; unreachable nodes
        are left out.
        """
        self._require(source)
        mode = WeightMode.parse(mode)
        csr = self.to_csr(mode)
        src = int(np.searchsorted(csr.ids, source))
        if mode is WeightMode.WEIGHTED:
            dist = kernels.dijkstra(csr.indptr, csr.indices, csr.weights, src)
            return {int(n): float(d) for n, d in zip(csr.ids, dist) if d < np.inf}
        hops = kernels.bfs_hops(csr.indptr, csr.indices, src)
        return {int(n): int(d) for n, d in zip(csr.ids, hops) if d >= 0}

    def max_shortest_path(self, mode: WeightMode | str = WeightMode.UNWEIGHTED) -> float:
        """Largest finite shortest-path cost over all node pairs (0 without edges)."""
        mode = WeightMode.parse(mode)
        csr = self.to_csr(mode)
        if mode is WeightMode.WEIGHTED:
            return float(kernels.max_finite_distance(csr.indptr, csr.indices, csr.weights))
        return int(kernels.max_finite_hops(csr.indptr, csr.indices))

    def ball_frontier(self, i, radius: int) -> set[int]:
        """Nodes exactly ``radius`` hops from ``i``; hop-based in every weight mode."""
        if radius < 0:
            raise ValueError(f"radius must be non-negative, got {radius}")
        dist = self.shortest_path_lengths(i, WeightMode.UNWEIGHTED)
        return {n for n, d in dist.items() if d == radius}

    def _require(self, n) -> None:
        if n not in self._adj:
            raise MissingNodeError(n)
