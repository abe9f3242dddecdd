"""Graph representation, validation, distances, and file I/O.

Graphs are simple, undirected, 0/1, with 0-based integer vertex labels and a
dense adjacency matrix (everything in scope has n <= 256).  Instances are
immutable after construction and safe to share across workers.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional, Sequence

import numpy as np

__all__ = [
    "Graph",
    "DistanceData",
    "GraphError",
    "load_graph",
    "save_graph",
    "distances",
    "induced_subgraph",
]


class GraphError(ValueError):
    """Invalid graph data; .reason names the violated invariant."""

    def __init__(self, reason: str, detail: str = ""):
        self.reason = reason
        super().__init__(f"{reason}: {detail}" if detail else reason)


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph with dense 0/1 adjacency."""

    adjacency: np.ndarray
    label: str = ""
    connected: bool = field(init=False, default=False)

    def __post_init__(self):
        adj = np.asarray(self.adjacency)
        if adj.ndim != 2 or adj.shape[0] != adj.shape[1]:
            raise GraphError("shape", "adjacency must be square")
        adj = adj.astype(np.int8)
        if not np.isin(adj, (0, 1)).all():
            raise GraphError("entries", "adjacency entries must be 0/1")
        if adj.diagonal().any():
            v = int(np.nonzero(adj.diagonal())[0][0])
            raise GraphError("loop", f"vertex {v}")
        if (adj != adj.T).any():
            u, v = (int(i) for i in np.argwhere(adj != adj.T)[0])
            raise GraphError("asymmetric", f"pair ({u}, {v})")
        adj.setflags(write=False)
        object.__setattr__(self, "adjacency", adj)
        object.__setattr__(self, "connected", self._check_connected())

    def _check_connected(self) -> bool:
        n = self.n
        if n == 0:
            return False
        seen = np.zeros(n, dtype=bool)
        seen[0] = True
        frontier = [0]
        while frontier:
            nxt = []
            for u in frontier:
                for v in np.nonzero(self.adjacency[u])[0]:
                    if not seen[v]:
                        seen[v] = True
                        nxt.append(int(v))
            frontier = nxt
        return bool(seen.all())

    @property
    def n(self) -> int:
        return self.adjacency.shape[0]

    def degree(self, v: int) -> int:
        return int(self.adjacency[v].sum())

    def is_regular(self) -> Optional[int]:
        """The common valency, or None when degrees differ."""
        degs = self.adjacency.sum(axis=1)
        k = int(degs[0])
        return k if (degs == k).all() else None

    def neighbors(self, v: int) -> np.ndarray:
        return np.nonzero(self.adjacency[v])[0]

    def edges(self) -> list[tuple[int, int]]:
        us, vs = np.nonzero(np.triu(self.adjacency))
        return [(int(u), int(v)) for u, v in zip(us, vs)]

    def require_connected(self):
        if not self.connected:
            raise GraphError("disconnected", self.label or f"graph on {self.n} vertices")

    def __repr__(self):
        tag = f" {self.label!r}" if self.label else ""
        return f"Graph(n={self.n}{tag})"


@dataclass(frozen=True)
class DistanceData:
    """BFS-exact distance structure: diameter, distance matrix, distance matrices A_i."""

    D: int
    dist: np.ndarray
    A: list[np.ndarray]

    def classes_from(self, x: int, i: int) -> np.ndarray:
        """Vertices at distance i from x, in increasing label order."""
        return np.nonzero(self.dist[x] == i)[0]


def distances(g: Graph) -> DistanceData:
    """All-pairs BFS distances plus the distance matrices A_0..A_D."""
    g.require_connected()
    n = g.n
    dist = np.full((n, n), -1, dtype=np.int64)
    nbrs = [g.neighbors(u) for u in range(n)]
    for s in range(n):
        dist[s, s] = 0
        frontier = [s]
        d = 0
        while frontier:
            d += 1
            nxt = []
            for u in frontier:
                for v in nbrs[u]:
                    if dist[s, v] < 0:
                        dist[s, v] = d
                        nxt.append(int(v))
            frontier = nxt
    D = int(dist.max())
    A = [(dist == i).astype(np.int64) for i in range(D + 1)]
    dist.setflags(write=False)
    for m in A:
        m.setflags(write=False)
    return DistanceData(D=D, dist=dist, A=A)


def induced_subgraph(g: Graph, vertices: Sequence[int]) -> Graph:
    """Subgraph on the given vertices, relabelled 0..m-1 preserving order."""
    verts = [int(v) for v in vertices]
    if not verts:
        raise GraphError("empty", "induced subgraph needs a nonempty vertex set")
    if len(set(verts)) != len(verts):
        raise GraphError("duplicate", "vertex set has repeats")
    for v in verts:
        if not 0 <= v < g.n:
            raise GraphError("out-of-range", f"vertex {v}")
    sub = g.adjacency[np.ix_(verts, verts)]
    return Graph(sub, label=f"{g.label}[{len(verts)}]" if g.label else "")


# ---------------------------------------------------------------------------
# file formats: JSON {"n":, "edges":, "label":} or plain-text edge list
# ---------------------------------------------------------------------------


def _graph_from_edges(n: int, edges, label: str) -> Graph:
    adj = np.zeros((n, n), dtype=np.int8)
    seen = set()
    for e in edges:
        if len(e) != 2:
            raise GraphError("parse", f"edge {e!r} is not a pair")
        u, v = int(e[0]), int(e[1])
        if u == v:
            raise GraphError("loop", f"edge ({u}, {v})")
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError("out-of-range", f"edge ({u}, {v}) with n={n}")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise GraphError("duplicate", f"edge {key}")
        seen.add(key)
        adj[u, v] = adj[v, u] = 1
    return Graph(adj, label=label)


def load_graph(path) -> Graph:
    """Load a graph file (JSON or 'u v' edge lines); disconnection only warns."""
    text = Path(path).read_text()
    stripped = text.lstrip()
    if stripped.startswith("{"):
        try:
            data = json.loads(text)
        except json.JSONDecodeError as e:
            raise GraphError("parse", str(e)) from None
        if not isinstance(data, dict) or "n" not in data or "edges" not in data:
            raise GraphError("parse", 'JSON graph needs "n" and "edges"')
        g = _graph_from_edges(int(data["n"]), data["edges"], str(data.get("label", "")))
    else:
        edges = []
        hi = -1
        for lineno, line in enumerate(text.splitlines(), 1):
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            parts = line.split()
            if len(parts) != 2:
                raise GraphError("parse", f"line {lineno}: expected 'u v'")
            u, v = int(parts[0]), int(parts[1])
            edges.append((u, v))
            hi = max(hi, u, v)
        if hi < 0:
            raise GraphError("parse", "no edges found")
        g = _graph_from_edges(hi + 1, edges, "")
    if not g.connected:
        import warnings

        warnings.warn(f"graph {g.label or path} is disconnected", stacklevel=2)
    return g


def save_graph(g: Graph, path) -> None:
    """Write the canonical JSON graph format (edges with u < v, sorted)."""
    payload = {"n": g.n, "edges": [[u, v] for u, v in g.edges()]}
    if g.label:
        payload["label"] = g.label
    Path(path).write_text(json.dumps(payload, indent=None, separators=(",", ":")) + "\n")
