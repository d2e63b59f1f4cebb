"""Per-order value tables for linear Jaco graph families.

Four sequences are supported, each tabulated for every order 1..n_max:

  edges                 arc count of the order-n graph
  gutman                Gutman index of the underlying graph (connected only)
  jaconian_cardinality  number of maximum-degree vertices
  v1_vn_distance        distance between the first and last vertex

The order-n graph is the order-n_max graph with the tail vertices deleted, so
one build serves all orders; distance work runs on prefix views of a single
dense adjacency matrix.  Memory for that matrix puts the practical ceiling at
a few thousand vertices.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .graph_core import (
    DisconnectedGraphError,
    _pair_sum,
    dense_adjacency,
    layered_distance_matrix,
)
from .jaco import LinearFunction, build_jaco, prefix_scan

SEQUENCE_NAMES = ("edges", "gutman", "jaconian_cardinality", "v1_vn_distance")


@dataclass(frozen=True)
class SequenceTable:
    """Rows (n, value) for n = 1..n_max, strictly increasing in n."""

    name: str
    f: LinearFunction
    rows: tuple[tuple[int, int], ...]


def _first_to_last_distance(adj_view: np.ndarray) -> int:
    """BFS distance from vertex 1 to the last vertex on a dense prefix view."""
    n = adj_view.shape[0]
    if n == 1:
        return 0
    reached = np.zeros(n, dtype=bool)
    reached[0] = True
    frontier = reached.astype(np.float32)
    level = 0
    while True:
        expanded = (adj_view @ frontier) > 0
        fresh = expanded & ~reached
        if not fresh.any():
            raise DisconnectedGraphError(
                f"v_{n} is unreachable from v_1 at order {n}; "
                "the distance sequence requires connected graphs"
            )
        level += 1
        if fresh[n - 1]:
            return level
        reached |= fresh
        frontier = fresh.astype(np.float32)


def sequence_table(name: str, f: LinearFunction, n_max: int) -> SequenceTable:
    """Tabulate one named sequence for orders 1..n_max."""
    if name not in SEQUENCE_NAMES:
        raise ValueError(f"unknown sequence {name!r}; choose from {SEQUENCE_NAMES}")
    if n_max < 1:
        raise ValueError("n_max must be at least 1")

    if name in ("edges", "jaconian_cardinality"):
        facts = prefix_scan(f, n_max)
        if name == "edges":
            rows = tuple((fact.n, fact.edge_count) for fact in facts)
        else:
            rows = tuple((fact.n, fact.jaconian_count) for fact in facts)
        return SequenceTable(name, f, rows)

    adj = dense_adjacency(build_jaco(f, n_max).underlying)
    values = []
    if name == "v1_vn_distance":
        for n in range(1, n_max + 1):
            values.append(_first_to_last_distance(adj[:n, :n]))
    else:
        for n in range(1, n_max + 1):
            view = adj[:n, :n]
            dist = layered_distance_matrix(view)
            if (dist < 0).any():
                raise DisconnectedGraphError(
                    f"the order-{n} graph is disconnected; "
                    "the Gutman index sequence requires connected graphs"
                )
            deg = view.sum(axis=1).astype(np.int64)
            max_deg = int(deg.max()) if n else 0
            bound = n * n * max_deg * max_deg * int(dist.max())
            values.append(_pair_sum(np.outer(deg, deg), dist, bound))
    return SequenceTable(name, f, tuple(zip(range(1, n_max + 1), values)))
