"""Enumeration kernels behind the bracket and rank-polynomial sums.

Each kernel sweeps an exponential index space and records small integer
statistics per index; the exact polynomial assembly happens afterwards in
ordinary Python integers.  The function bodies are numba-compatible loops;
see _accel for how the compiled and interpreted paths are selected.  The
undecorated bodies stay importable (suffix _py) for benchmarks and
cross-checking.
"""

from __future__ import annotations

import numpy as np

from ._accel import JIT_ENABLED, njit


def _state_delta_sweep(n_crossings, arc_mate):
    # arc_mate: int32[4n], arc_mate[p] = port joined to p by an arc.
    # State bit i set = B-splitting at crossing i.  A joins ports {0,1} and
    # {2,3} of a crossing (partner = port ^ 1), B joins {0,3} and {1,2}
    # (partner = port ^ 3).  Returns delta per state, free loops excluded.
    n_ports = arc_mate.shape[0]
    n_states = 1 << n_crossings
    out = np.zeros(n_states, dtype=np.int16)
    stamp = np.full(n_ports, -1, dtype=np.int64)
    for state in range(n_states):
        curves = 0
        for start in range(n_ports):
            if stamp[start] == state:
                continue
            curves += 1
            p = start
            while stamp[p] != state:
                stamp[p] = state
                c = p >> 2
                if (state >> c) & 1 == 0:
                    q = (c << 2) | ((p & 3) ^ 1)
                else:
                    q = (c << 2) | ((p & 3) ^ 3)
                stamp[q] = state
                p = arc_mate[q]
        out[state] = curves
    return out


def _subgraph_sweep(n_verts, n_edges, vert_off, vert_darts, edge_u, edge_w,
                    edge_of_dart, partner):
    # vert_darts: dart ids grouped by vertex in rotation order, delimited by
    # vert_off; edge_u/edge_w: endpoint vertex of each edge's two darts.
    # For each edge subset: k = vertex components, bc = orbits of
    # (restricted rotation o edge pairing) on present darts, one orbit per
    # subgraph-isolated vertex.  Returns (k, bc) per subset.
    n_darts = vert_darts.shape[0]
    n_masks = 1 << n_edges
    k_out = np.zeros(n_masks, dtype=np.int16)
    bc_out = np.zeros(n_masks, dtype=np.int16)
    parent = np.zeros(n_verts, dtype=np.int32)
    nxt = np.zeros(n_darts + 1, dtype=np.int32)
    stamp = np.full(n_darts + 1, -1, dtype=np.int64)
    for mask in range(n_masks):
        for i in range(n_verts):
            parent[i] = i
        k = n_verts
        for e in range(n_edges):
            if (mask >> e) & 1:
                u = edge_u[e]
                while parent[u] != u:
                    parent[u] = parent[parent[u]]
                    u = parent[u]
                w = edge_w[e]
                while parent[w] != w:
                    parent[w] = parent[parent[w]]
                    w = parent[w]
                if u != w:
                    parent[u] = w
                    k -= 1
        k_out[mask] = k
        bc = 0
        for v in range(n_verts):
            first = -1
            prev = -1
            for idx in range(vert_off[v], vert_off[v + 1]):
                d = vert_darts[idx]
                if (mask >> edge_of_dart[d]) & 1:
                    if first == -1:
                        first = d
                    else:
                        nxt[prev] = d
                    prev = d
            if first == -1:
                bc += 1
            else:
                nxt[prev] = first
        for d in range(n_darts):
            if (mask >> edge_of_dart[d]) & 1 and stamp[d] != mask:
                bc += 1
                x = d
                while stamp[x] != mask:
                    stamp[x] = mask
                    x = nxt[partner[x]]
        bc_out[mask] = bc
    return k_out, bc_out


_state_delta_sweep_py = _state_delta_sweep
_subgraph_sweep_py = _subgraph_sweep

if JIT_ENABLED:
    state_delta_sweep = njit(cache=True)(_state_delta_sweep)
    subgraph_sweep = njit(cache=True)(_subgraph_sweep)
else:
    state_delta_sweep = _state_delta_sweep
    subgraph_sweep = _subgraph_sweep


if hasattr(np, "bitwise_count"):

    def popcounts(n_masks: int) -> np.ndarray:
        """Bit counts of 0 .. n_masks-1 as an int64 array."""
        return np.bitwise_count(np.arange(n_masks, dtype=np.uint64)).astype(np.int64)

else:
    _BYTE_POP = np.array([bin(i).count("1") for i in range(256)], dtype=np.int64)

    def popcounts(n_masks: int) -> np.ndarray:
        """Bit counts of 0 .. n_masks-1 as an int64 array."""
        masks = np.arange(n_masks, dtype=np.uint64)
        return _BYTE_POP[masks.view(np.uint8).reshape(n_masks, 8)].sum(axis=1)
