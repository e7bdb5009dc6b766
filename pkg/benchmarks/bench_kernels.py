"""Time the compiled enumeration kernels against the interpreted bodies.

Run as a script:

    python benchmarks/bench_kernels.py [-n CROSSINGS] [-e EDGES] [-r REPEATS]

The compiled path is what normal imports use; set VKBR_PURE_PYTHON=1 to
check that the interpreted path is what ships when compilation is off.
"""

import argparse
import random
import time

import numpy as np

from vkbr._accel import JIT_ENABLED
from vkbr._kernels import (
    _state_delta_sweep_py,
    _subgraph_sweep_py,
    state_delta_sweep,
    subgraph_sweep,
)
from vkbr.ribbon import Edge, RibbonGraph


def _random_mate(rng, n):
    # Arc matching of a random n-crossing diagram: every out port paired
    # with an in port, as an involution over port ids 4c+p.
    over = [rng.choice((1, 3)) for _ in range(n)]
    outs = [4 * c + p for c in range(n) for p in (2, 4 - over[c])]
    ins = [4 * c + p for c in range(n) for p in (0, over[c])]
    rng.shuffle(ins)
    mate = np.empty(4 * n, dtype=np.int32)
    for a, b in zip(outs, ins):
        mate[a] = b
        mate[b] = a
    return mate


def _random_ribbon_arrays(rng, n_verts, n_edges):
    darts = [f"d{i}" for i in range(2 * n_edges)]
    rotations = [[] for _ in range(n_verts)]
    for dart in darts:
        rotations[rng.randrange(n_verts)].append(dart)
    paired = darts[:]
    rng.shuffle(paired)
    g = RibbonGraph(
        [(f"v{i}", rot) for i, rot in enumerate(rotations)],
        [Edge(f"e{i}", (paired[2 * i], paired[2 * i + 1])) for i in range(n_edges)],
    )
    n_darts = len(g._dart_ids)
    return (
        g.vertex_count,
        g.edge_count,
        np.array(g._vert_off, dtype=np.int32),
        np.arange(n_darts, dtype=np.int32),
        np.array(
            [g._dart_vertex[g._dart_ids[e.darts[0]]] for e in g.edges], dtype=np.int32
        ),
        np.array(
            [g._dart_vertex[g._dart_ids[e.darts[1]]] for e in g.edges], dtype=np.int32
        ),
        np.array(g._edge_of_dart, dtype=np.int32),
        np.array(g._partner, dtype=np.int32),
    )


def _best_of(repeats, fn, *args):
    best = float("inf")
    result = None
    for _ in range(repeats):
        start = time.perf_counter()
        result = fn(*args)
        best = min(best, time.perf_counter() - start)
    return best, result


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("-n", type=int, default=14, help="diagram crossings")
    parser.add_argument("-e", type=int, default=14, help="ribbon graph edges")
    parser.add_argument("-r", "--repeats", type=int, default=3)
    args = parser.parse_args()

    print(f"compiled path available: {JIT_ENABLED}")

    rng = random.Random(7)
    n = args.n
    mate = _random_mate(rng, n)
    print(f"\nstate sweep, {n} crossings ({1 << n} states)")
    state_delta_sweep(n, mate)  # compile before timing
    hot, out_hot = _best_of(args.repeats, state_delta_sweep, n, mate)
    cold, out_cold = _best_of(args.repeats, _state_delta_sweep_py, n, mate)
    assert np.array_equal(out_hot, out_cold)
    print(f"  shipped:     {hot:9.4f} s")
    print(f"  interpreted: {cold:9.4f} s  ({cold / hot:6.1f}x)")

    rng = random.Random(11)
    sweep_args = _random_ribbon_arrays(rng, max(args.e // 3, 1), args.e)
    print(f"\nsubgraph sweep, {args.e} edges ({1 << args.e} subgraphs)")
    subgraph_sweep(*sweep_args)  # compile before timing
    hot, out_hot = _best_of(args.repeats, subgraph_sweep, *sweep_args)
    cold, out_cold = _best_of(args.repeats, _subgraph_sweep_py, *sweep_args)
    assert np.array_equal(out_hot[0], out_cold[0])
    assert np.array_equal(out_hot[1], out_cold[1])
    print(f"  shipped:     {hot:9.4f} s")
    print(f"  interpreted: {cold:9.4f} s  ({cold / hot:6.1f}x)")


if __name__ == "__main__":
    main()
