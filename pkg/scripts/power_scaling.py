"""Wall-clock of both power-graph modes as n grows.

Usage: python scripts/power_scaling.py [--sizes 25,50,100,200] [--k 3] [--p 0.1]
"""

import argparse
import time

from rulingset.generators import random_gnp
from rulingset.power import PowerMode, power_graph, reduce_k_graph


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--sizes", default="25,50,100,200")
    ap.add_argument("--k", type=int, default=3)
    ap.add_argument("--p", type=float, default=0.1)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    print("n,m,k,m_power,rounds,bfs_ms,iterative_ms")
    for n in (int(x) for x in args.sizes.split(",")):
        g = random_gnp(n, args.p, args.seed)
        t0 = time.perf_counter()
        bfs = power_graph(g, args.k, PowerMode.BFS)
        t1 = time.perf_counter()
        it, deltas = reduce_k_graph(g, args.k)
        t2 = time.perf_counter()
        assert it == bfs
        print(f"{n},{g.m},{args.k},{bfs.m},{len(deltas)},{(t1 - t0) * 1e3:.2f},{(t2 - t1) * 1e3:.2f}")


if __name__ == "__main__":
    main()
