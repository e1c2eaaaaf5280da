"""Turan graphs as the edge-count ceiling for complete multipartite graphs.

Run with: python3 demos/turan_graphs.py
"""

import random

from molsnet import (count_edges_brute, make_complete_multipartite, make_turan_graph,
                     turan_edge_count)


def main():
    print("T(m, n) is the complete m-partite graph on n vertices with part")
    print("sizes as equal as possible.  Its edge count has a closed form,")
    print("checked here against a dumb pairwise count:")
    for m, n in ((2, 4), (3, 5), (3, 7), (4, 10), (5, 12), (1, 8), (8, 8)):
        graph = make_turan_graph(m, n)
        formula = turan_edge_count(m, n)
        brute = count_edges_brute(graph)
        print(f"  T({m},{n}): parts {graph.part_sizes}, "
              f"formula {formula}, brute force {brute}")
    print()

    print("Among all ways to split n vertices into m non-empty parts, the")
    print("balanced split maximizes the edge count, strictly:")
    rng = random.Random(42)
    m, n = 4, 14
    best = turan_edge_count(m, n)
    pools = [make_turan_graph(m, n).part_sizes]
    for _ in range(5):
        cuts = sorted(rng.sample(range(1, n), m - 1))
        pools.append(tuple(b - a for a, b in zip([0] + cuts, cuts + [n])))
    seen = []
    for sizes in pools:
        edges = len(make_complete_multipartite(sizes).edges)
        balanced = max(sizes) - min(sizes) <= 1
        seen.append((sizes, edges, balanced))
    print(f"  Turan bound for m={m}, n={n}: {best} edges "
          f"(sizes {make_turan_graph(m, n).part_sizes})")
    for sizes, edges, balanced in seen:
        tag = "balanced, meets the bound" if balanced else "unbalanced, strictly below"
        print(f"  sizes {sizes}: {edges} edges ({tag})")


if __name__ == "__main__":
    main()
