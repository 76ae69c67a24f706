"""
From vertex covers to committees
================================

A graph has a vertex cover of size k exactly when a particular committee in
an associated election is not RS-efficient. This script builds the election
for a triangle and for a perfect matching and checks both sides.
"""

from pareto_committees import Extension, verify_bruteforce
from pareto_committees.reductions import SimpleGraph, brute_vertex_cover, profile_from_vertex_cover

graphs = {
    "triangle": SimpleGraph(3, [(1, 2), (2, 3), (1, 3)]),
    "matching": SimpleGraph(6, [(1, 2), (3, 4), (5, 6)]),
}

for name, graph in graphs.items():
    tau = brute_vertex_cover(graph)
    print(f"{name}: minimum vertex cover {tau}")
    for k in range(1, graph.vertex_count + 1):
        profile, committee = profile_from_vertex_cover(graph, k)
        verdict = verify_bruteforce(profile, Extension.RS, committee)
        status = "efficient" if verdict.efficient else f"improved by {verdict.witness}"
        print(f"  k={k}: {profile.n} agents, {profile.m} candidates, D={committee} {status}")
