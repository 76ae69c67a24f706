"""
Verifying RS-efficiency with a matching
=======================================

With approval-style (two-class) preferences whose approved sets have at most
two members, responsive efficiency can be checked in polynomial time. The
check builds a bipartite graph between committee members and outside
candidates and compares its minimum vertex cover with the free seats.
"""

from pareto_committees import (
    max_matching,
    min_vertex_cover,
    parse_profile,
    rs_improve_dichotomous_tw2,
    tw2_decomposition,
    verify_bruteforce,
    Extension,
)

profile = parse_profile("""
6 2 5
{1,3},{2,4,5,6}
{2,3},{1,4,5,6}
{2,4},{1,3,5,6}
{4,5},{1,2,3,6}
{5,6},{1,2,3,4}
""")
committee = (1, 2)

dec = tw2_decomposition(profile, committee)
print("fully served agents:", sorted(dec.fully_served))
print("half served agents: ", sorted(dec.half_served))
print("touched candidates: ", sorted(dec.touched))
print("graph edges:        ", sorted(dec.graph.edges))
print("matching:           ", sorted(max_matching(dec.graph)))
print("vertex cover:       ", sorted(min_vertex_cover(dec.graph)))

verdict = rs_improve_dichotomous_tw2(profile, committee)
print("\nmatching-based verdict:", verdict)
# the exponential oracle agrees
print("brute-force verdict:   ", verify_bruteforce(profile, Extension.RS, committee))
