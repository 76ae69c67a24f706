"""
Comparing committees under five set extensions
==============================================

Two agents with opposite strict rankings over four candidates elect a
committee of two. We list the Pareto efficient committees for each way of
lifting preferences over candidates to preferences over committees.
"""

from pareto_committees import Extension, compare, enumerate_efficient, parse_profile
from pareto_committees.model import format_committee

profile = parse_profile("""
4 2 2
# candidates 1..4 stand for a..d
1,2,3,4
4,3,2,1
""")

# agent 1 compares {a,d} with {b,c}: the responsive extension cannot decide
first = profile.order(1)
for ext in Extension:
    print(f"{ext.value:>5}: agent 1 finds {{a,d}} vs {{b,c}} -> {compare(ext, first, (1, 4), (2, 3)).name}")

print()
for ext in Extension:
    efficient = enumerate_efficient(profile, ext)
    print(f"{ext.value:>5}-efficient:", " ".join("{" + format_committee(w) + "}" for w in efficient))

# the best extension singles out {a,d}: each agent gets their favourite
