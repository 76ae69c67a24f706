"""
Serial dictatorships and their incentives
=========================================

Runs every mechanism on one small profile, then searches for profitable
misreports by trying every weak order an agent could submit.
"""

from pareto_committees import MechanismId, Profile, run_mechanism, sp_check

# 1: a > b > c     2: a > c > b     (k = 2)
fair = Profile.from_rankings([[1, 2, 3], [1, 3, 2]], k=2)
for mech in MechanismId:
    print(f"{mech.value:>12}: {run_mechanism(mech, fair)}")

# the quota-based variant gives agent 2 a turn after one pick, so agent 1
# profits by putting b first and trusting agent 2 to take a
print()
for mech in (MechanismId.SD, MechanismId.FAIR_SD):
    print(f"{mech.value:>12}: {sp_check(mech, fair) or 'no manipulation'}")

# the worst-extension dictatorship deletes bottom classes before choosing;
# agent 1 gains by splitting a tie that the deletion step relies on
tricky = Profile.from_rankings([[1, (2, 3)], [3, 2, 1]], k=2)
found = sp_check(MechanismId.WORST_SD, tricky)
print(f"\n{'worst-sd':>12}: honest {found.honest}, agent {found.agent} reports "
      f"{found.report.classes} and gets {found.manipulated}")
