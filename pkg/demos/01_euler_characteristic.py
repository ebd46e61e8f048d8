"""Euler characteristics of finite posets, computed two independent ways.

A finite poset is described by its Hasse diagram: pairs (lower, upper)
with nothing in between.  The zeta matrix records the full order; its
exact integer inverse is the Moebius matrix, and the sum of all Moebius
entries is the Euler characteristic.  Counting strictly increasing
chains with alternating signs gives the same number by a completely
different computation, which makes a great built-in sanity check.
"""

from eulerscan import Poset

# A diamond: bottom 0, incomparable middles 1 and 2, top 3.
diamond = Poset.from_covers(4, [(0, 1), (0, 2), (1, 3), (2, 3)])
print("diamond covers:", sorted(diamond.covers))
print("mu(0, 3) =", diamond.mobius()[0, 3])          # -(1 - 1 - 1) = +1
print("chi via Moebius:", diamond.euler_characteristic())
print("chi via chains: ", diamond.euler_characteristic_by_chains())
print()

# Chains are contractible (chi 1); antichains are n dust points (chi n).
print("chi of a 5-chain:    ", Poset.from_covers(5, [(i, i + 1) for i in range(4)]).euler_characteristic())
print("chi of a 3-antichain:", Poset.from_covers(3, []).euler_characteristic())
print()

# A circular poset: two bottoms, two tops, all four covers.  Its order
# complex is a circle, so chi drops to 0.
circle = Poset.from_covers(4, [(0, 2), (0, 3), (1, 2), (1, 3)])
print("chi of the 4-cycle poset:", circle.euler_characteristic())

# Prime filters (everything above one element) always have chi 1: they
# are cones over their minimum.
p = Poset.from_covers(6, [(0, 2), (1, 2), (2, 3), (2, 4), (3, 5), (4, 5)])
for x in range(p.n):
    assert p.chi_of(p.up_set(x)) == 1
print("every prime filter of a random-ish poset has chi 1: checked")

# The reflexive-transitive closure tolerates redundant input pairs and
# reports which ones it dropped.
redundant = Poset.from_covers(3, [(0, 1), (1, 2), (0, 2)])
print("dropped as transitively implied:", redundant.dropped_covers)
