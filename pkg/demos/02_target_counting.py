"""Counting targets on an acyclic sensor network by integration.

Eleven nodes in three layers; the flow runs upward, so a sensor at a
node counts every target at or below itself (an edge target is seen
once its whole edge is below the sensor).  Nobody knows where the
targets sit, yet the integral of the readings against the Euler
characteristic recovers their exact number.
"""

from eulerscan import (
    Poset,
    SensorNetwork,
    TargetPosition,
    TargetSet,
    enumerate_targets,
    integrate,
    integrate_excursion,
    mobius_coefficients,
)

LABELS = ["t1", "t2", "t3", "m1", "m2", "m3", "m4", "b1", "b2", "b3", "b4"]
T1, T2, T3, M1, M2, M3, M4, B1, B2, B3, B4 = range(11)
COVERS = [
    (M1, T1), (M2, T1), (M1, T2), (M2, T2), (M3, T2), (M4, T2), (M3, T3), (M4, T3),
    (B1, M1), (B2, M1), (B1, M2), (B3, M2), (B2, M3), (B4, M3), (B3, M4), (B4, M4),
]
poset = Poset.from_covers(11, COVERS, LABELS)

# Six targets: five on edges, one sitting exactly on node b3.
targets = TargetSet.of([
    TargetPosition.on_edge(M1, T1),
    TargetPosition.on_edge(M2, T2),
    TargetPosition.on_edge(M4, T3),
    TargetPosition.on_edge(B1, M1),
    TargetPosition.on_edge(B4, M4),
    TargetPosition.at_node(B3),
])
net = SensorNetwork(poset, targets)

print("sensor readings:")
for x in range(11):
    print(f"  {poset.label(x)}: {net.counting[x]}")

# The readings are monotone and non-negative, so they decompose into
# excursion sets {h >= i}; each level contributes its chi.
levels = []
for i in range(1, max(net.counting.values) + 1):
    members = [x for x in range(11) if net.counting[x] >= i]
    levels.append(poset.chi_of(members))
print("excursion-level characteristics:", levels)
print("sum:", sum(levels))

print("integral (Moebius route):   ", integrate(net.counting))
print("integral (excursion route): ", integrate_excursion(net.counting))
print("enumerate_targets:          ", enumerate_targets(net))
print("actual number of targets:   ", len(targets))

# The canonical prime-filter form behind the Moebius route; each term is
# a coefficient on the filter of everything above one base element.
form = mobius_coefficients(net.counting)
bases = []
for coeff, q in form.terms:
    base = next(m for m in q if all(poset.less_equal(m, y) for y in q))
    bases.append((coeff, poset.label(base)))
print("prime-filter form terms:", bases)
print("coefficient sum:", form.coefficient_sum())

# Moving a target without changing any reading: the m2->t2 edge target
# slides to m3->t2 (both edges are seen only from t2).
moved = TargetSet.of([
    TargetPosition.on_edge(M1, T1),
    TargetPosition.on_edge(M3, T2),
    TargetPosition.on_edge(M4, T3),
    TargetPosition.on_edge(B1, M1),
    TargetPosition.on_edge(B4, M4),
    TargetPosition.at_node(B3),
])
other = SensorNetwork(poset, moved)
print("same readings after moving a target:", other.counting == net.counting)
print("same count:", enumerate_targets(other))
