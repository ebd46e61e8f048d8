"""Shrinking a poset without changing what it computes.

Beat points can be removed one by one without changing the homotopy
type; the leftover is the core, unique up to isomorphism.  chi-points
are a strictly weaker kind of removable point: deleting one keeps every
integral intact even when it changes the homotopy type.  Iterating
gives a chi-minimal model, the skeleton a sensor network really needs.
"""

from eulerscan import (
    Poset,
    PosetFunction,
    SensorNetwork,
    TargetPosition,
    TargetSet,
    chi_minimal_model,
    classify_points,
    core,
    enumerate_reduced,
    integrate,
    is_contractible,
)

# A chain collapses to a point: every interior element is a beat point.
chain = Poset.from_covers(5, [(i, i + 1) for i in range(4)])
report = core(chain)
print("core of a 5-chain:", report.result.n, "element;",
      "removed", [x for x, _ in report.removal_sequence])
print("5-chain contractible:", is_contractible(chain))
print()

# chi 1 does not mean contractible: two bottoms under two tops form a
# circle (chi 0); add an isolated point (chi 1 total) and cone a new
# minimum x under everything.  x is a chi-point, yet nothing above it
# can be contracted.
hat = Poset.from_covers(
    6,
    [(2, 0), (3, 0), (2, 1), (3, 1), (5, 2), (5, 3), (5, 4)],
    ["a", "b", "c", "d", "e", "x"],
)
flags = classify_points(hat)
print("hat poset beat points:", sorted(hat.label(x) for x in flags.beat_points()))
print("x is a chi-point:", 5 in flags.chi_point,
      "| x is a weak down-beat point:", 5 in flags.weak_down_beat)
model = chi_minimal_model(hat)
print("chi-minimal model keeps:", [hat.label(x) for x in model.mapping])
print()

# On the 11-node demo network the model drops b2 and b3; after also
# dropping zero readings, six nodes carry the whole computation.
LABELS = ["t1", "t2", "t3", "m1", "m2", "m3", "m4", "b1", "b2", "b3", "b4"]
T1, T2, T3, M1, M2, M3, M4, B1, B2, B3, B4 = range(11)
COVERS = [
    (M1, T1), (M2, T1), (M1, T2), (M2, T2), (M3, T2), (M4, T2), (M3, T3), (M4, T3),
    (B1, M1), (B2, M1), (B1, M2), (B3, M2), (B2, M3), (B4, M3), (B3, M4), (B4, M4),
]
poset = Poset.from_covers(11, COVERS, LABELS)
net = SensorNetwork(poset, TargetSet.of([
    TargetPosition.on_edge(M1, T1),
    TargetPosition.on_edge(M2, T2),
    TargetPosition.on_edge(M4, T3),
    TargetPosition.on_edge(B1, M1),
    TargetPosition.on_edge(B4, M4),
    TargetPosition.at_node(B3),
]))
print("full network: ", poset.n, "nodes, integral", integrate(net.counting))
model = chi_minimal_model(poset)
print("model removes:", [(poset.label(x), why) for x, why in model.removal_sequence])
reduced = enumerate_reduced(net)
print("reduced support:", sorted(poset.label(x) for x in reduced.support_ids))
sub_values = [net.counting[x] for x in sorted(reduced.support_ids)]
print("restricted readings:", sub_values)
print("count from the reduced network:", reduced.count)

# Core and model both preserve chi along the way.
h = PosetFunction(poset, [1] * 11)
print("chi before:", integrate(h), "| chi after:",
      reduced.model.result.euler_characteristic())
