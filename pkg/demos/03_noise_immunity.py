"""Which sensors may lie without breaking the count?

A node x is a chi-point when everything strictly above it has Euler
characteristic 1.  Changing a reading at a chi-point provably cannot
move the integral, so those sensors are pure noise: they can fail, or
be omitted, with no effect on the enumeration.  Readings elsewhere are
essential, and corrupting them shifts the count.
"""

import random

from eulerscan import (
    NoiseSpec,
    Poset,
    SensorNetwork,
    TargetPosition,
    TargetSet,
    classify_points,
    corrupt,
    integrate,
    sensor_placement_plan,
)

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

flags = classify_points(poset)
print("beat points:          ", sorted(poset.label(x) for x in flags.beat_points()))
print("weak down-beat points:", sorted(poset.label(x) for x in flags.weak_down_beat))
print("chi-points:           ", sorted(poset.label(x) for x in flags.chi_point))
print()

# Hammer the chi-points with garbage; the integral never budges.
rng = random.Random(0)
results = set()
for _ in range(500):
    noise = NoiseSpec({B2: rng.randint(-100, 100), B3: rng.randint(-100, 100)})
    results.add(integrate(corrupt(net, noise)))
print("integrals under 500 random corruptions at {b2, b3}:", results)

# One broken essential sensor is a different story.
print("t2 misreports 4 as 3 ->", integrate(corrupt(net, NoiseSpec({T2: 3}))))
print()

# So trusted hardware is only needed on the placement plan.
plan = sensor_placement_plan(poset)
print("sensors that matter:", sorted(plan.labels()))
print("sensors that can be dropped:",
      sorted(poset.label(x) for x in range(11) if x not in plan))
