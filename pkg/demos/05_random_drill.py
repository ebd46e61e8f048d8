"""A seeded batch drill over random layered networks.

Generates hundreds of acyclic networks, checks that the integral hits
the true target count every single time (full and reduced routes), and
corrupts the removable nodes to show the count surviving the abuse.
"""

import random
import time

from eulerscan import (
    NoiseSpec,
    chi_minimal_model,
    corrupt,
    enumerate_reduced,
    enumerate_targets,
    integrate,
    random_network,
)

TRIALS = 300
rng = random.Random(2024)
start = time.monotonic()

exact = 0
reduced_exact = 0
immune = 0
corruptible_nodes = 0
total_nodes = 0

for trial in range(TRIALS):
    depth = rng.randint(2, 5)
    sizes = [rng.randint(1, 8) for _ in range(depth)]
    count = rng.randint(0, 30)
    net = random_network(sizes, rng.uniform(0.2, 0.9), count, seed=trial)
    total_nodes += net.poset.n

    if enumerate_targets(net) == count:
        exact += 1
    if enumerate_reduced(net).count == count:
        reduced_exact += 1

    # corrupt every node the chi-minimal reduction discards
    removable = chi_minimal_model(net.poset).removed_ids()
    corruptible_nodes += len(removable)
    if removable:
        noise = NoiseSpec.random(removable, seed=trial)
        if integrate(corrupt(net, noise)) == count:
            immune += 1
    else:
        immune += 1

elapsed = time.monotonic() - start
print(f"{TRIALS} networks, {total_nodes} nodes total, {elapsed:.2f}s")
print(f"exact full-route counts:    {exact}/{TRIALS}")
print(f"exact reduced-route counts: {reduced_exact}/{TRIALS}")
print(f"counts surviving corruption of every removable node: {immune}/{TRIALS}")
print(f"average removable (sensor-free) nodes per network: "
      f"{corruptible_nodes / TRIALS:.1f}")
