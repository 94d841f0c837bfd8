"""
Deploying a field and decoding one chromosome
=============================================

A chromosome is one bit per sensor. Set bits are cluster heads, every
other live node joins its nearest head.
"""

from pathlib import Path

import numpy as np

from wsnga import EQ2, EQ3, NetworkConfig, RadioModel, decode, fitness, generate_deployment
from wsnga.svg import cluster_map

out = Path("out/gallery")
out.mkdir(parents=True, exist_ok=True)

# 200 nodes on a 200 x 200 m field, sink at the origin
dep = generate_deployment(NetworkConfig(seed=3))
radio = RadioModel()
print(dep.node_count, "nodes, total sink distance", round(float(dep.sink_distances.sum()), 1), "m")

# a random chromosome with roughly one head in ten
rng = np.random.default_rng(0)
bits = rng.random(dep.node_count) < 0.1
assignment = decode(bits, dep)
print(assignment.head_count, "heads")

# both fitness forms score the same partition
for kind in (EQ2, EQ3):
    b = fitness(bits, dep, radio, kind)
    print(f"{kind}: F={b.F:.6g}  E={b.E:.4g} J  RCSD={b.RCSD:.1f} m  TCH={b.TCH}")

heads = np.zeros(dep.node_count, bool)
heads[list(assignment.head_ids)] = True
(out / "deployment.svg").write_text(cluster_map(dep, heads, links=True))
