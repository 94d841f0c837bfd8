"""
Network lifetime, GA against LEACH
==================================

Both protocols drain the same field round by round. The GA re-clusters
the survivors every 20 rounds, LEACH elects heads by its rotating
threshold.
"""

from pathlib import Path

from wsnga import GAParams, LifetimeConfig, NetworkConfig, RadioModel, generate_deployment, lifetime_summary, run_lifetime
from wsnga.svg import line_chart

out = Path("out/gallery")
out.mkdir(parents=True, exist_ok=True)

# a smaller field and a lighter GA keep this script under a minute
dep = generate_deployment(NetworkConfig(node_count=60, field_width=100, field_height=100, seed=1))
radio = RadioModel()
ga = GAParams(population_size=40, generations=40)

alive = {}
for proto in ("ga", "leach"):
    run = run_lifetime(dep, radio, LifetimeConfig(total_rounds=1500, protocol=proto, ga=ga), seed=[1, 2])
    alive[proto] = ([r.round for r in run.records], [r.alive_count for r in run.records])
    print(proto, lifetime_summary(run.records, dep.node_count))

(out / "alive.svg").write_text(line_chart(alive, "Alive nodes", "round", "nodes"))
