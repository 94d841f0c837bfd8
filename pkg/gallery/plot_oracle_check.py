"""
Checking the GA against exhaustive search
=========================================

Ten nodes give 1024 chromosomes, few enough to score them all.
"""

from wsnga import EQ3, GAParams, NetworkConfig, RadioModel, evolve, exhaustive_best, generate_deployment

dep = generate_deployment(NetworkConfig(node_count=10, seed=7))
radio = RadioModel()

best_bits, best = exhaustive_best(dep, radio, EQ3)
print("optimum", best_bits, f"F={best.F:.9g}")

params = GAParams(population_size=50, generations=300, fitness_kind=EQ3)
hits = sum(evolve(dep, radio, params, seed=[s, 1]).breakdown.F == best.F for s in range(20))
print(f"GA reached it in {hits}/20 runs")
