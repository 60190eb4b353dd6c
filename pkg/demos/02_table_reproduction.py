"""
Entanglement metrics across the reference gamma set
===================================================

Runs the three observer-motion models over the standard Lorentz factors
and prints entropy, purity, mutual information, negativity, and the
effective Schmidt dimensionality for each point.  At rest every model
gives the maximally entangled 41-mode state; the two non-zero models
collapse differently as gamma grows.
"""

from relboost import BoostModel, SweepRequest, run_sweep
from relboost.reference import GAMMA_SET

request = SweepRequest(
    models=tuple(BoostModel),
    gamma_grid=GAMMA_SET,
    lmax=20,
)
result = run_sweep(request)

header = f"{'model':>14} {'gamma':>8} {'S':>8} {'P':>8} {'MI':>8} {'N':>8} {'D_eff':>8}"
print(header)
print("-" * len(header))
for point in result.points:
    m = point.metrics
    print(
        f"{point.model.value:>14} {point.gamma:8g}"
        f" {m.entropy_bits:8.4f} {m.purity:8.4f}"
        f" {m.mutual_info_bits:8.4f} {m.negativity:8.4f} {m.d_eff:8.4f}"
    )

# the zero and first non-zero models keep about one bit of entropy even at
# gamma = 10^4, while the second non-zero model is driven to a near-product
# state: purity -> 1, negativity -> 0
