"""The distribution toolbox underneath the secrecy metrics.

Shows the hypoexponential law of the MRC-combined eavesdropping SNR,
the order-statistic term tables behind the selection schemes, and the
special-function kernels (scaled exponential integral, partial
fractions) used by the closed forms.
"""

import math

import numpy as np

import txsecrecy as tx
from txsecrecy.channel import (
    HypoexpDist,
    hypoexp_weights,
    min_eave_sel_bka,
    min_hypoexp_terms,
)
from txsecrecy.combinatorics import (
    enumerate_compositions,
    integrate_partial_fractions_tail,
    multinomial,
    partial_fractions,
)
from txsecrecy.specfun import exp_scaled_ei

# K = 3 colluding eavesdroppers at 6, 9, 13 dB mean SNR
rates = tuple(tx.snr_db_to_rate(db) for db in (6.0, 9.0, 13.0))
dist = HypoexpDist(rates)
print(f"MRC eavesdropping SNR: mean {dist.mean:.3f} (= sum of link means)")
print(f"survival weights {np.round(hypoexp_weights(rates), 4)} (sum to 1)")

rng = np.random.default_rng(7)
draws = dist.rvs(100_000, rng)
print(f"empirical mean {draws.mean():.3f}, P[X > 20] = {(draws > 20).mean():.4f} "
      f"vs sf(20) = {dist.sf(20.0):.4f}\n")

# min over N transmitters: multinomial expansion of S(x)^N
coeffs, lams = min_hypoexp_terms(3, rates)
print(f"min over 3 draws expands into {len(coeffs)} exponential terms "
      f"({sum(1 for _ in enumerate_compositions(3, 3))} compositions of 3 into 3 parts)")
print(f"multinomial(3; 1,1,1) = {multinomial(3, (1, 1, 1))}")

# with backhaul knowledge the minimum runs over the active subset only
sc = tx.scenario_from_db(4, 3, 0.5, 20.0, [6.0, 9.0, 13.0])
mix = min_eave_sel_bka(sc)
print(f"BKA minimum: point mass {mix.point_mass_at_zero:.4f} at zero "
      f"(all four backhauls down)\n")

# closed-form ESR terms are differences of e^a Ei(-a); the fused kernel
# stays finite where exp(a) alone would overflow
for a in (1.0, 50.0, 2000.0):
    print(f"e^{a:g} Ei(-{a:g}) = {exp_scaled_ei(a):.6e}")

# high-SNR OTS tail integrals via exact partial fractions
pfe = partial_fractions(1.0, [(0.0, 1), (-2.0, 2)])
val = integrate_partial_fractions_tail(pfe, lower=1.0)
print(f"\nint_1^inf dx / (x (x+2)^2) = {val:.10f} "
      f"(analytic {0.25 * math.log(3.0) - 1.0 / 6.0:.10f})")
