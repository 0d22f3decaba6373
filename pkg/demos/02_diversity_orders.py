"""Diversity orders under perfect backhaul.

With s = 1 the outage decays polynomially in the destination SNR; the
log-log slope is the diversity order.  MIN-ES selects on the
eavesdropper links only, so it cannot harvest destination diversity
(d = 1); TTS and OTS both reach the full order N.  The fitted slopes
below come from the exact SOP over a 50-70 dB window.
"""

import txsecrecy as tx
from txsecrecy import Knowledge, Scheme, SchemeSpec

EAVE_DB = [6.0, 9.0, 13.0]

print(f"{'scheme':>8} {'N':>3} {'analytic':>9} {'fitted':>9}")
for n in (2, 3, 5):
    sc = tx.scenario_from_db(n, 3, 1.0, 60.0, EAVE_DB, threshold_rate=1.0)
    for scheme in Scheme:
        fit = tx.diversity_order_fit(sc, SchemeSpec(scheme, Knowledge.BKU))
        print(f"{scheme.name:>8} {n:>3} {fit.analytic_order:>9} {fit.estimated_order:>9.3f}")

# with unreliable backhaul the SOP saturates and a slope fit would be
# meaningless, so the library refuses it
sc = tx.scenario_from_db(3, 3, 0.9, 60.0, EAVE_DB, threshold_rate=1.0)
try:
    tx.diversity_order_fit(sc, SchemeSpec(Scheme.TTS, Knowledge.BKU))
except tx.InvalidRegimeError as exc:
    print(f"\ns=0.9 rejected as expected: {exc}")
