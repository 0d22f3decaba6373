"""Ergodic secrecy rate: closed forms, quadrature, and asymptotic lines.

The ESR integrates the survival of the post-selection SNR ratio against
1/x.  MIN-ES and TTS have exponential-integral closed forms; OTS is
integrated numerically.  At high SNR every scheme climbs a straight
line in ln(1/lambda_D) whose slope depends only on the backhaul
reliability (and N in the BKA case) -- not on the eavesdroppers.
"""

import math

import txsecrecy as tx
from txsecrecy import ALL_SPECS, Knowledge, Scheme, SchemeSpec

N, K, S = 5, 3, 0.9
EAVE_DB = [6.0, 9.0, 13.0]

sc = tx.scenario_from_db(N, K, S, 20.0, EAVE_DB)
print(f"N={N}, K={K}, s={S}, destination SNR 20 dB\n")
for spec in ALL_SPECS:
    rep = tx.secrecy_report(sc, spec)
    q = tx.esr_quadrature(sc, spec)
    print(f"{spec.label:<12} esr={rep.esr:.6f} bits ({rep.esr_method.value}), "
          f"quadrature cross-check {q:.6f}")

print("\nhigh-SNR lines, slope * (ln(1/lambda_D) - offset):")
for spec in (SchemeSpec(Scheme.TTS, Knowledge.BKU), SchemeSpec(Scheme.TTS, Knowledge.BKA)):
    line = tx.esr_asymptote(sc, spec)
    print(f"{spec.label:<12} slope={line.slope:.5f}  offset={line.offset:.4f} nats "
          f"({line.offset_db:.2f} dB)")
    expected = S / math.log(2) if spec.knowledge is Knowledge.BKU else (1 - (1 - S) ** N) / math.log(2)
    assert abs(line.slope - expected) < 1e-12

print("\nline vs exact at 60 dB (TTS-BKU and OTS, any K via esr_high_snr_ots):")
hi = sc.with_dest_snr_db(60.0)
spec = SchemeSpec(Scheme.TTS, Knowledge.BKU)
print(f"{spec.label:<12} line={tx.esr_asymptote(hi, spec).at_dest_rate(hi.dest_rate):.5f} "
      f"exact={tx.esr_closed_form(hi, spec):.5f}")
spec = SchemeSpec(Scheme.OTS, Knowledge.BKU)
print(f"{spec.label:<12} line={tx.esr_high_snr_ots(hi, spec):.5f} "
      f"exact={tx.esr_quadrature(hi, spec):.5f}")
