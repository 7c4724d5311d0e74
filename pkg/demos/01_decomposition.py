"""Build a partially coherent single-photon state and read the weight back.

An emission model is a set of source amplitudes plus one number p_id, the
probability that an emitted photon is indistinguishable across sources.
Mixing produces a density matrix whose off-diagonals carry p_id; the
pairwise estimator recovers it without being told.
"""

import numpy as np

from interfere import Amplitudes, EmissionModel, estimate_pid, mix

model = EmissionModel(Amplitudes([0.6, 0.8]), p_id=0.35)
rho = mix(model)

print("density matrix:")
print(np.array_str(np.asarray(rho), precision=4, suppress_small=True))
print()
print("populations:", rho.populations)

report = estimate_pid(rho)
print()
print("recovered p_id per pair:")
for pair in report.pairs:
    print(f"  ({pair.i}, {pair.j}) -> {pair.p_ij:.6f}  defined={pair.defined}")
print(f"consensus {report.consensus:.6f}, spread {report.spread:.2e}, "
      f"consistent={report.consistent}")

# a three-source state with a dead emitter: the dead pairs are flagged,
# not divided through
quiet = mix(EmissionModel(Amplitudes([0.8, 0.6, 0.0]), p_id=0.9))
quiet_report = estimate_pid(quiet)
print()
print("with a silent third source:")
for pair in quiet_report.pairs:
    value = "undefined" if not pair.defined else f"{pair.p_ij:.6f}"
    print(f"  ({pair.i}, {pair.j}) -> {value}")
print(f"degenerate={quiet_report.degenerate}, consensus {quiet_report.consensus:.6f}")
