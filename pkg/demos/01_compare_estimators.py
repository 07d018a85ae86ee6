"""Compare the 1-d estimators on simulated paths of known roughness.

A powered exponential process with fractal index alpha has dimension
2 - alpha/2. We simulate a handful of paths for three values of alpha and
print the average estimate of each method next to the truth. The variation
family should sit close to the truth; the box counter tends to come in low.
"""
import numpy as np

from fracdim import CovarianceModel, derive_seed, estimate, simulate_1d

METHODS = ["madogram", "variogram", "rodogram", "hallwood", "boxcount", "periodogram",
           "dct2", "wavelet"]
N, REPS = 1024, 40

print(f"{'alpha':>5} {'truth':>6} " + " ".join(f"{m:>11}" for m in METHODS))
for alpha in (0.5, 1.0, 1.5):
    model = CovarianceModel("powered_exponential", alpha)
    fds = np.array([[estimate(simulate_1d(model, N, derive_seed(1, alpha, r)), m).fd
                     for m in METHODS] for r in range(REPS)])
    row = " ".join(f"{v:11.3f}" for v in fds.mean(axis=0))
    print(f"{alpha:5.1f} {2 - alpha / 2:6.3f} {row}")
