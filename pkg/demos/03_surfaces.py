"""Estimating the dimension of a rough surface, with and without a spike.

The field has exponential covariance (alpha = 1, dimension 2.5). One cell is
then set to a huge value. The lattice estimators that pool all pairs move a
lot; the transect median barely notices because only one row and one column
are affected.
"""
import numpy as np

from fracdim import CovarianceModel, Grid, derive_seed, estimate, simulate_2d

field = simulate_2d(CovarianceModel("powered_exponential", 1.0), 64, 64, derive_seed(3))
spiked = np.array(field.values)
spiked[20, 40] = 1e6
spiked = Grid(spiked)

for m in ("isotropic:p=2", "filter:p=2", "squareincr:p=2", "transect", "transect:diff=2"):
    a, b = estimate(field, m), estimate(spiked, m)
    print(f"{m:>16}: clean {a.fd:.3f}   spiked {b.fd:.3f}")
