"""Tracking roughness along a profile whose character changes halfway.

The first half is a rough path (alpha = 0.6), the second a smoother one
(alpha = 1.6), joined end to end. Sliding blocks of 512 samples move in
steps of 64; the trace shows the estimate dropping as the window crosses
the seam at sample 2048.
"""
import numpy as np

from fracdim import CovarianceModel, derive_seed, simulate_1d, sliding_estimates

rough = simulate_1d(CovarianceModel(alpha=0.6), 2047, derive_seed(4, "rough")).values
smooth = simulate_1d(CovarianceModel(alpha=1.6), 2048, derive_seed(4, "smooth")).values
profile = np.concatenate([rough, smooth - smooth[0] + rough[-1]])

records = sliding_estimates(profile, width=512, step=64, methods=("madogram", "hallwood"))
for rec in records[::4]:
    mad, hw = rec.results["madogram"].fd, rec.results["hallwood"].fd
    bar = "#" * int(round((mad - 1) * 40))
    print(f"{rec.midpoint:5d}  madogram {mad:.3f}  hallwood {hw:.3f}  {bar}")
