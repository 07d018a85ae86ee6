"""Fractal dimension estimators for time series and lattice data."""
__version__ = "0.1.0"

from .core import Estimate, FitResult, Grid, LogLogPoint, Series, fit_line, loglog_fit
from .errors import *  # noqa: F401,F403
from .methods import MethodSpec, estimate, parse_method
from .variation import (hallwood_A, hallwood_estimate, madogram, power_variation,
                        power_variation_second_diff, rodogram, variation_estimate, variogram)
from .boxcount import box_counts, boxcount_estimate
from .spectral import (dct2_estimate, dct2_periodogram, modwt, semiperiodogram,
                       semiperiodogram_estimate, wavelet_estimate, wavelet_variances)
from .spatial import (TransectConfig, filter_estimate, filter_variation, isotropic_estimate,
                      isotropic_variation, relevant_distances, square_increment_estimate,
                      square_increment_variation, transect_estimate)
from .simulate import (ContaminationSpec, CovarianceModel, contaminate, covariance,
                       derive_seed, simulate_1d, simulate_2d, variogram2)
from .bootstrap import BootstrapResult, bootstrap_ci
from .windowing import WindowSpec, sliding_estimates
from .experiment import StudyConfig, StudyResult, run_study

