"""Heating rates of harmonically trapped particles near thermal surfaces.

Thin re-export of the compiled extension. The main entry points are the
closed-form and pipeline rate functions (ion_rate_closed, ion_rate_pipeline,
zeeman_rate_closed, zeeman_rate_pipeline, rayleigh_heating_rate), the
fluctuation spectra (electric_field_spectrum, magnetic_field_correlation,
magnetic_force_kernel_zz), compute_all, and the scenario runners
(run_preset, run_scenario_text).
"""

from ._proxheat import *  # noqa: F401,F403
from ._proxheat import __doc__  # noqa: F401

__version__ = "0.1.0"
