"""Single-photon pulses and Wigner spectra of cavities, DPAs and passive networks."""

from ._core import (
    DomainError,
    StabilityError,
    cavity_output_pulse,
    cavity_spectrum,
    cavity_spectrum_numeric,
    cavity_transfer,
    direct_coupling_pulse,
    direct_coupling_transfer,
    dpa_output_pulses,
    dpa_spectrum,
    dpa_spectrum_numeric,
    effective_decay_rate,
    exp_pulse,
    feedback_pulse,
    feedback_transfer,
    input_spectrum,
    list_scenarios,
    open_loop_pulse,
    run_scenario,
    stability_check,
    verify,
)

__all__ = [
    "DomainError",
    "StabilityError",
    "cavity_output_pulse",
    "cavity_spectrum",
    "cavity_spectrum_numeric",
    "cavity_transfer",
    "direct_coupling_pulse",
    "direct_coupling_transfer",
    "dpa_output_pulses",
    "dpa_spectrum",
    "dpa_spectrum_numeric",
    "effective_decay_rate",
    "exp_pulse",
    "feedback_pulse",
    "feedback_transfer",
    "input_spectrum",
    "list_scenarios",
    "open_loop_pulse",
    "run_scenario",
    "stability_check",
    "verify",
]
