"""Zero-secrecy-capacity probabilities for multi-antenna wiretap links."""

from secmimo._secmimo import (  # noqa: F401
    AsymptoticBoundPair,
    EstimateWithCI,
    MomentPair,
    SchemeKind,
    SystemConfig,
    __version__,
    db_to_linear,
    estimate,
    estimate_partitioned,
    linear_to_db,
    make_iid_config,
    max_exp_cdf,
    max_exp_pdf,
    oas_bounds_asymptotic,
    p_zero_oas,
    p_zero_sas,
    p_zero_stt,
    sas_bounds_asymptotic,
    stt_bounds_asymptotic,
    theorem1_moments,
)
