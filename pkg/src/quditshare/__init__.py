"""Numerical toolkit for one-shot entanglement sharing over noisy qudit channels.

Library layers:

* :mod:`quditshare.states` -- bipartite state algebra (Schmidt, partial
  transpose/trace, fidelity).
* :mod:`quditshare.channels` -- Kraus channels, duals, Choi states, random
  channel generation, channel file IO.
* :mod:`quditshare.measures` -- negativity, fully entangled fraction, and the
  (1 + 2N)/d fidelity ceiling.
* :mod:`quditshare.damping` -- the level-damping channel family, its closed
  forms, and the advantage certificate.
* :mod:`quditshare.search` -- input-state optimization (exact best-fidelity
  input, negativity ascent, qubit exact formula).
* :mod:`quditshare.cli` -- the ``quditshare`` command-line front end.
"""

from .channels import (
    ChoiState,
    KrausChannel,
    TopChoiEigenpair,
    apply_one_sided,
    channel_from_dict,
    channel_to_dict,
    choi_state,
    completeness_residual,
    dual,
    haar_unitary,
    is_unital,
    kraus_validate,
    load_channel,
    random_channel,
    save_channel,
    top_choi_eigenpair,
)
from .damping import (
    AdvantageCertificate,
    DampingParams,
    advantage_certificate,
    certificate_to_dict,
    damping_channel,
    damping_gap,
    damping_lambda_max,
    damping_negativity,
    damping_pt_spectrum,
)
from .errors import (
    ChannelCompletenessError,
    DimensionError,
    InvalidOperatorError,
    ParameterError,
    ToolkitError,
)
from .measures import (
    FefResult,
    fef,
    fef_channel_output,
    fstar_upper_bound,
    negativity,
)
from .search import (
    SearchResult,
    best_phiplus_fidelity_input,
    maximize_negativity_input,
    qubit_optimal_fidelity,
)
from .states import (
    DensityOperator,
    PureBipartiteState,
    SchmidtDecomposition,
    fidelity_with,
    max_entangled,
    mes_from_unitary,
    partial_trace,
    partial_transpose,
    pure_density,
    random_pure_state,
    schmidt,
)

__version__ = "0.1.0"

__all__ = [
    "AdvantageCertificate",
    "ChannelCompletenessError",
    "ChoiState",
    "DampingParams",
    "DensityOperator",
    "DimensionError",
    "FefResult",
    "InvalidOperatorError",
    "KrausChannel",
    "ParameterError",
    "PureBipartiteState",
    "SchmidtDecomposition",
    "SearchResult",
    "ToolkitError",
    "TopChoiEigenpair",
    "advantage_certificate",
    "apply_one_sided",
    "best_phiplus_fidelity_input",
    "certificate_to_dict",
    "channel_from_dict",
    "channel_to_dict",
    "choi_state",
    "completeness_residual",
    "damping_channel",
    "damping_gap",
    "damping_lambda_max",
    "damping_negativity",
    "damping_pt_spectrum",
    "dual",
    "fef",
    "fef_channel_output",
    "fidelity_with",
    "fstar_upper_bound",
    "haar_unitary",
    "is_unital",
    "kraus_validate",
    "load_channel",
    "max_entangled",
    "maximize_negativity_input",
    "mes_from_unitary",
    "negativity",
    "partial_trace",
    "partial_transpose",
    "pure_density",
    "qubit_optimal_fidelity",
    "random_channel",
    "random_pure_state",
    "save_channel",
    "schmidt",
    "top_choi_eigenpair",
]
