"""seqlab: sequency-band energy analysis on a simulated quantum register.

Classical Walsh analysis, a sequency-ordered transform circuit, a
reversible band oracle, and amplitude estimation, wrapped in an HTTP
service and a thin-client CLI.
"""

__version__ = "0.1.0"

from .band_oracle import (
    build_band_oracle,
    comparator_ge,
    comparator_lt,
    flag_probability,
)
from .circuits import (
    Circuit,
    GateKind,
    GateOp,
    RegisterLayout,
    adjoint,
    gate_census,
    to_text,
    unitary_matrix,
)
from .errors import SeqlabError
from .estimation import (
    EstimationConfig,
    EstimationResult,
    estimate,
    grover_operator,
    marked_state,
    marking_circuit,
)
from .pipeline import (
    BandEnergyReport,
    CoherentOutput,
    RunConfig,
    band_energy_report,
    ingest_signal,
    reproduce,
    run_algorithm1,
    scenario_signal,
    table1_csv,
    table1_rows,
    transform_signal,
)
from .qwht import apply_qwht, build_qwht
from .statevector import (
    StateVector,
    apply_circuit,
    apply_gate,
    init_from_signal,
    probability_of,
    sample_measurement,
)
from .walsh import (
    SequencyBand,
    WalshSpectrum,
    band_energy_classical,
    fwht_natural,
    fwht_sequency,
    sequency_to_natural,
    walsh_function,
)
from .zero_crossing import (
    BitString,
    sequence_of,
    zero_crossings_direct,
    zero_crossings_gray,
    zero_crossings_recursive,
)

__all__ = [
    "__version__",
    "SeqlabError",
    "StateVector",
    "apply_gate",
    "apply_circuit",
    "init_from_signal",
    "probability_of",
    "sample_measurement",
    "Circuit",
    "GateKind",
    "GateOp",
    "RegisterLayout",
    "adjoint",
    "gate_census",
    "to_text",
    "unitary_matrix",
    "WalshSpectrum",
    "SequencyBand",
    "walsh_function",
    "fwht_natural",
    "fwht_sequency",
    "sequency_to_natural",
    "band_energy_classical",
    "BitString",
    "sequence_of",
    "zero_crossings_direct",
    "zero_crossings_gray",
    "zero_crossings_recursive",
    "build_qwht",
    "apply_qwht",
    "comparator_ge",
    "comparator_lt",
    "build_band_oracle",
    "flag_probability",
    "EstimationConfig",
    "EstimationResult",
    "estimate",
    "grover_operator",
    "marked_state",
    "marking_circuit",
    "RunConfig",
    "BandEnergyReport",
    "CoherentOutput",
    "run_algorithm1",
    "band_energy_report",
    "reproduce",
    "scenario_signal",
    "table1_rows",
    "table1_csv",
    "transform_signal",
    "ingest_signal",
]
