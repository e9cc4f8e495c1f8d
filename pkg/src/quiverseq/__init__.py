"""Exact-arithmetic toolkit for mutation-periodic quivers and the integer
sequences their exchange relations generate."""

from .errors import (
    ConsistencyError,
    ConstraintError,
    DomainError,
    NotPeriodOneError,
    NotPeriodicError,
    NotSinkTypeError,
    PeriodicityViolationError,
    ZeroTermError,
)
from .ice import (
    IceCheckResult,
    IceRowSpec,
    attach_rows,
    ice_period1_check,
    ice_rows_enumerate,
    parameterized_recurrence,
)
from .laurent import LaurentPolynomial
from .linearise import (
    CValues,
    LinearisationCertificate,
    PellWitness,
    a_b_sequences,
    first_integral_K,
    j_values,
    linear_relation_check,
    pell_solutions,
    primitive_run,
    s_coefficient,
    s_polynomial,
)
from .periodicity import (
    SinkTypeDecomposition,
    decompose_period1,
    detect_period,
    epsilon,
    fold_to_period1,
    has_period,
    layer_report,
    layers_to_matrix,
    mutation_chain,
    period1_from_weights,
    period2_four_node,
    period2_five_node,
    period2_sigma_family,
    pnn_exceptional_search,
    primitive,
    primitive_ids,
    sink_type_decompose,
)
from .quiver import ExchangeMatrix
from .recurrence import (
    LaurentCheckResult,
    Recurrence,
    RecurrencePair,
    SequenceRun,
    companion_pair,
    decoupling_check,
    gale_robinson_matrix,
    iterate,
    laurent_check,
    preset,
    preset_names,
    primitive_recurrence,
    recurrence_from_period1,
    recurrence_from_period2,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
