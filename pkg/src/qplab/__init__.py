"""qplab: exact q-series arithmetic, two-color partition families, and a
machine-checked catalog of the identities connecting them."""

from .series import (
    Comparison,
    Series,
    SeriesError,
    coeff_at,
    equal_up_to,
    invert,
    linear_combine,
    mul,
    negate_variable,
    substitute_power,
)
from .qengine import (
    LENGTH_INF,
    LENGTH_N,
    LENGTH_N_PLUS_1,
    Parameter,
    PochFactor,
    QEngineError,
    TermTemplate,
    phi21,
    poch_finite,
    poch_infinite,
    rational_series,
    sum_over_smallest,
)
from .mocktheta import MockThetaForm, mock_theta, theta_squares
from .partitions import (
    FAMILIES,
    ColoredPart,
    FamilySpec,
    PartitionError,
    TwoColorPartition,
    brute_force_series,
    count_ady,
    count_family,
    count_overpartitions,
    enumerate_family,
    family_series,
    is_square,
    statistic_counts,
)
from .family_gf import FAMILY_NAMES, family_gf_series, family_template
from .registry import (
    CATALOG,
    IdentityCase,
    IdentityReport,
    NEGATIVE_CONTROL_ID,
    list_identities,
    verify,
    verify_all,
)

__version__ = "0.1.0"

__all__ = [
    "Comparison",
    "Series",
    "SeriesError",
    "coeff_at",
    "equal_up_to",
    "invert",
    "linear_combine",
    "mul",
    "negate_variable",
    "substitute_power",
    "LENGTH_INF",
    "LENGTH_N",
    "LENGTH_N_PLUS_1",
    "Parameter",
    "PochFactor",
    "QEngineError",
    "TermTemplate",
    "phi21",
    "poch_finite",
    "poch_infinite",
    "rational_series",
    "sum_over_smallest",
    "MockThetaForm",
    "mock_theta",
    "theta_squares",
    "FAMILIES",
    "ColoredPart",
    "FamilySpec",
    "PartitionError",
    "TwoColorPartition",
    "brute_force_series",
    "count_ady",
    "count_family",
    "count_overpartitions",
    "enumerate_family",
    "family_series",
    "is_square",
    "statistic_counts",
    "FAMILY_NAMES",
    "family_gf_series",
    "family_template",
    "CATALOG",
    "IdentityCase",
    "IdentityReport",
    "NEGATIVE_CONTROL_ID",
    "list_identities",
    "verify",
    "verify_all",
    "__version__",
]
