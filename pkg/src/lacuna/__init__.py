"""Exact verification of linear relations and lacunary recurrences among Eisenstein series."""
from .eisenstein import eisenstein_series, p_series
from .exact import (
    Rational,
    b_sum,
    bernoulli,
    binomial,
    hagen_rothe_check,
    romik_coefficient,
    sigma_power,
    zeta_ratio,
)
from .qseries import GradedQSeries, QSeries
from .relations import (
    RelationSpec,
    RelationVector,
    bernoulli_identity,
    corollary_vector,
    evaluate_relation,
    hst_relation_vector,
    lacunarity_search,
    verify_hst,
)

__version__ = "0.1.0"
