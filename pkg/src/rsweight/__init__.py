"""Exact distance distributions of Reed-Solomon codes from a received word."""

from ._backend import BACKEND
from .combinatorics import QuadExtValue, A_m
from .counting import (
    CountQuery,
    EstimateResult,
    select_engine,
    series_N,
    theorem1_M,
    theorem1_N,
    theorem2_N,
    theorem3_N,
    theorem4_N,
    theorem5_estimate,
)
from .errors import BudgetExceeded, PreconditionError
from .field import DomainSet, FieldSpec, build_domain, build_field
from .moments import MomentReport, expected_distance, variance_distance
from .oracle import distance_distribution, oracle_N, oracle_M
from .polynomials import EquivClass, MonicPoly

__version__ = "0.1.0"
