"""Periodic continued fractions of x+(p, q), the root of x^2 + p x = q, computed
two independent ways (reduced-surd recurrence and the river of the form
v^2 + p v u - q u^2), together with divisor-sum bounds and disc statistics."""

from .errors import (
    CycleOverflow,
    DegenerateForm,
    EmptyOmega,
    InputOutOfRange,
    InvalidDiscriminant,
    InvalidWeight,
    NotAnIrrational,
    NotNormalized,
    PeriodOverflow,
    PrePeriodFound,
    QuadCFError,
    ResourceLimit,
    SieveTooSmall,
)
from .surd import (
    CFPeriod,
    Kind,
    ProblemPoint,
    SurdState,
    cf_period,
    classify,
    discriminant,
    floor_surd,
    fractional_value,
    normalize,
    period_of_discriminant,
)
from .topograph import (
    Polyline,
    RiverCycle,
    RiverState,
    Side,
    count_river_triplets,
    cycle_to_period,
    form_value,
    initial_river_state,
    polyline,
    river_cycle,
    river_step,
)
from .divisors import DivisorSieve, big_d, build_sieve, f_of_discriminant, lemma3_bound
from .stats import (
    KuzminHistogram,
    SweepReport,
    a_prime,
    enumerate_omega,
    equidistribution_discrepancy,
    kuzmin_arnold,
    kuzmin_weighted,
    mean_a_hat,
    mean_period,
    mean_period_sqrt,
    star_discrepancy,
    sweep,
    theoretical_kuzmin,
)

__version__ = "0.1.0"
