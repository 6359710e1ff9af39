"""Claims catalogue, verification engine and reports."""

from .builtins import builtin, names
from .engine import (
    STRATEGIES,
    check_specialization,
    perturb,
    scan,
    verify,
    verify_parametric_a,
    with_modulus_power,
)
from .model import (
    CongruenceClaim,
    ExactIdentity,
    Hypothesis,
    Outcome,
    ParametricA,
    PhiPower,
    PrimePower,
    VerificationReport,
    reports_to_csv,
    reports_to_json,
)
