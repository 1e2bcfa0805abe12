"""Exact verification of Fibonacci/Lucas binomial-sum identities."""
from .catalog import (
    Constraint,
    Family,
    IdentityDescriptor,
    ParamSpace,
    ParamTuple,
    Side,
    enumerate_catalog,
    eval_side,
    get_identity,
)
from .exact import BigRational, QSqrt5, q5_alpha, q5_beta, q5_pow
from .kernels import BACKEND as KERNEL_BACKEND
from .poly import Dattoli, Poly, check_dattoli
from .sequences import (
    binomial,
    check_binet,
    check_lemma1,
    check_lemma2,
    fib,
    fib_oracle,
    lucas,
    lucas_oracle,
)
from .verifier import GridSpec, IntRange, RandomSpec, VerificationReport, verify_all, verify_grid, verify_random

__version__ = "0.1.0"
