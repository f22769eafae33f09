"""Series solver for singular boundary value problems on (0, 1].

Solves u'' + (alpha/x) u' = f(u) with u'(0) = 0 and a Robin condition at
x = 1 by a truncated power series whose coefficients are generated through
the Adomian polynomials of f, plus a scan-and-chain root search for the
unknown origin value u(0).
"""

from importlib.metadata import PackageNotFoundError, version

from ._backend import backend_name
from .adomian import AdomianSequence, adomian_duan, adomian_oracle, duan_ctable
from .diagnostics import (
    EXACT_KINDS,
    ErrorBound,
    ErrorTable,
    ExactSolution,
    ResidualTable,
    abs_error,
    closed_grid,
    error_bound,
    exact_solution,
    half_open_grid,
    residual,
)
from .errors import (
    BlowupError,
    BoundUnavailableError,
    ConfigError,
    DomainError,
    RangeError,
    SingularityError,
    UsageError,
)
from .nonlinearity import FAMILIES, Nonlinearity
from .powerseries import TruncatedSeries
from .solver import (
    CONVERGENCE_TOL,
    DEFAULT_SCAN,
    RootReport,
    SbvpProblem,
    SeriesSolution,
    SolutionReport,
    boundary_residual,
    build_series,
    default_ladder,
    find_roots,
    select_root,
    solve,
)

try:
    __version__ = version("sbvp")
except PackageNotFoundError:
    __version__ = "0.0.0"

__all__ = [
    "AdomianSequence",
    "BlowupError",
    "BoundUnavailableError",
    "CONVERGENCE_TOL",
    "ConfigError",
    "DEFAULT_SCAN",
    "DomainError",
    "EXACT_KINDS",
    "ErrorBound",
    "ErrorTable",
    "ExactSolution",
    "FAMILIES",
    "Nonlinearity",
    "RangeError",
    "ResidualTable",
    "RootReport",
    "SbvpProblem",
    "SeriesSolution",
    "SingularityError",
    "SolutionReport",
    "TruncatedSeries",
    "UsageError",
    "abs_error",
    "adomian_duan",
    "adomian_oracle",
    "backend_name",
    "boundary_residual",
    "build_series",
    "closed_grid",
    "default_ladder",
    "duan_ctable",
    "error_bound",
    "exact_solution",
    "find_roots",
    "half_open_grid",
    "residual",
    "select_root",
    "solve",
]
