"""Exact counting of rectangular-board tilings by straight 1xk tiles."""
from .grid import (
    BoardSpec,
    CoverageError,
    Orientation,
    OutOfBoundsError,
    OverlapError,
    Placement,
    TatamiViolation,
    Tiling,
    TilingError,
    is_tatami,
    render_ascii,
    validate_tiling,
)
from .oracle import (
    BudgetExceeded,
    EnumerationConfig,
    StateSpaceTooLarge,
    count_exhaustive,
    count_profile_dp,
    enumerate_tilings,
)
from .recurrences import (
    Family,
    FamilySpec,
    IndexBeforeStart,
    LinearRecurrence,
    companion_matrix_term,
    count_family,
    count_kplus1_family,
    count_square_tile_family,
    eval_linear_recurrence,
    full_history_count,
    sequence,
    stars_and_bars,
)

__version__ = "0.1.0"
