"""Pattern-rich permutations: construction, ample subsets, exact pattern censuses and bounds."""

from .ample import ample_count, count_no_zero_lines, is_ample
from .bounds import constructive_lower, correction_term, eq1_upper, paper_bounds
from .construction import GridPoint, GridSpec, construct, grid_for, point_meta
from .enumeration import PatternCensus, distinct_patterns, distribution, h_exact
from .errors import PatternumError, ReconstructionError
from .perm import (
    Permutation,
    descents,
    inverse,
    pattern_key,
    pattern_of,
    subsequence_pattern,
    symmetry_class,
)
from .reconstruct import reconstruct

__version__ = "0.1.0"
