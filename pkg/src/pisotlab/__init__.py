"""Exact experiments on Pisot numbers, spectra and self-similar sets with overlaps."""

__version__ = "0.1.0"

from .algebraic import (
    AlgebraicReal,
    FieldElement,
    compare,
    element_arith,
    exact_sorted,
    parse_element,
    refine,
    sign_of,
)
from .classify import (
    DensityVerdict,
    NumberClass,
    RootCircleCounts,
    Tag,
    classify_number,
    density_verdict,
    is_algebraic_integer,
    is_perron,
    unit_circle_root_counts,
)
from .errors import *  # noqa: F401,F403
from .ifs import (
    HomogeneousIFS,
    NeighborGraph,
    brute_force_differences,
    build_neighbor_graph,
    completion_depth,
    covering_check,
    ifs_from_q_m,
    level_points,
    overlap_multiplicity,
    transition,
    wsc_constant,
)
from .polynomial import IntPolynomial, RationalInterval, isolate_real_roots, parse_polynomial
from .spectrum import (
    DigitSet,
    GapStats,
    MinValue,
    PowerNorm,
    SpectrumSlice,
    enumerate_spectrum,
    evaluate_digits,
    gap_stats,
    min_nonzero_exhaustive,
    min_nonzero_value,
    power_norms,
    spectrum_csv,
)
