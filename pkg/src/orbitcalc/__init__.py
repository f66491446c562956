"""Partition calculus for nilpotent orbits of quasisplit classical groups."""

from .arthur import (
    ArthurParameter,
    SimpleFactor,
    Symmetry,
    case_I_eta,
    case_III_eta,
    check_bound,
    fourier_bound,
    is_generic,
    nonsingular_bound,
    nonsingular_partition,
    partition_of,
    simple_type_eta,
    validate_parameter,
)
from .collapse import (
    OracleReport,
    brute_extremum,
    ls_dual,
    maximal_specials_below,
    metaplectic_expansion,
    parity_collapse,
    run_oracle_suite,
    special_collapse,
    special_expansion,
)
from .duality import bv_dual
from .errors import CalcError, CapError, InvariantError, ParameterError, ParityError, SizeError
from .groups import (
    GroupType,
    Kind,
    Mp,
    SO_even,
    SO_odd,
    Sp,
    TypeA,
    is_metaplectic_special,
    is_special,
    is_valid,
    parse_group,
    principal_partition,
)
from .partition import (
    Ordering,
    Partition,
    add_rowwise,
    decrement_smallest,
    dominance_leq,
    enumerate_partitions,
    increment_largest,
    lex_cmp,
    make_partition,
    parse_partition,
    transpose,
)

__version__ = "0.1.0"
