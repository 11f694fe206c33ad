"""Exact multiplication probabilities of finite unital rings.

Construct a ring, ask for Prob_x = |{(a,b) : ab = x}| / |R|^2 by
enumeration or closed form, and machine-verify the formulas::

    >>> from ringprob import parse_ring_spec, prob_brute
    >>> ring = parse_ring_spec("Z6")
    >>> str(prob_brute(ring, 0))
    '5/12'
"""

from .closedform import (
    FormulaResult,
    MatrixClass,
    corollary_43_predicates,
    corollary_44_predicate,
    general_bounds,
    local_bounds,
    matrix_rank,
    prob_auto,
    prob_chain_formula,
    prob_formula,
    prob_j2zero_formula,
    prob_matrix_formula,
    prob_unit_formula,
    prob_zn,
    subspace_count,
)
from .corpus import default_corpus
from .errors import (
    BadDimensionOrder,
    DegreeOutOfRange,
    DivisionByZero,
    FormulaUnavailable,
    ImproperIdeal,
    MixedFields,
    MixedRings,
    NonPrime,
    NotAnIdeal,
    NotChain,
    NotJ2Zero,
    NotLocal,
    NTooSmall,
    ParseError,
    RingProbError,
    SizeCapExceeded,
    ValidationError,
)
from .finfield import (
    FieldDescriptor,
    FieldElement,
    field_add,
    field_enumerate,
    field_inv,
    field_make,
    field_mul,
    field_neg,
)
from .probability import (
    ProbFraction,
    SpectrumEntry,
    SpectrumReport,
    annsum_counts,
    delta,
    pair_counts,
    prob_annsum,
    prob_brute,
    spectrum,
)
from .rings import (
    DEFAULT_SIZE_CAP,
    Ring,
    RingElement,
    chain_ring,
    field_ring,
    galois_ring,
    matrix_ring,
    product,
    quotient_make,
    ring_add,
    ring_enumerate,
    ring_mul,
    ring_neg,
    ring_size,
    table_ring,
    table_ring_from_json,
    trivial_extension,
    zmod,
)
from .specparse import parse_element, parse_ring_spec, render_ring_spec
from .structure import (
    Ideal,
    StructureReport,
    classify_local,
    ideal_size_power_check,
    jacobson_radical,
    left_right_symmetry_check,
    principal_two_sided_ideal,
    radical_powers,
    right_annihilator,
    structure_report,
    unit_plus_radical_check,
    units,
    zero_divisors,
)
from .verify import SUITES, run_suites

__version__ = "0.1.0"
