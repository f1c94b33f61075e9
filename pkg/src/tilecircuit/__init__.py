"""Exact rectangle-dissection solving and its resistor-network dual."""

from .algcheck import (
    Condition3Verdict,
    ConjugationReport,
    IntPoly,
    conjugate_lemma_check,
    lfs_condition3,
    minpoly_quadratic,
    parse_intpoly,
    positive_real_part_all_roots,
)
from .circuit import (
    Battery,
    CircuitError,
    FlowSolution,
    Netlist,
    Resistor,
    format_netlist,
    kirchhoff_system,
    parallel,
    parse_netlist,
    replace_resistor_with_network,
    resistance,
    series,
    solve_flow,
    symbolic_resistance,
)
from .correspondence import (
    CorrespondenceError,
    EquivalenceReport,
    LadderError,
    LadderSpec,
    certify_equivalence,
    cf_eval,
    circuit_of_dissection,
    infer_ratio,
    ladder_dissection,
    ladder_from_json,
    ladder_to_json,
    load_ladder,
    stretch,
    theorem1_certificate,
)
from .dissection import (
    CutStructure,
    DehnReport,
    Dissection,
    DissectionError,
    SizingError,
    SizingResult,
    Tile,
    ValidationReport,
    dehn_check,
    dissection_from_json,
    dissection_to_json,
    dump_dissection,
    extract_cuts,
    junction_system,
    load_dissection,
    render_svg,
    solve_sizes,
    validate_geometric,
)
from .fields import (
    FieldSpec,
    Poly,
    QuadExt,
    RatFunc,
    Rational,
    ScalarParseError,
    format_scalar,
    parse_quadext,
    parse_rational,
    poly_divmod,
    poly_eval,
    poly_gcd,
    quad_conjugate,
    squarefree_check,
)
from .linear import (
    AffineExpr,
    Inconsistent,
    LinearSystem,
    Parametric,
    SolveOutcome,
    Unique,
    gauss_jordan,
    substitute_and_verify,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
