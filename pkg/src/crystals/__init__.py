"""Exact-arithmetic crystal graphs for finite-type reductive Lie algebras.

Construction of the irreducible crystals through the piecewise-linear path
model, tensor products, string data along reduced words, the involution-based
commutor and its reformulation through the Verma-crystal involution, plus
exhaustive desk-scale verification suites behind a CLI.
"""
from .cartan import (
    CartanType,
    RootDatum,
    all_reduced_words,
    build_root_datum,
    canonical_word,
    longest_word,
    root_datum,
    theta,
    weyl_act,
    weyl_dim,
)
from .errors import BudgetError, CrystalError, InputError, StructureError
from .graph import (
    Component,
    CrystalGraph,
    components,
    highest_weight_vertices,
    lowest_weight_vertices,
    unique_iso,
    validate,
)
from .involutions import CactusReport, CommutorMap, check_cactus, commutor_hk, schutzenberger
from .paths import LSPath, generate_crystal, irreducible, root_e, root_f, straight_path
from .star import (
    BZDatum,
    EmbeddedElement,
    bz_from_string,
    commutor_star,
    element,
    embed,
    eps_embedded,
    star,
    star_bz,
    star_formula,
    tau,
)
from .stringdata import (
    StringData,
    downward_data,
    element_from_downward_data,
    upward_data,
)
from .tensor import hw_pairs, tensor
from .verify import SUITES, VerificationReport, run_suite

__all__ = [
    "BZDatum", "BudgetError", "CactusReport", "CartanType", "Component",
    "CommutorMap", "CrystalError", "CrystalGraph", "EmbeddedElement",
    "InputError", "LSPath", "RootDatum", "StringData", "StructureError",
    "SUITES", "VerificationReport",
    "all_reduced_words", "build_root_datum", "bz_from_string",
    "canonical_word", "check_cactus", "commutor_hk", "commutor_star",
    "components", "downward_data", "element", "element_from_downward_data",
    "embed", "eps_embedded", "generate_crystal", "highest_weight_vertices",
    "hw_pairs", "irreducible", "longest_word", "lowest_weight_vertices",
    "root_datum", "root_e", "root_f", "run_suite", "schutzenberger", "star",
    "star_bz", "star_formula", "straight_path", "tau", "tensor", "theta",
    "unique_iso", "upward_data", "validate", "weyl_act", "weyl_dim",
]

__version__ = "0.1.0"
