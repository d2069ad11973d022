"""Homology-level invariants of Lefschetz fibrations built from Korkmaz's relators."""
from .atlas import CurveAtlas, korkmaz_curves, korkmaz_word, twisted_relator
from .fibration import (
    Fibration,
    FillingReport,
    PlumbingGraph,
    PreconditionError,
    RelatorReport,
    VanishingCycle,
    euler_characteristic,
    fiber_sum,
    fibration_from_word,
    filling_fibration,
    filling_report,
    h1,
    korkmaz_fibration,
    meyer_cocycle,
    plumbing_boundary_h1,
    signature,
    twisted_fibration,
    verify_relator,
)
from .homology import (
    HomologyClass,
    Letter,
    Surface,
    SurfaceMismatch,
    SymplecticMatrix,
    TwistWord,
    conjugate_word,
    intersection_pairing,
    is_symplectic,
    twist_matrix,
    word_matrix,
)
from .linalg import AbelianGroup, IntegerMatrix, RationalSymmetricForm, cokernel, form_signature, smith_normal_form

__version__ = "0.1.0"
