"""Finite Gray-categories, their transfors, and the closed structure on them."""

from .core import (
    CellId,
    CellLookupError,
    GrayCategory,
    Hom2Cat,
    copy_category,
    hom2cat,
    terminal_gray_category,
    validate_gray_category,
    validate_two_category,
)
from .pasting import PastingError, evaluate_pasting, static_boundary
from .report import ValidationReport, Violation

__all__ = [
    "CellId", "CellLookupError", "GrayCategory", "Hom2Cat", "copy_category",
    "hom2cat", "terminal_gray_category", "validate_gray_category",
    "validate_two_category", "PastingError", "evaluate_pasting", "static_boundary",
    "ValidationReport", "Violation",
]
