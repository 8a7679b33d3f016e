"""Colorings of outerplanar graphs by reduction to smaller graphs and local extension."""
from .configurations import Configuration, ReductionStep, classify_c4, find_configuration, reduction_for
from .extend import extend_local
from .gadgets import (InspectionReport, T1_CONSTRAINTS, T1_INCIDENCES, T2_INCIDENCES, T2_VECTORS,
                      check_t1, reducibility_inspection, t2_coloring, t2_gadget, t2_table)
from .reduce import color_outerplanar, conditional_color, d2_color_subcubic

__all__ = [
    "Configuration", "ReductionStep", "classify_c4", "find_configuration", "reduction_for",
    "extend_local", "InspectionReport", "T1_CONSTRAINTS", "T1_INCIDENCES", "T2_INCIDENCES",
    "T2_VECTORS", "check_t1", "reducibility_inspection", "t2_coloring", "t2_gadget", "t2_table",
    "color_outerplanar", "conditional_color", "d2_color_subcubic",
]
