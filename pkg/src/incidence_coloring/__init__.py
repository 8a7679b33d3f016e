"""Optimal d-defective incidence colorings, their verification, and supporting tools."""
from .colorers import (color_complete, color_complete_bipartite, color_cycle, color_path,
                       color_paths_and_cycles, color_tree)
from .coloring import (DefectiveColoringResult, IncidenceColoring, coloring_from_doc,
                       coloring_to_doc)
from .dispatch import color
from .errors import (BudgetExceeded, ColoringMismatchError, ExtensionError, GraphFormatError,
                     IncidenceColoringError, LatinSquareError, UnsupportedGraphError,
                     VerificationFailure)
from .graph import Graph, GraphClass, classify, dump_graph, generate, load_graph, to_dot
from .latin import (base8, circulant, find_intercalates, has_principal_intercalate, is_latin,
                    latin_square_no_principal, nabla, nabla_power)
from .oracle import (exact_defective_chromatic, find_coloring_exhaustive, incidence_defectivity,
                     snark_check)
from .outerplanar import (check_t1, color_outerplanar, conditional_color, d2_color_subcubic,
                          find_configuration, reducibility_inspection, t2_table)
from .verify import VerificationReport, Violation, check_conditional, check_defective, defect_of

__all__ = [
    "BudgetExceeded", "ColoringMismatchError", "DefectiveColoringResult", "ExtensionError",
    "Graph", "GraphClass", "GraphFormatError", "IncidenceColoring", "IncidenceColoringError",
    "LatinSquareError", "UnsupportedGraphError", "VerificationFailure", "VerificationReport",
    "Violation", "base8", "check_conditional", "check_defective", "check_t1", "circulant",
    "classify", "color", "color_complete", "color_complete_bipartite", "color_cycle",
    "color_outerplanar", "color_path", "color_paths_and_cycles", "color_tree", "coloring_from_doc",
    "coloring_to_doc", "conditional_color", "d2_color_subcubic", "defect_of", "dump_graph",
    "exact_defective_chromatic", "find_coloring_exhaustive", "find_configuration",
    "find_intercalates", "generate", "has_principal_intercalate", "incidence_defectivity",
    "is_latin", "latin_square_no_principal", "load_graph", "nabla", "nabla_power",
    "reducibility_inspection", "snark_check", "t2_table", "to_dot",
]
