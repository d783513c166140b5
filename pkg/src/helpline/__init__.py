"""Torsion units of integral group rings: HeLP constraints, Brauer-line criterion, prime graph verdicts."""

from .cyclo import CyclotomicNumber, absolute_trace, galois_apply, is_p_rational, reduce_conductor, root_of_unity
from .fixtures import load_fixture, load_fixture_blocks
from .help_engine import (
    PASolutionSet,
    PASystem,
    admissible_classes,
    build_system,
    check_order,
    congruence_constraints,
    multiplicity_form,
    solve,
)
from .tables import CharacterTable, load_table, parse_table, prime_graph, spectrum, validate
from .tree_criterion import (
    BrauerLine,
    apply_criterion,
    check_hypotheses,
    line_inequality,
    load_blocks,
    nu_values,
    p_section_constancy,
    verify_line,
)
from .verdict import edge_verdict, pq_report

__version__ = "0.1.0"

__all__ = [
    "CyclotomicNumber", "absolute_trace", "galois_apply", "is_p_rational", "reduce_conductor", "root_of_unity",
    "load_fixture", "load_fixture_blocks",
    "PASolutionSet", "PASystem", "admissible_classes", "build_system", "check_order",
    "congruence_constraints", "multiplicity_form", "solve",
    "CharacterTable", "load_table", "parse_table", "prime_graph", "spectrum", "validate",
    "BrauerLine", "apply_criterion", "check_hypotheses", "line_inequality", "load_blocks",
    "nu_values", "p_section_constancy", "verify_line",
    "edge_verdict", "pq_report",
]
