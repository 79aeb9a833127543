"""Finite-ring workbench: validated operation-table rings, ideal lattices,
clean/weakly-clean/exchange analysis, localizations of the integers, and a
law harness that checks structural facts over a catalog of rings.
"""

from .core import (
    FiniteRing,
    RingValidationError,
    SizeCapError,
    TableFormatError,
    ValidationReport,
    Violation,
    validate_ring,
)
from .ideals import (
    IdealSet,
    all_ideals,
    corner_ideal,
    full_ideal,
    ideal_closure,
    ideal_from_members,
    ideal_intersection,
    ideal_inventory,
    ideal_sum,
    idealization_ideal,
    is_ideal,
    matrix_ideal,
    morita_ideal,
    principal_ideals,
    product_ideal,
    series_ideal,
    tri2_ideal,
    tri3_ideal,
    zero_ideal,
)
from .constructions import (
    Bimodule,
    BimoduleError,
    CornerRing,
    PairingMap,
    cofactor,
    corner_ring,
    det,
    direct_product,
    idealization,
    matrix_element,
    matrix_entries,
    matrix_ring,
    morita_zero,
    module_from_action,
    quotient,
    regular_bimodule,
    tri2,
    tri3,
    series_constant_term,
    truncated_power_series,
    zero_bimodule,
    zn,
    zn_bimodule,
)
from .localized import (
    DEFAULT_SEARCH_BOUND,
    AnalyticVerdict,
    LocalizedIdeal,
    LocalizedIntegers,
    SignClasses,
    SignClassSurvey,
    clean_flags,
    ideal_is_clean_analytic,
    ideal_is_uniquely_weakly_clean_analytic,
    ideal_is_weakly_clean_analytic,
    ideal_is_weakly_exchange_analytic,
    is_weakly_exchange_element_exact,
    product_weakly_clean,
    reproduce_examples,
    sign_class_survey,
    uniqueness_witness_search,
    witness_search,
)
from .analysis import (
    CleanClass,
    Decomposition,
    IdealVerdict,
    PeirceReport,
    clean_class,
    decompositions,
    ideal_is_clean,
    ideal_is_uniquely_weakly_clean,
    ideal_is_weakly_clean,
    ideal_is_weakly_exchange,
    is_clean_element,
    is_uniquely_weakly_clean_element,
    is_weakly_clean_element,
    is_weakly_exchange_element,
    lift_idempotent,
    peirce_analysis,
    ring_is_clean,
    ring_is_uniquely_weakly_clean,
    ring_is_weakly_clean,
)
from .catalog import (
    IDEAL_LAW_MAX_ORDER,
    CatalogEntry,
    build_catalog,
    catalog_entry,
)
from .laws import (
    LAW_IDS,
    LawReport,
    reports_to_json,
    run_catalog,
    run_law,
    run_ring,
    summarize,
)
from .dsl import (
    RingSpec,
    SpecArityError,
    SpecError,
    SpecLexicalError,
    SpecSizeError,
    SpecSyntaxError,
    build,
    parse,
    pretty,
    size_estimate,
)
from .schemas import COMMAND_SCHEMAS, LAW_REPORT, schema_for

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
