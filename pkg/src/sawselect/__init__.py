"""Fuzzy-scale scoring and simple-additive-weighting applicant selection."""

from .applicants import (
    ApplicantRecord,
    MalformedCsv,
    MissingColumn,
    RowError,
    ingest_applicants_csv,
    parse_rupiah,
)
from .criteria import (
    CriteriaConfigError,
    criteria_to_doc,
    load_criteria,
    load_default_criteria,
    parse_criteria,
    validate_criteria,
    weights_of,
)
from .fuzzy import (
    CRISP_VALUES,
    ConversionTable,
    CriterionSpec,
    FuzzyLevel,
    Interval,
    OutOfDomain,
    TableIssue,
    fuzzify,
    validate_table,
)
from .pipeline import NoEligibleApplicants, execute_selection, pool_from_records
from .saw import (
    SCORE_TIE_TOLERANCE,
    WEIGHT_SUM_TOLERANCE,
    DecisionMatrix,
    DegenerateColumn,
    DimensionMismatch,
    NormalizedMatrix,
    RankedAlternative,
    Ranking,
    build_matrix,
    normalize,
    rank,
    select,
    validate_weights,
    weighted_sum,
)
from .store import (
    AmbiguousPeriod,
    DuplicateApplicant,
    IneligibleRow,
    InvalidTransition,
    NoRunYet,
    PeriodExists,
    PeriodNotOpen,
    PoolApplicant,
    RecipientRow,
    SelectionPeriod,
    SelectionRun,
    SelectionStore,
    StorageCorrupt,
    StoreError,
    UnknownPeriod,
    UnknownRun,
    run_from_dict,
    run_to_dict,
)

__version__ = "0.1.0"

__all__ = [
    "ApplicantRecord",
    "AmbiguousPeriod",
    "CRISP_VALUES",
    "ConversionTable",
    "CriteriaConfigError",
    "CriterionSpec",
    "DecisionMatrix",
    "DegenerateColumn",
    "DimensionMismatch",
    "DuplicateApplicant",
    "FuzzyLevel",
    "IneligibleRow",
    "Interval",
    "InvalidTransition",
    "MalformedCsv",
    "MissingColumn",
    "NoEligibleApplicants",
    "NoRunYet",
    "NormalizedMatrix",
    "OutOfDomain",
    "PeriodExists",
    "PeriodNotOpen",
    "PoolApplicant",
    "RankedAlternative",
    "Ranking",
    "RecipientRow",
    "RowError",
    "SCORE_TIE_TOLERANCE",
    "SelectionPeriod",
    "SelectionRun",
    "SelectionStore",
    "StorageCorrupt",
    "StoreError",
    "TableIssue",
    "UnknownPeriod",
    "UnknownRun",
    "WEIGHT_SUM_TOLERANCE",
    "build_matrix",
    "criteria_to_doc",
    "execute_selection",
    "fuzzify",
    "ingest_applicants_csv",
    "load_criteria",
    "load_default_criteria",
    "normalize",
    "parse_criteria",
    "parse_rupiah",
    "pool_from_records",
    "rank",
    "run_from_dict",
    "run_to_dict",
    "select",
    "validate_criteria",
    "validate_table",
    "validate_weights",
    "weighted_sum",
    "weights_of",
]
