"""Exact reverse- and forward-derivative calculus for polynomial maps."""

from .combinators import (
    NotDLinearError,
    dagger,
    forward_derivative,
    forward_from_reverse,
    is_dlinear,
    is_klinear_in_block,
    partial_forward,
    partial_reverse,
    reverse_derivative,
    slice_compose,
    slice_reverse,
)
from .corpus import CorpusConfig
from .faa_di_bruno import FdbReport, FdbSummand, fdb_report, forward_fdb, reverse_fdb
from .laws import LawFailure, LawReport, SUITE_NAMES, run_suite, run_suites
from .maps import (
    ArityProfile,
    PolyMap,
    compose,
    embed_blocks,
    flatten,
    identity,
    pair,
    precompose_blocks,
    projection,
    reblock,
    select_blocks,
    zero_map,
)
from .partitions import SetPartition, enumerate_partitions, index_select
from .poly import Monomial, Polynomial
from .scalar import Scalar, as_scalar
from .syntax import ParseError, parse_map, parse_polynomial
from .towers import (
    HigherDerivative,
    LawCheck,
    check_dagger_bridge,
    check_stable_rule,
    check_stable_rule_in_context,
    forward_tower,
    higher_forward,
    higher_reverse,
    reverse_tower,
)

__version__ = "0.1.0"

__all__ = [
    "ArityProfile",
    "CorpusConfig",
    "FdbReport",
    "FdbSummand",
    "HigherDerivative",
    "LawCheck",
    "LawFailure",
    "LawReport",
    "Monomial",
    "NotDLinearError",
    "ParseError",
    "PolyMap",
    "Polynomial",
    "Scalar",
    "SetPartition",
    "SUITE_NAMES",
    "as_scalar",
    "check_dagger_bridge",
    "check_stable_rule",
    "check_stable_rule_in_context",
    "compose",
    "dagger",
    "embed_blocks",
    "enumerate_partitions",
    "fdb_report",
    "flatten",
    "forward_derivative",
    "forward_fdb",
    "forward_from_reverse",
    "forward_tower",
    "higher_forward",
    "higher_reverse",
    "identity",
    "index_select",
    "is_dlinear",
    "is_klinear_in_block",
    "pair",
    "parse_map",
    "parse_polynomial",
    "partial_forward",
    "partial_reverse",
    "precompose_blocks",
    "projection",
    "reblock",
    "reverse_derivative",
    "reverse_fdb",
    "reverse_tower",
    "run_suite",
    "run_suites",
    "select_blocks",
    "slice_compose",
    "slice_reverse",
    "zero_map",
]
