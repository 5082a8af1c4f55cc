"""Additive quaternary codes and their line-family geometry."""

from adq._core import (
    AdditiveCode,
    BinaryLinearCode,
    CodeObject,
    CompletionReport,
    CoverageReport,
    F4CompletionReport,
    LimitError,
    ObjectFamily,
    ParseError,
    WeightDistribution,
    catalog,
    code_from_family,
    enumerate_line_count,
    griesmer_bound,
    lines_of_linear_code,
    qweight,
    run_search,
    verify,
)

__all__ = [
    "AdditiveCode",
    "BinaryLinearCode",
    "CodeObject",
    "CompletionReport",
    "CoverageReport",
    "F4CompletionReport",
    "LimitError",
    "ObjectFamily",
    "ParseError",
    "WeightDistribution",
    "catalog",
    "code_from_family",
    "enumerate_line_count",
    "griesmer_bound",
    "lines_of_linear_code",
    "qweight",
    "run_search",
    "verify",
]
