"""Enumerate choice combinations of number pairs in order of their sums."""

from ._core import (
    DegenerateFit,
    EmptyInput,
    Enumerator,
    Error,
    IndexOutOfRange,
    InvalidK,
    LengthMismatch,
    NonFiniteInput,
    ParseError,
    ProblemInstance,
    TooLarge,
    brute_force_top_k,
    crc8,
    crc8_bytes,
    decode,
    fit_polynomial,
    run_bench,
    shift,
    successors,
    top_k,
)

__all__ = [
    "DegenerateFit",
    "EmptyInput",
    "Enumerator",
    "Error",
    "IndexOutOfRange",
    "InvalidK",
    "LengthMismatch",
    "NonFiniteInput",
    "ParseError",
    "ProblemInstance",
    "TooLarge",
    "brute_force_top_k",
    "crc8",
    "crc8_bytes",
    "decode",
    "fit_polynomial",
    "run_bench",
    "shift",
    "successors",
    "top_k",
]
