"""Relevance of unitary parameters of general linear groups.

Parameters are formal sums of blocks ``L x S_d``; two parameters are relevant
when the blocks of one can be shifted up, shifted down or dualized onto the
other up to a generic remainder.  :func:`is_relevant_bruteforce` searches for
such a shift directly and :func:`is_relevant_criterion` decides it through
alternating multiplicity sums.
"""

from .dsl import ParseDiagnostic, ParseError, parse_parameter, parse_symbol, print_parameter
from .parameters import (
    ZERO,
    Block,
    EtaSymbol,
    Kind,
    UnitaryParameter,
    add,
    dimension,
    dual,
    is_arthur_type,
    is_generic,
    make_complementary,
    make_discrete,
    nt_measure,
    sl2_type,
    subtract,
)
from .partitions import Partition, associated_partition_of, is_close, transpose
from .relevance import (
    LambdaQuery,
    ResourceLimitError,
    Witness,
    find_witness,
    is_relevant_bruteforce,
    is_relevant_criterion,
    lambda_sum,
    multiplicity,
    proof_identity_check,
    verify_witness,
)

__version__ = "0.1.0"

__all__ = [
    "ZERO", "Block", "EtaSymbol", "Kind", "UnitaryParameter", "add", "dimension", "dual",
    "is_arthur_type", "is_generic", "make_complementary", "make_discrete", "nt_measure",
    "sl2_type", "subtract", "Partition", "associated_partition_of", "is_close", "transpose",
    "LambdaQuery", "ResourceLimitError", "Witness", "find_witness", "is_relevant_bruteforce",
    "is_relevant_criterion", "lambda_sum", "multiplicity", "proof_identity_check",
    "verify_witness", "ParseDiagnostic", "ParseError", "parse_parameter", "parse_symbol",
    "print_parameter",
]
