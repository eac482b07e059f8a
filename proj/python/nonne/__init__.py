# Licensed under the Apache License, Version 2.0, see LICENSE for details.
# SPDX-License-Identifier: Apache-2.0
"""Sieve for non-norm-Euclidean Galois fields of odd prime degree."""

from ._nonne import (
    CharacterEngine,
    CharacterSpec,
    NonneError,
    SieveReport,
    Witness,
    bounds,
    character,
    cubic_symbol,
    is_prime,
    make_spec,
    parse_witness,
    primes_up_to,
    sieve,
    validate_witness,
)

__all__ = [
    "CharacterEngine",
    "CharacterSpec",
    "NonneError",
    "SieveReport",
    "Witness",
    "bounds",
    "character",
    "cubic_symbol",
    "is_prime",
    "make_spec",
    "parse_witness",
    "primes_up_to",
    "sieve",
    "validate_witness",
]
