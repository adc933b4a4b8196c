"""Python bindings for the synpath library."""

from ._synpath import (
    InvalidInput,
    ResourceLimit,
    admissible_paths,
    count_realizable_paths_kn,
    diagram_dot,
    encode,
    length_distribution,
    simulate,
    verify,
    witness,
)

__all__ = [
    "InvalidInput",
    "ResourceLimit",
    "admissible_paths",
    "count_realizable_paths_kn",
    "diagram_dot",
    "encode",
    "length_distribution",
    "simulate",
    "verify",
    "witness",
]
