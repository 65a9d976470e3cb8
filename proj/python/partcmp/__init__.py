"""Pair-counting agreement indices for comparing two partitions.

The heavy lifting lives in the C++ extension module; reports cross the
boundary as plain dicts with the same schema as the CLI's JSON output.
"""

from ._core import (
    PairCounts,
    __version__,
    block_pair,
    compare_labels,
    compare_table,
    ecoli_table,
    index_names,
    labels_from_table,
    oracle_pair_counts,
    pair_counts,
    toy_example,
)

__all__ = [
    "PairCounts",
    "__version__",
    "block_pair",
    "compare_labels",
    "compare_table",
    "ecoli_table",
    "index_names",
    "labels_from_table",
    "oracle_pair_counts",
    "pair_counts",
    "toy_example",
]
