"""Shared helpers for the test suite."""

import itertools

import numpy as np


def all_vectors(rank: int, max_total: int):
    """Every nonzero multiplicity vector with component sum <= max_total."""
    out = []
    for total in range(1, max_total + 1):
        for combo in itertools.combinations_with_replacement(range(rank), total):
            vec = np.zeros(rank, dtype=np.int64)
            for i in combo:
                vec[i] += 1
            out.append(vec)
    return out


def s3_character_fusion():
    """Fusion tensor of the S3 character ring, computed from the character table.

    Oracle independent of the catalog: multiplicities come from inner products
    of products of characters over the three conjugacy classes.
    """
    class_sizes = np.array([1, 3, 2])
    chars = np.array([
        [1, 1, 1],
        [1, -1, 1],
        [2, 0, -1],
    ])
    order = class_sizes.sum()
    fusion = np.zeros((3, 3, 3), dtype=np.int64)
    for i in range(3):
        for j in range(3):
            product = chars[i] * chars[j]
            for k in range(3):
                fusion[i, j, k] = round((class_sizes * product * chars[k]).sum() / order)
    return fusion
