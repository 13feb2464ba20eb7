"""Default resource caps.

All caps guard enumerations whose cost is exponential in the capped
quantity.  They can be overridden per call; the CLI additionally reads
``KOSTKA_*`` environment variables.
"""

from __future__ import annotations

# Largest partition size for which Kostka numbers are counted tableau
# by tableau.
BOX_CAP = 30

# Largest |lambda| for which is_irreducible enumerates splittings.
SPLIT_CAP = 40

# Widest matrix for which column subsets are swept exhaustively (2^w masks).
WIDTH_CAP = 24

# Largest rank for which the Hilbert basis is computed.
RANK_CAP = 6

# Longest generalized Catalan sequence swept for sublist witnesses.
LENGTH_CAP = 24

# Most values a subset-sum instance may have for the brute-force oracle.
SUBSET_CAP = 24

# Longest sequence accepted by the cost-vs-width theorem check.
KIM_CAP = 20

# Largest |nu| for which Littlewood-Richardson coefficients are counted.
LR_BOX_CAP = 30

# Entries of user-supplied partitions/sequences must fit in a signed
# 64-bit integer so numpy paths never overflow.
INT_CAP = 2**63 - 1

# numpy mask sweeps are chunked to keep peak memory flat.
CHUNK_BITS = 20
