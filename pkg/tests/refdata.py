"""Shared constants for the 18-element worked example used across the tests."""

# A permutation that descends in a block of length 8 and ascends in one of length 10.
PERM18_TEXT = "18 17 15 14 13 12 11 9 1 2 3 4 5 6 7 8 10 16"

PERM18_CYCLES = "(1 18 16 8 9)(2 17 10)(3 15 7 11)(4 14 6 12)(5 13)"

# Its image, in canonical form (necklaces length-descending, minimal rotations).
ORN18_TEXT = "(1 2 1 2 2)(1 2 1 2)(1 2 1 2)(1 2 2)(1 2)"

# The same ornament written with other rotations and another necklace order.
ORN18_TEXT_ALT = "(1 2 2 1 2)(1 2 2)(1 2 1 2)(1 2 1 2)(1 2)"

BLOCKS18 = (8, 10)
DESCENDING18 = frozenset({1})

# First 7 signed-walk terms for every vertex, keyed by (necklace_index, position)
# in the canonical ornament above.  The two length-4 necklaces carry equal rows.
WALK_ROW_IJ = (1, -2, -1, 2, 1, -2, -1)
WALK_ROW_JR = (2, 1, -2, -1, 2, 1, -2)
WALK_TABLE18 = {
    (0, 0): (1, -2, -1, 2, 2, 1, -2),
    (0, 1): (2, 1, -2, -2, -1, 2, 1),
    (0, 2): (1, -2, -2, -1, 2, 1, -2),
    (0, 3): (2, 2, 1, -2, -1, 2, 2),
    (0, 4): (2, 1, -2, -1, 2, 2, 1),
    (1, 0): WALK_ROW_IJ,
    (1, 1): WALK_ROW_JR,
    (1, 2): WALK_ROW_IJ,
    (1, 3): WALK_ROW_JR,
    (2, 0): WALK_ROW_IJ,
    (2, 1): WALK_ROW_JR,
    (2, 2): WALK_ROW_IJ,
    (2, 3): WALK_ROW_JR,
    (3, 0): (1, -2, -2, -1, 2, 2, 1),
    (3, 1): (2, 2, 1, -2, -2, -1, 2),
    (3, 2): (2, 1, -2, -2, -1, 2, 2),
    (4, 0): WALK_ROW_IJ,
    (4, 1): WALK_ROW_JR,
}
