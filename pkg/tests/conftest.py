"""Shared type lists for the test suite.

The library memoizes root systems, enumerations and class partitions per
Cartan type, so tests simply call the public API; nothing here mutates
global state.
"""

# every type the acceptance suite must cover
TYPES_MAIN = ("A1", "A2", "A3", "A4", "A5", "A6",
              "B2", "B3", "B4", "B5", "B6",
              "C3", "C4", "C5", "C6",
              "D4", "D5", "D6",
              "G2", "F4", "E6")

TYPES_RANK_LE_3 = ("A1", "A2", "A3", "B2", "B3", "C3", "G2")
TYPES_RANK_LE_4 = ("A1", "A2", "A3", "A4", "B2", "B3", "B4", "C3", "C4",
                   "D4", "G2", "F4")
TYPES_RANK_LE_5 = TYPES_RANK_LE_4 + ("A5", "B5", "C5", "D5")
TYPES_RANK_5_6 = ("A5", "A6", "B5", "B6", "C5", "C6", "D5", "D6", "E6")

# both differential oracles run on these (largest group: 48 elements)
TYPES_DIFFERENTIAL = ("A1", "A2", "A3", "B2", "B3", "C3", "G2")
