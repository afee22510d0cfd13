"""Stored reference data for the 23 tabulated symbol classes.

dim_mss and dim_fiber are paper-asserted reference values; the library
recomputes dim_mqc (= r - 2) and the stabilizer dimensions and checks
them against this table, but does not rederive the moduli of surfaces.
"""

TABLE_73 = (
    (1, "[111111]", 4, 3, 1),
    (2, "[21111]", 3, 2, 1),
    (3, "[3111]", 2, 1, 1),
    (4, "[411]", 1, 0, 1),
    (5, "[2211]", 2, 1, 1),
    (6, "[321]", 1, 0, 1),
    (7, "[222]", 1, 0, 1),
    (8, "[(11)1111]", 3, 2, 1),
    (9, "[(11)211]", 2, 1, 1),
    (10, "[(11)31]", 1, 0, 1),
    (11, "[(11)22]", 1, 0, 1),
    (12, "[(21)111]", 2, 1, 1),
    (13, "[(21)21]", 1, 0, 1),
    (14, "[(31)11]", 1, 0, 1),
    (15, "[(22)11]", 1, 0, 1),
    (16, "[(11)(11)11]", 2, 1, 1),
    (17, "[(11)(11)2]", 1, 0, 1),
    (18, "[(21)(11)1]", 1, 0, 1),
    (19, "[(11)(11)(11)]", 1, 0, 1),
    (20, "[(111)111]", 2, 0, 2),
    (21, "[(111)(11)1]", 1, 0, 1),
    (22, "[(111)21]", 1, 0, 1),
    (23, "[(211)11]", 1, 0, 1),
)

CASE_SYMBOLS = {row[0]: row[1] for row in TABLE_73}
SYMBOL_DIMS = {row[1]: (row[2], row[3], row[4]) for row in TABLE_73}

# Paper-asserted: the irreducible one-bracket symbols that are not
# semistable.  Reference data only; the library derives instability of
# one-bracket symbols from the root-count criterion, not from this list.
UNSTABLE_IRREDUCIBLE_SYMBOLS = (
    "[6]", "[(51)]", "[(42)]", "[(33)]", "[(411)]", "[(321)]", "[(222)]",
)
