"""Reference values, transcribed by hand from the original tables and drawings.

Grids are indexed [row][column]; for the xi tables rows are nu_1 and
columns nu_2, for the alpha tables rows are mu_1 and columns mu_2.
"""

HEADLINE_LAMBDA = (11, 7, 8, 6)
HEADLINE_ROOTS = (1, 1, 3)
HEADLINE_COUNT = 2223687758798502796800

# the forest drawn with the headline count (4 colors, roots 1, 1, 3)
HEADLINE_FOREST = (
    "1(2(1(3())4())3()) "
    "1(2(1(2()3(1()))3()4(1()))4(2(1()3(1()2()4()))3())) "
    "3(1()2(1(2()3()4()))4(1()))"
)

GALLERY_LAMBDA = (3, 1, 1)
GALLERY_ROOTS = (1, 1)
GALLERY_COUNT = 20
GALLERY_FIRST = "1(2(1(3()))) 1()"

# root deletion example with 5 colors: left forest -> right forest, S = {1, 2, 4}
DELETION_BEFORE = "2(3()5(2()4())) 5(1()2(1(2()3()4()))4(3()))"
DELETION_AFTER = "2(3()5(2()4())) 1() 2(1(2()3()4())) 4(3())"
DELETION_SET = frozenset({1, 2, 4})

XI_TABLES = {
    1: [[1]],
    2: [[0, 1], [1, 0]],
    3: [[0, 1], [1, 3]],
    4: [[0, 0, 1], [0, 8, 2], [1, 2, 0]],
    5: [[0, 0, 1], [0, 5, 15], [1, 15, 5]],
    6: [[0, 0, 0, 1], [0, 0, 27, 8], [0, 27, 54, 3], [1, 8, 3, 0]],
    7: [[0, 0, 0, 1], [0, 0, 14, 42], [0, 14, 168, 70], [1, 42, 70, 7]],
    8: [[0, 0, 0, 0, 1], [0, 0, 0, 64, 20], [0, 0, 200, 400, 30],
        [0, 64, 400, 192, 4], [1, 20, 30, 4, 0]],
}

ALPHA_N = 6
ALPHA_TOTAL = 6188
ALPHA_TABLES = {
    (3, 0, 0): [[0, 0, 81, 300, 81], [0, 135, 1350, 1350, 135], [18, 540, 1458, 540, 18],
                [10, 81, 81, 10, 0], [0, 0, 0, 0, 0]],
    (2, 1, 0): [[0, 0, 55, 140, 15], [0, 145, 1150, 786, 31], [34, 860, 1830, 460, 6],
                [50, 339, 265, 22, 0], [0, 0, 0, 0, 0]],
    (1, 1, 1): [[0, 0, 10, 64, 10], [0, 32, 640, 640, 32], [10, 640, 2000, 640, 10],
                [64, 640, 640, 64, 0], [10, 32, 10, 0, 0]],
}

# triangulations of the n-gon by coloring type; only nonzero types are listed
TRIANGULATION_COUNTS = {
    3: {(1, 1, 1): 1},
    4: {(2, 1, 1): 2},
    5: {(2, 2, 1): 5},
    6: {(3, 2, 1): 6, (2, 2, 2): 8},
    7: {(3, 3, 1): 7, (3, 2, 2): 35},
    8: {(4, 3, 1): 8, (4, 2, 2): 16, (3, 3, 2): 108},
    9: {(4, 4, 1): 9, (4, 3, 2): 252, (3, 3, 3): 168},
    10: {(5, 4, 1): 10, (5, 3, 2): 100, (4, 4, 2): 320, (4, 3, 3): 1000},
    11: {(5, 5, 1): 11, (5, 4, 2): 660, (5, 3, 3): 891, (4, 4, 3): 3300},
    12: {(6, 5, 1): 12, (6, 4, 2): 240, (6, 3, 3): 294, (5, 5, 2): 750,
         (5, 4, 3): 10500, (4, 4, 4): 5000},
    13: {(6, 6, 1): 13, (6, 5, 2): 1430, (6, 4, 3): 8008, (5, 5, 3): 14300,
         (5, 4, 4): 35035},
    14: {(7, 6, 1): 14, (7, 5, 2): 490, (7, 4, 3): 2352, (6, 6, 2): 1512,
         (6, 5, 3): 39690, (6, 4, 4): 43904, (5, 5, 4): 120050},
    15: {(7, 7, 1): 15, (7, 6, 2): 2730, (7, 5, 3): 27300, (7, 4, 4): 28080,
         (6, 6, 3): 47775, (6, 5, 4): 458640, (5, 5, 5): 178360},
    16: {(8, 7, 1): 16, (8, 6, 2): 896, (8, 5, 3): 7392, (8, 4, 4): 7200,
         (7, 7, 2): 2744, (7, 6, 3): 120736, (7, 5, 4): 493920, (6, 6, 4): 658560,
         (6, 5, 5): 1382976},
}

# the octagon triangulation drawn next to its dual tree
OCTAGON_DIAGONALS = frozenset({(0, 5), (1, 5), (1, 3), (3, 5), (5, 7)})
OCTAGON_COLORS = (1, 2, 3, 1, 2, 3, 1, 2)
OCTAGON_TREE = "3(1(2()3())2(1()))"

KEY_POLY_2 = "x1*y2 + x2*y1 - y1*y2"
KEY_POLY_3 = (
    "x1^2y2 + x1^2y3 + x2^2y1 + x2^2y3 + x3^2y1 + x3^2y2 + 2y1y2y3 + x1x2y1 + x1x2y2"
    " + 2x1x2y3 + x1x3y1 + 2x1x3y2 + x1x3y3 + 2x2x3y1 + x2x3y2 + x2x3y3 - x1y1y2"
    " - x1y1y3 - 2x1y2y3 - x2y1y2 - 2x2y1y3 - x2y2y3 - 2x3y1y2 - x3y1y3 - x3y2y3"
)
