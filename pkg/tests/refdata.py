"""Frozen reference data for the test suite.

PAW_* is the paw graph (a triangle with a pendant vertex) with its five
walk matrices, all small enough to check by hand.  MATES8_* is a pair of
8-vertex adjacency matrices sharing one rank-6 standard walk matrix.  The
MATES7/MATES9 walk matrices have rank n-3 and n-4; their graphs were
recovered by exhaustive constraint search (scripts/find_walk_mates.py) and
every fixture is re-verified against its walk matrix in the tests that
use it.
"""

PAW_EDGES = [(1, 2), (2, 3), (2, 4), (3, 4)]

PAW_A = [[0, 1, 0, 0],
         [1, 0, 1, 1],
         [0, 1, 0, 1],
         [0, 1, 1, 0]]

PAW_WV = [[1, 1, 3, 5],
          [1, 3, 5, 13],
          [1, 2, 5, 10],
          [1, 2, 5, 10]]

PAW_W1 = [[1, 0, 1, 0],
          [0, 1, 0, 3],
          [0, 0, 1, 1],
          [0, 0, 1, 1]]

PAW_W2 = [[0, 1, 0, 3],
          [1, 0, 3, 2],
          [0, 1, 1, 4],
          [0, 1, 1, 4]]

PAW_W3 = [[0, 0, 1, 1],
          [0, 1, 1, 4],
          [1, 0, 2, 2],
          [0, 1, 1, 3]]

PAW_W4 = [[0, 0, 1, 1],
          [0, 1, 1, 4],
          [0, 1, 1, 3],
          [1, 0, 2, 2]]

# main polynomial of V: x^3 - x^2 - 3x + 1, ascending coefficients
PAW_MAIN = [1, -3, -1, 1]
# characteristic polynomial (1+x)(x^3 - x^2 - 3x + 1) = x^4 - 4x^2 - 2x + 1
PAW_CHAR = [1, -2, -4, 0, 1]

MATES8_A1 = [[0, 0, 0, 1, 1, 0, 1, 0],
             [0, 0, 1, 0, 1, 0, 0, 1],
             [0, 1, 0, 0, 1, 1, 0, 0],
             [1, 0, 0, 0, 0, 1, 0, 0],
             [1, 1, 1, 0, 0, 0, 1, 0],
             [0, 0, 1, 1, 0, 0, 0, 0],
             [1, 0, 0, 0, 1, 0, 0, 0],
             [0, 1, 0, 0, 0, 0, 0, 0]]

MATES8_A2 = [[0, 0, 1, 0, 1, 0, 0, 1],
             [0, 0, 0, 1, 1, 0, 1, 0],
             [1, 0, 0, 0, 1, 1, 0, 0],
             [0, 1, 0, 0, 0, 1, 0, 0],
             [1, 1, 1, 0, 0, 0, 1, 0],
             [0, 0, 1, 1, 0, 0, 0, 0],
             [0, 1, 0, 0, 1, 0, 0, 0],
             [1, 0, 0, 0, 0, 0, 0, 0]]

MATES8_W = [[1, 3, 8, 23, 64, 181, 506, 1425],
            [1, 3, 8, 23, 64, 181, 506, 1425],
            [1, 3, 9, 24, 69, 190, 539, 1502],
            [1, 2, 5, 13, 37, 101, 287, 797],
            [1, 4, 11, 32, 89, 252, 705, 1984],
            [1, 2, 5, 14, 37, 106, 291, 826],
            [1, 2, 7, 19, 55, 153, 433, 1211],
            [1, 1, 3, 8, 23, 64, 181, 506]]

# rank n-3 = 4 on 7 vertices; the two graphs below are non-isomorphic and
# both regenerate this matrix exactly
MATES7_W = [[1, 4, 11, 35, 104, 318, 960],
          [1, 3, 9, 27, 82, 248, 752],
          [1, 2, 7, 20, 62, 186, 566],
          [1, 2, 8, 22, 70, 208, 636],
          [1, 2, 7, 20, 62, 186, 566],
          [1, 3, 9, 27, 82, 248, 752],
          [1, 4, 11, 35, 104, 318, 960]]

MATES7_G6 = "F{@Kw"
MATES7_G6_STAR = "FsPcw"

# rank n-4 = 5 on 9 vertices; the second graph is isomorphic to the
# complement of the first
MATES9_W = [[1, 4, 18, 72, 300, 1222, 5028, 20586, 84480],
          [1, 4, 16, 67, 272, 1121, 4586, 18827, 77162],
          [1, 5, 20, 83, 339, 1393, 5707, 23413, 95989],
          [1, 5, 20, 83, 339, 1393, 5707, 23413, 95989],
          [1, 4, 16, 67, 272, 1121, 4586, 18827, 77162],
          [1, 3, 13, 52, 215, 878, 3607, 14778, 60625],
          [1, 4, 16, 65, 267, 1093, 4485, 18385, 75403],
          [1, 4, 16, 65, 267, 1093, 4485, 18385, 75403],
          [1, 3, 13, 52, 215, 878, 3607, 14778, 60625]]

MATES9_G6 = "H|dbGsX"
MATES9_G6_STAR = "H|dQ`[i"

# rank n-2 graphs whose two non-main eigenvalues coincide (zero
# discriminant): star K_{1,3} and K_{1,3} plus an isolated vertex
D0_STAR_EDGES = (4, [(1, 2), (1, 3), (1, 4)])
D0_STAR_ISOLATED_EDGES = (5, [(1, 2), (1, 3), (1, 4)])
