from trapezoids.core import GogTrapezoid, MagogTrapezoid

FIGURE1_MAGOG = MagogTrapezoid.build(8, 0, [1, 1, 2, 4, 4, 5, 7], [1, 2, 2, 4, 4, 6, 7, 7])
FIGURE1_GOG = GogTrapezoid.build(8, 0, [1, 1, 2, 4, 4, 5, 7, 7], [2, 2, 4, 5, 6, 7, 8])

# The three cases of the bijection, Magog side and Gog side.
CASE1_MAGOG = MagogTrapezoid.build(8, 0, [1, 1, 2, 4, 4, 6, 7], [1, 2, 2, 4, 4, 6, 7, 7])
CASE1_GOG = GogTrapezoid.build(8, 0, [1, 1, 2, 2, 2, 2, 4, 5], [2, 3, 4, 4, 6, 7, 7])
CASE2_MAGOG = MagogTrapezoid.build(8, 0, [1, 1, 2, 3, 4, 4, 5], [1, 2, 2, 4, 4, 6, 6, 8])
CASE2_GOG = GogTrapezoid.build(8, 0, [1, 1, 2, 3, 4, 4, 5, 6], [2, 3, 3, 5, 5, 7, 8])
CASE3_MAGOG = MagogTrapezoid.build(8, 0, [1, 1, 2, 3, 4, 4, 5], [1, 2, 2, 4, 4, 6, 6, 6])
CASE3_GOG = GogTrapezoid.build(8, 0, [1, 1, 2, 3, 4, 4, 5, 7], [2, 3, 3, 5, 5, 7, 7])

MINIMAL_MAGOG = MagogTrapezoid.build(3, 0, [1, 1], [1, 1, 1])
MINIMAL_GOG = GogTrapezoid.build(3, 0, [1, 1, 2], [2, 2])

# ell = 1: no j in 2..n-1 satisfies the pivot condition.
WIDE_PIVOT_GOG = GogTrapezoid.build(3, 1, [1, 1, 1], [3, 3])
WIDE_PIVOT_MAGOG = MagogTrapezoid.build(3, 1, [1, 3], [1, 3, 3])
