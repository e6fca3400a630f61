"""Published p = 2 data used as exact regression targets.

Basis of the cycle space: ``(d0, d1, d12^0, d12^1, d13, d23)``; reduced basis:
``(d0, d1, d12^0+d13+d23, d12^1+d13+d23)``.
"""
from fractions import Fraction

from .exact_linalg import Matrix

OMEGA_P2 = Matrix.from_rows([
    [0, -1, 1, 0, 1, 1],
    [1, 0, 0, 1, 1, 1],
    [-1, 0, 0, 0, 0, 0],
    [0, -1, 0, 0, 0, 0],
    [-1, -1, 0, 0, 0, 0],
    [-1, -1, 0, 0, 0, 0],
])

M1_P2 = Matrix.from_rows([
    [1, -1, 1, 0, 1, 1],
    [0, 1, 0, 0, 0, 0],
    [0, 0, 1, 0, 0, 0],
    [0, 0, 0, 1, 0, 0],
    [0, 0, 0, 0, 1, 0],
    [0, 0, 0, 0, 0, 1],
])

M2_P2 = Matrix.from_rows([
    [0, 1, 0, 0, 0, 0],
    [1, 0, 0, 0, 0, 0],
    [0, -1, 0, 1, 0, 0],
    [0, 0, 1, 0, 0, 0],
    [0, -1, 0, 0, 1, 0],
    [0, -1, 0, 0, 0, 1],
])

# zero-cycles: d13 - d23 and d13 + d23 - 2 d12^0 - 2 d12^1
KERNEL_P2 = (
    tuple(Fraction(x) for x in (0, 0, 0, 0, 1, -1)),
    tuple(Fraction(x) for x in (0, 0, -2, -2, 1, 1)),
)

M1_RED_P2 = Matrix.from_rows([
    [1, -1, 3, 2],
    [0, 1, 0, 0],
    [0, 0, 1, 0],
    [0, 0, 0, 1],
])

M2_RED_P2 = Matrix.from_rows([
    [0, 1, 0, 0],
    [1, 0, 0, 0],
    [0, -1, 0, 1],
    [0, 0, 1, 0],
])

M2_SQUARED_RED_P2 = Matrix.from_rows([
    [1, 0, 0, 0],
    [0, 1, 0, 0],
    [-1, 0, 1, 0],
    [0, -1, 0, 1],
])

M2_M1_M2INV_RED_P2 = Matrix.from_rows([
    [1, 0, 0, 0],
    [1, 1, 2, 3],
    [0, 0, 1, 0],
    [0, 0, 0, 1],
])

A_P2 = Matrix.from_rows([
    [0, -1, 3, 2],
    [0, 0, 0, 0],
    [0, 0, 0, 0],
    [0, 0, 0, 0],
])

B_P2 = Matrix.from_rows([
    [0, 0, 0, 0],
    [1, 0, 2, 3],
    [0, 0, 0, 0],
    [0, 0, 0, 0],
])

C_P2 = Matrix.from_rows([
    [0, 0, 0, 0],
    [0, 0, 0, 0],
    [-1, 0, 0, 0],
    [0, -1, 0, 0],
])

# values of the dual basis on (H1, H2)
LAMBDA1 = (Fraction(1), Fraction(-5))
LAMBDA2 = (Fraction(0), Fraction(5))

# root of each named root vector as integer coefficients on (lambda1, lambda2)
ROOTS = {
    "X12": (1, -1),
    "X21": (-1, 1),
    "Y12": (1, 1),
    "Z12": (-1, -1),
    "U1": (2, 0),
    "V1": (-2, 0),
    "U2": (0, 2),
    "V2": (0, -2),
}

MINIMAL_PF_DEGREE_P2 = 4
