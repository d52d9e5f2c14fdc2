"""Small cases of P, Q, Pbar, Qbar as printed in the reference tables.

Coefficients are listed ascending (constant term first). These are frozen
literature values, kept separate from the code that generates the families
so the two can be compared.
"""
from __future__ import annotations

PRINTED_POLYNOMIALS: dict[str, list[list[int]]] = {
    "P": [
        [1],
        [0, 1],
        [0, -1, 2],
        [0, 3, -8, 6],
        [0, -17, 54, -60, 24],
        [0, 155, -556, 762, -480, 120],
    ],
    "Q": [
        [1],
        [0, 1],
        [0, -1, 3],
        [0, 4, -15, 15],
        [0, -34, 147, -210, 105],
        [0, 496, -2370, 4095, -3150, 945],
    ],
    "Pbar": [
        [1],
        [-3, 4],
        [25, -56, 32],
        [-427, 1228, -1184, 384],
        [12465, -41840, 52416, -29184, 6144],
        [-555731, 2079892, -3076288, 2258688, -829440, 122880],
    ],
    "Qbar": [
        [1],
        [1, 2],
        [1, 8, 12],
        [1, 2, 60, 120],
        [1, 128, -168, 0, 1680],
        [1, -2638, 7320, 5040, -25200, 30240],
    ],
}
