"""
Arbitrary-precision convolution kernel backed by numpy ``object`` arrays of
Python ints (or Fractions).
"""
from typing import Sequence

import numpy as np


class ExactKernel:
    """Exact group-algebra arithmetic; coefficients never wrap"""

    name = "exact"

    def zeros(self, n: int) -> np.ndarray:
        out = np.empty(n, dtype=object)
        out[:] = 0
        return out

    def from_values(self, values: Sequence) -> np.ndarray:
        out = np.empty(len(values), dtype=object)
        out[:] = [v if not isinstance(v, np.integer) else int(v) for v in values]
        return out

    def convolve(self, table: np.ndarray, u: np.ndarray, v: np.ndarray) -> np.ndarray:
        """result[g] = sum over x·y = g of u[x]·v[y], iterating nonzero u[x] only"""
        out = self.zeros(len(u))
        for x in np.flatnonzero(u != 0):
            # row x of a Latin square is a permutation, so no index repeats
            out[table[x]] += u[x] * v
        return out


# Kernel instance
exact_kernel = ExactKernel()
