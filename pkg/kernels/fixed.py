"""
Fixed-width int64 convolution kernel. Faster than the exact kernel, but
refuses (never wraps) when a result could exceed the int64 range.
"""
from typing import Sequence

import numpy as np

from models.errors import Overflow

INT64_MAX = int(np.iinfo(np.int64).max)


class FixedWidthKernel:
    name = "fixed"

    def zeros(self, n: int) -> np.ndarray:
        return np.zeros(n, dtype=np.int64)

    def from_values(self, values: Sequence) -> np.ndarray:
        ints = [int(v) for v in values]
        if any(abs(v) > INT64_MAX for v in ints):
            raise Overflow("Coefficient does not fit in int64")
        return np.array(ints, dtype=np.int64)

    def convolve(self, table: np.ndarray, u: np.ndarray, v: np.ndarray) -> np.ndarray:
        support = np.flatnonzero(u != 0)
        if support.size == 0:
            return self.zeros(len(u))
        # Each output coefficient sums at most |support| products
        bound = int(np.abs(u).max()) * int(np.abs(v).max()) * int(support.size)
        if bound > INT64_MAX:
            raise Overflow(f"Convolution bound {bound} exceeds int64; use the exact backend")
        out = self.zeros(len(u))
        for x in support:
            out[table[x]] += u[x] * v
        return out


# Kernel instance
fixed_kernel = FixedWidthKernel()
