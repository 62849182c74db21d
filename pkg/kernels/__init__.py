import logging
from typing import Optional, Union

from config import ALLOWED_INTEGER_BACKENDS, INTEGER_BACKEND
from models.errors import InvalidSpec

from .exact import ExactKernel, exact_kernel
from .fixed import FixedWidthKernel, fixed_kernel

logger = logging.getLogger(__name__)

Kernel = Union[ExactKernel, FixedWidthKernel]


def get_kernel(name: Optional[str] = None) -> Kernel:
    """Get the convolution kernel named ``name`` or configured by INTEGER_BACKEND"""
    name = name or INTEGER_BACKEND
    if name not in ALLOWED_INTEGER_BACKENDS:
        raise InvalidSpec(f"Unknown integer backend '{name}', expected one of {sorted(ALLOWED_INTEGER_BACKENDS)}")
    if name == "fixed":
        logger.debug("Using fixed-width int64 convolution kernel")
        return fixed_kernel
    return exact_kernel


__all__ = ['get_kernel', 'Kernel', 'ExactKernel', 'FixedWidthKernel', 'exact_kernel', 'fixed_kernel']
