import hashlib
import uuid
from fractions import Fraction
from typing import Iterable, Optional, Sequence, Union

from config import TV_SIGNIFICANT_DIGITS

Number = Union[int, float, Fraction]


def generate_error_id() -> str:
    """Generate a short id used to correlate an error message with its log line"""
    return str(uuid.uuid4())[:8]


def hash_bytes(payload: bytes) -> str:
    """Create SHA256 hash of a byte string"""
    return hashlib.sha256(payload).hexdigest()


def fingerprint_table(order: int, table_bytes: bytes) -> str:
    """Stable identifier for a Cayley table; equal tables share it"""
    return hash_bytes(str(order).encode() + b":" + table_bytes)[:16]


def format_number(value: Number, digits: int = TV_SIGNIFICANT_DIGITS) -> str:
    """Exact values print exactly; floats print to ``digits`` significant digits"""
    if isinstance(value, bool):
        return str(value).lower()
    if isinstance(value, Fraction):
        if value.denominator == 1:
            return str(value.numerator)
        return f"{value.numerator}/{value.denominator}"
    if isinstance(value, float):
        return f"{value:.{digits}g}"
    return str(int(value))


def format_elements(indices: Iterable[int], labels: Optional[Sequence[str]] = None) -> str:
    """Render a set of element indices as ``{a,b,c}``"""
    if labels is None:
        return "{" + ",".join(str(i) for i in indices) + "}"
    return "{" + ",".join(labels[i] for i in indices) + "}"


def truncate_string(text: str, max_length: int = 100, suffix: str = "...") -> str:
    """Truncate string to max length with suffix"""
    if len(text) <= max_length:
        return text
    return text[:max_length - len(suffix)] + suffix
