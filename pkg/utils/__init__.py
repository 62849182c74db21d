from .helpers import (
    generate_error_id,
    hash_bytes,
    fingerprint_table,
    format_number,
    format_elements,
    truncate_string
)

__all__ = [
    'generate_error_id',
    'hash_bytes',
    'fingerprint_table',
    'format_number',
    'format_elements',
    'truncate_string'
]
