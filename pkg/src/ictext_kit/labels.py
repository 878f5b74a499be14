"""The 62-way character alphabet and the rare-class (lowercase) subset.

Class indices are assigned by charset block: digits 0-9 map to indices
0-9, lowercase a-z to 10-35, uppercase A-Z to 36-61.
"""

import string

from .errors import ValidationError

CLASS_CHARS: str = string.digits + string.ascii_lowercase + string.ascii_uppercase
NUM_CLASSES: int = len(CLASS_CHARS)  # 62

_CHAR_TO_INDEX = {ch: i for i, ch in enumerate(CLASS_CHARS)}

LOWERCASE_CLASS_IDS = frozenset(range(10, 36))

# Lowercase letters are heavily underrepresented in the IC character data,
# so they form the default rare-class set for sampling and distillation.
RARE_CLASS_IDS = LOWERCASE_CLASS_IDS


def class_to_index(ch: str) -> int:
    """Map a single character 0-9a-zA-Z to its class index."""
    idx = _CHAR_TO_INDEX.get(ch)
    if idx is None:
        raise ValidationError(f"unknown class {ch!r}; expected one of 0-9, a-z, A-Z")
    return idx


def index_to_class(idx: int) -> str:
    """Map a class index back to its character."""
    if not 0 <= idx < NUM_CLASSES:
        raise ValidationError(f"class index {idx} out of range 0..{NUM_CLASSES - 1}")
    return CLASS_CHARS[idx]
