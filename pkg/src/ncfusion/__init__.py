"""Categories of noncrossing two-colored partitions and the fusion rules of their quantum groups."""

from .category import CategorySpec, CategoryTable, Membership, family_table, generated_table, parse_family
from .partition import Partition, adjoint, compose, from_text, rotate, tensor, to_text

__all__ = [
    "CategorySpec",
    "CategoryTable",
    "Membership",
    "Partition",
    "adjoint",
    "compose",
    "family_table",
    "from_text",
    "generated_table",
    "parse_family",
    "rotate",
    "tensor",
    "to_text",
]
__version__ = "0.1.0"
