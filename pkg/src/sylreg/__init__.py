"""Exact character-table tools for Syl_p-vanishing and Steinberg-like characters."""

from .ctable import CharacterTable, VirtualCharacter, ingest, emit, validate, direct_product
from .cyclo import Cyclotomic, E
from .symmchar import an_table, sn_table
from .psl2 import psl2_table

__all__ = [
    "CharacterTable", "VirtualCharacter", "Cyclotomic", "E",
    "ingest", "emit", "validate", "direct_product",
    "sn_table", "an_table", "psl2_table",
]
