"""Exact braid-group arithmetic and finite categorical verification.

Submodules:
  words    braid words, permutations, word-level operations
  garside  left normal forms, the exact equality oracle
  handle   handle reduction, a normal-form-free equality oracle
  lk       the faithful 2-variable matrix representation oracle
  derive   strand doubling, cabling, the four derived braids, coset tools
  search   bounded exhaustive searches and randomized oracle fuzzing
  fincat   finite monoidal / enriched category instances and checkers
  cli      command-line entry point
"""

from .words import (
    BraidWord,
    Permutation,
    compose,
    exponent_sum,
    format_word,
    free_reduce,
    invert,
    parse_word,
    relation_shuffle,
    rot180,
    underlying_permutation,
)
from .garside import (
    GarsideNormalForm,
    braids_equal,
    is_trivial,
    left_normal_form,
    nf_key,
    normal_form_word,
)
from .handle import BUDGET_EXHAUSTED, EQUAL, UNEQUAL, handle_equal, reduce_word
from .lk import lk_equal, lk_matrix
from .derive import (
    CheckPreconditionError,
    block_cross,
    braiding_equation_holds,
    cable,
    check,
    coset_element,
    derived_braid,
    embed,
    op_transform,
)
from .search import (
    CosetReport,
    FuzzReport,
    ObstructionReport,
    SearchReport,
    conjecture_search,
    coset_scan,
    obstruction_scan,
    oracle_fuzz,
    word_count,
)

__all__ = [
    "BraidWord",
    "Permutation",
    "GarsideNormalForm",
    "parse_word",
    "format_word",
    "compose",
    "invert",
    "free_reduce",
    "rot180",
    "underlying_permutation",
    "exponent_sum",
    "relation_shuffle",
    "left_normal_form",
    "nf_key",
    "braids_equal",
    "is_trivial",
    "normal_form_word",
    "EQUAL",
    "UNEQUAL",
    "BUDGET_EXHAUSTED",
    "handle_equal",
    "reduce_word",
    "lk_equal",
    "lk_matrix",
    "CheckPreconditionError",
    "embed",
    "cable",
    "block_cross",
    "derived_braid",
    "check",
    "coset_element",
    "op_transform",
    "braiding_equation_holds",
    "conjecture_search",
    "obstruction_scan",
    "coset_scan",
    "oracle_fuzz",
    "word_count",
    "SearchReport",
    "ObstructionReport",
    "CosetReport",
    "FuzzReport",
]

__version__ = "0.1.0"
