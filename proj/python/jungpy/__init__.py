"""Exact tame decomposition of automorphisms of Q[x,y]."""

from ._core import (
    ParseError,
    Poly,
    RejectError,
    TameMove,
    bracket,
    compose,
    decompose,
    directions,
    find_homogeneous_f,
    hull,
    invert,
    leading_form,
    random_tame_word,
    st_en,
    substitute,
    verify,
    word_inverse,
)

__all__ = [
    "ParseError",
    "Poly",
    "RejectError",
    "TameMove",
    "bracket",
    "compose",
    "decompose",
    "directions",
    "find_homogeneous_f",
    "hull",
    "invert",
    "leading_form",
    "random_tame_word",
    "st_en",
    "substitute",
    "verify",
    "word_inverse",
]
