"""Weyl domain - affine permutations of type A and monomial matrices."""

from twincity.weyl.affine import (
    elements_up_to_length,
    finite_part,
    from_word,
    inverse,
    left_descents,
    length,
    longest_finite_element,
    multiply,
    reduced_word,
    right_descents,
    simple_reflection,
    translation_part,
    word_length_bfs,
)
from twincity.weyl.models import AffinePermutation, MonomialMatrix
from twincity.weyl.monomial import as_monomial, monomial_to_weyl, weyl_to_monomial

__all__ = [
    "AffinePermutation",
    "MonomialMatrix",
    "multiply",
    "inverse",
    "length",
    "reduced_word",
    "simple_reflection",
    "right_descents",
    "left_descents",
    "from_word",
    "elements_up_to_length",
    "word_length_bfs",
    "finite_part",
    "translation_part",
    "longest_finite_element",
    "as_monomial",
    "monomial_to_weyl",
    "weyl_to_monomial",
]
