"""
Spelling geodesic words for lattice vectors
===========================================

A lattice element a^v has a geodesic spelling built from the balanced
ternary digits of v: t's climb to the highest digit, each level
contributes a sign block, and single T's climb back down.
"""

from horogrowth import (
    balanced_digits,
    element_str,
    eval_word,
    format_word,
    spell,
    word_length,
)

# Balanced ternary writes every integer with digits -1, 0, 1.
for e in (6, 10, 16):
    print(f"{e} has balanced digits {balanced_digits(e)} (lowest first)")

# The spelling of a^6 uses the digit row [0, 2]: climb once, write the
# top digit twice, climb back down.
w = spell(1, (6,))
print("spell(6) =", format_word(w), "length", w.length)

# A rank-2 example: both coordinates are spelled against the same
# tower of t's, so the word length is shared.
w = spell(2, (10, 16))
print("spell(10,16) =", format_word(w), "length", w.length)

# Evaluating the word through the group product recovers the vector.
g = eval_word(w)
print("evaluates to", element_str(g))

# word_length gives the token count without building the word.
for v in [(1, 1), (4, 7), (40, 121), (-10, 16)]:
    assert word_length(2, v) == spell(2, v).length
    print(f"|spell{v}| = {word_length(2, v)}")
