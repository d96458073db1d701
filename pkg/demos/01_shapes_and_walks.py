"""Shapes of a string algebra: admissible paths, strings, bands."""

from stringalg.presentations import bundled, kronecker
from stringalg.quiver import admissible_paths, validate_string_algebra
from stringalg.shapes import enumerate_cyclic_shapes, enumerate_linear_shapes, shape_from_word

gp3 = bundled("gp3")  # one vertex, loops a and b
print(gp3.to_text())
print(validate_string_algebra(gp3))

# the algebra has a basis of admissible paths
print("paths:", [str(p) for p in admissible_paths(gp3)])

# strings are walks avoiding the relations, read up to reversal
words = enumerate_linear_shapes(gp3, 3)
print(len(words), "strings of length <= 3:")
for w in words:
    print("  S[%s]" % w)

# a word and its reversal name the same shape
print(shape_from_word(gp3, "b^- a").word, "==", shape_from_word(gp3, "a^- b").word)

# bands live on cyclic words, read up to rotation and reflection
print("bands on the Kronecker quiver:", [str(w) for w in enumerate_cyclic_shapes(kronecker(), 4)])
