"""Orthogonal idempotents in the representation ring."""

from stringalg.decompose import make_string
from stringalg.presentations import bundled
from stringalg.repring import (
    Idem, RingElement, Universe, band_action_table, idempotent_to_strings, multiply_indecomposables,
    string_to_idempotents,
)
from stringalg.shapes import enumerate_cyclic_shapes

gp3 = bundled("gp3")
U = Universe(gp3, 3)

# each string is a sum of idempotents over its subshapes
for w in U.words[:6]:
    print("S[%s] = %s" % (w, string_to_idempotents(w, U)))

# e[a] written back in strings, then squared through the tensor product
w = U.words[1]
e = idempotent_to_strings(w, U)
print("e[%s] =" % w, e)
print("e * e == e:", multiply_indecomposables(e, e, U) == e)
f = idempotent_to_strings(U.words[2], U)
print("e * f == 0:", multiply_indecomposables(e, f, U) == RingElement())

# bands act on each idempotent by a scalar
for g, word, n in band_action_table(gp3, U, enumerate_cyclic_shapes(gp3, 2)):
    print("|%s : %s| = %d" % (g, word, n))
