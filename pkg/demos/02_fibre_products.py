"""Fibre products of two shapes and their connected components."""

from stringalg.fibre import connected_components, fibre_product, linear_components
from stringalg.presentations import bundled
from stringalg.shapes import shape_from_word

gp3 = bundled("gp3")
F1 = shape_from_word(gp3, "a a b^- a")
F2 = shape_from_word(gp3, "b^- a a b^- b^-")

fp = fibre_product(F1, F2)
report = connected_components(fp)
print(report)

# the linear components are the string summands of the tensor product
for word, n in sorted(linear_components(F1, F2).items(), key=lambda kv: str(kv[0])):
    print("%2d x %s" % (n, word))
