"""Decomposing tensor products of strings and bands."""

from fractions import Fraction

from stringalg.decompose import cg_tensor, jordan_tensor, make_string, normalize_band
from stringalg.presentations import bundled, kronecker

gp3 = bundled("gp3")
u = make_string(gp3, "a a b^- a")
v = make_string(gp3, "b^- a a b^- b^-")
print(u, "(x)", v)
print(cg_tensor(u, v).format("human"))

# Jordan blocks multiply like sl2 characters: sizes s+t-1, s+t-3, ...
jd = jordan_tensor(Fraction(2), 3, Fraction(1, 2), 3)
print("J_3(2) (x) J_3(1/2): eigenvalue", jd.eigenvalue, "sizes", jd.sizes)

# bands on the Kronecker quiver multiply eigenvalues and never produce strings
kr = kronecker()
b1 = normalize_band(kr, "(a b^-)", 2, 2)
b2 = normalize_band(kr, "(a b^-)", 3, 3)
print(b1, "(x)", b2)
print(cg_tensor(b1, b2).format("human"))

# a band against a string collapses to strings
print(cg_tensor(b1, make_string(kr, "a")).format("human"))
