"""Principal tensor ideals and a brute-force closure."""

from fractions import Fraction

from stringalg.decompose import make_string, normalize_band
from stringalg.ideals import closure_matches, eigenvalue_window, principal_ideal, tensor_closure
from stringalg.presentations import bundled, kronecker

gp3 = bundled("gp3")
x = make_string(gp3, "a b^-")
ideal = principal_ideal(x, 3)
print(ideal.describe())

# closing {x} under tensoring with everything small gives the same set
window = eigenvalue_window(1)
closure = tensor_closure(x, 3, eigenvalues=window)
print("closure rounds:", closure.rounds, "agrees:", closure_matches(ideal, closure, window))

# a band generates every band on its shape
kr = kronecker()
b = normalize_band(kr, "(a b^-)", Fraction(3), 1)
print(principal_ideal(b, 2).describe())
