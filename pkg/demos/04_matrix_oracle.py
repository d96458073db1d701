"""Checking a decomposition against explicit matrices."""

from stringalg.decompose import cg_tensor, make_string, normalize_band
from stringalg.oracle import hom_dim, jordan_type, push_down_band, push_down_string, tensor_rep, verify_decomposition
from stringalg.presentations import bundled, kronecker
from stringalg.linalg import RationalMatrix

gp3 = bundled("gp3")
u = make_string(gp3, "a a b^- a")
v = make_string(gp3, "b^- a a b^- b^-")

# push-downs give the modules as matrices; the tensor is arrow-wise Kronecker
M, N = push_down_string(u.shape), push_down_string(v.shape)
T = tensor_rep(M, N)
print("dim", M.dimension, "x", N.dimension, "=", T.dimension)
print("dim End(T) =", hom_dim(T, T))

report = verify_decomposition(u, v, cg_tensor(u, v))
print(report)

# Jordan type read off ranks of (A - lam)^k
A = RationalMatrix.jordan_block(2, 3).kron(RationalMatrix.jordan_block(3, 2))
print("J_3(2) (x) J_2(3):", jordan_type(A, 6))

kr = kronecker()
B = push_down_band(normalize_band(kr, "(a b^-)", 2, 2).shape, 2, 2)
for arrow, m in B.mats.items():
    print(arrow, [[str(c) for c in row] for row in m.to_rows()])
