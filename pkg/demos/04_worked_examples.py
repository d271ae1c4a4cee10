"""Closed-form examples worth checking by hand."""

import math

import numpy as np

import blockradius as br

# Two positive diagonal matrices. ||B+C|| = 5 exactly.
B = np.diag([4.0, 0.0])
C = np.diag([1.0, 2.0])
rep = br.bound_prop33(B, C)
print("||B^2 + C^2||       =", rep.components["norm_B2_C2"])
print("w(|B||C|)           =", rep.components["w_absB_absC"])
print("sqrt of the bound   =", math.sqrt(rep.value))
print("older bound         =", br.kittaneh2002_bound(B, C), "= 3 + sqrt(5) =", 3 + math.sqrt(5))
print("||B + C||           =", br.op_norm(B + C))

# B = I, C = -I satisfies the norm and radius equalities
# while ||B + C|| = 0 is far from ||B|| + ||C|| = 2
I = np.eye(2)
print()
print("||B^2+C^2|| =", br.op_norm(I @ I + I @ I))
print("w(|B||C|)   =", br.numerical_radius(br.matrix_abs(I) @ br.matrix_abs(-I)).estimate)
print("||B+C||     =", br.op_norm(I - I), " vs ||B||+||C|| =", 2 * br.op_norm(I))

# C = 0 makes the first- and second-power bounds exact
rng = np.random.default_rng(4)
B = rng.standard_normal((4, 4)) + 1j * rng.standard_normal((4, 4))
Z = np.zeros_like(B)
p = br.BlockPieces(B, Z)
print()
print("C = 0:  w =", p.w_S, " ||B||/2 =", br.op_norm(B) / 2, " th1 =", br.bound_th1_upper(B, Z, p).value)

# B = E12, C = E21 makes the first-power lower bound exact
E12 = np.array([[0, 1], [0, 0]], dtype=complex)
print("flip pair: th5 =", br.bound_th5_lower(E12, E12.T).value,
      " w =", br.numerical_radius(br.make_offdiag(E12, E12.T).assembled).estimate)
