"""Certified numerical radii of a few small matrices."""

import numpy as np

from blockradius import numerical_radius, numerical_radius_vector_oracle, op_norm, spectral_radius_general

np.set_printoptions(precision=6, suppress=True)

# A nilpotent shift. Its numerical range is the disk of radius 1/2.
N = np.array([[0, 1], [0, 0]], dtype=complex)
cert = numerical_radius(N, tol=1e-10)
print("shift:  w =", cert.estimate, " enclosure width =", cert.width)
print("        witness x =", cert.witness_vector, " |<Nx,x>| =", abs(np.vdot(cert.witness_vector, N @ cert.witness_vector)))

# w sits between half the norm and the norm, and above the spectral radius
rng = np.random.default_rng(1)
A = (rng.standard_normal((4, 4)) + 1j * rng.standard_normal((4, 4))) / np.sqrt(2)
cert = numerical_radius(A)
print()
print("random 4x4:")
print("  r(A)     =", spectral_radius_general(A))
print("  ||A||/2  =", op_norm(A) / 2)
print("  w(A) in [", cert.lower_witness, ",", cert.upper_certificate, "]")
print("  ||A||    =", op_norm(A))

# The gradient-ascent oracle only gives a lower bound, but it should land on w
print("  oracle   =", numerical_radius_vector_oracle(A, restarts=32, seed=0))

# Cost depends on the shape of the numerical range. Near-circular ranges need
# many angles because every polygon corner overshoots the arc.
for name, M in [("hermitian", A + A.conj().T), ("random", A), ("near-disk", np.array([[0, 3j], [1e-9j, 0]]))]:
    c = numerical_radius(M, tol=1e-9)
    print(f"{name:>10}: {c.evaluations:>7} support-function evaluations")
