"""Every bound on one random pair, next to the quantity it bounds."""

import numpy as np

import blockradius as br

rng = np.random.default_rng(3)
B = rng.standard_normal((3, 3)) + 1j * rng.standard_normal((3, 3))
C = rng.standard_normal((3, 3)) + 1j * rng.standard_normal((3, 3))

# one BlockPieces instance shares norms and inner radii between the bounds
p = br.BlockPieces(B, C)
w = p.w_S
print(f"w(S) = {w:.10f}\n")

reports = [
    br.bound_th5_lower(B, C, p),
    br.bound_th1_upper(B, C, p),
    br.bound_th1eqn_upper(B, C, p),
    br.bound_th3_lower_sq(B, C, p),
    br.bound_th4_lower_sq(B, C, p),
    br.bound_th6_lower_sq(B, C, p),
    br.bound_th2_upper_sq(B, C, p),
    *(br.bound_th7_upper_4(B, C, a, p) for a in br.ALPHA_GRID),
]
for r in reports:
    target = w**r.exponent
    side = "<=" if r.kind is br.BoundKind.UPPER else ">="
    alpha = "" if r.alpha is None else f" (alpha={r.alpha})"
    print(f"w^{r.exponent} = {target:10.5f} {side} {r.value:10.5f}  {r.name}{alpha}")

# intermediate quantities are kept for diagnosis
print("\nth1 components:", br.bound_th1_upper(B, C, p).components)

# the full 2 x 2 block: the refined bound never exceeds the older one
A, D = rng.standard_normal((3, 3)), rng.standard_normal((3, 3))
for a in (0.0, 0.5, 1.0):
    th25 = br.bound_th25_upper_4(A, B, C, D, a, p).value
    bk21 = br.bound_bk21_upper_4(A, B, C, D, a, p).value
    print(f"alpha={a}: th25 = {th25:.4f} <= bk21 = {bk21:.4f}")
