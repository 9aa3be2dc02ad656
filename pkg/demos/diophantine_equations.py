"""Solving a x + b y = c over skew polynomials.

The solvability test runs through the greatest common left divisor;
solutions form an affine family along the kernel, and kernel division
picks out the member with minimal-degree x (or y).
"""

from qctl import I, J, K, QPoly, Unsolvable, pmul, solve_diophantine

a = QPoly([1.0, I, J])
b = QPoly([0.0, 1.0, K])
c = QPoly([2.0, -1.0, 0.0, 1.0])

for mode in ("particular", "minimal_x", "minimal_y"):
    sol = solve_diophantine(a, b, c, mode=mode)
    resid = (pmul(a, sol.x) + pmul(b, sol.y) - c).norm_inf()
    print(f"{mode}:")
    print("  x =", sol.x)
    print("  y =", sol.y)
    print("  deg x =", sol.x.degree(), " deg y =", sol.y.degree(),
          " residual =", f"{resid:.2e}")
print()

# the whole solution family: shift by any t along the kernel steps
sol = solve_diophantine(a, b, c, mode="minimal_x")
t = QPoly([K, 1.0])
xs, ys = sol.shifted(t)
resid = (pmul(a, xs) + pmul(b, ys) - c).norm_inf()
print("shifted solution residual:", f"{resid:.2e}")
print()

# insolvable: a and b share a left factor that c lacks
g = QPoly([1.0, I])
a = pmul(g, QPoly([J, 1.0]))
b = pmul(g, QPoly([1.0, K]))
try:
    solve_diophantine(a, b, QPoly([0.5]))
except Unsolvable as exc:
    print("unsolvable, as expected")
    print("  obstruction divisor:", exc.g)
    print("  division remainder :", exc.remainder)
