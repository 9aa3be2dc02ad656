"""Right zeros of quaternionic polynomials: isolated and spherical."""

from qctl import I, QPoly, Quaternion, eval_right, is_stable, pmul, \
    right_zeros

# two real zeros
a = QPoly([12.0, -7.0, 1.0])
print("a =", a)
report = right_zeros(a)
for z, cls in report.isolated:
    print("  isolated zero", z, "in class", cls)
print("  stable (all zeros outside the unit circle):", is_stable(a))
print()

# a quaternionic pair: the factor zeros live in two distinct classes
x1 = Quaternion(1.0, 2.0, 0.0, 0.0)
x2 = Quaternion(-0.5, 0.0, 1.5, 0.0)
b = pmul(QPoly([-x1, 1.0]), QPoly([-x2, 1.0]))
print("b = (d - x1)(d - x2) with x1 =", x1, ", x2 =", x2)
for z, cls in right_zeros(b).isolated:
    print("  zero", z, " residual", f"{eval_right(b, z).norm():.2e}")
print()

# d^2 + 1 vanishes on the whole unit imaginary sphere
c = QPoly([1.0, 0.0, 1.0])
print("c =", c)
report = right_zeros(c)
print("  spherical classes:", report.spherical)
member = Quaternion(0.0, 0.6, 0.8, 0.0)
print("  sample member", member, "evaluates to",
      eval_right(c, member))
print("  stable:", is_stable(c), " (unit-norm zeros are not stable)")
