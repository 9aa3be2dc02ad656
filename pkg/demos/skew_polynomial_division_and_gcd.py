"""Division and greatest common divisors for polynomials with
quaternion coefficients.

Coefficients sit to the left of powers of d and do not commute, so
quotients and divisors come in left and right flavors.
"""

from qctl import I, J, K, QPoly, div_quotient_left, div_quotient_right, \
    gcld, gcrd, pmul

a = QPoly([1.0, I, J])        # 1 + i d + j d^2
b = QPoly([-K, 1.0])          # -k + d

q, r = div_quotient_right(a, b)
print("a =", a)
print("b =", b)
print("right division a = b q + r:")
print("  q =", q)
print("  r =", r)
print("  check:", (pmul(b, q) + r - a).norm_inf())

q, r = div_quotient_left(a, b)
print("left division a = q b + r:")
print("  q =", q)
print("  r =", r)
print("  check:", (pmul(q, b) + r - a).norm_inf())
print()

# plant a common left divisor and recover it
g = QPoly([1.0, I])
a = pmul(g, QPoly([J, 1.0]))
b = pmul(g, QPoly([1.0, K]))
data = gcld(a, b)
print("planted left divisor:", g)
print("computed gcld       :", data.g)
print("bezout residual     :",
      (pmul(a, data.p) + pmul(b, data.q) - data.g).norm_inf())
print("kernel residual     :",
      (pmul(a, data.u) + pmul(b, data.v)).norm_inf())

# and the mirrored right-divisor story
a = pmul(QPoly([J, 1.0]), g)
b = pmul(QPoly([1.0, K]), g)
print("computed gcrd       :", gcrd(a, b).g)
