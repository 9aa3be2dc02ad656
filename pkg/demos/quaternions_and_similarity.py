"""Quaternion arithmetic basics and similarity classes."""

from qctl import I, J, K, Quaternion, class_of, similar

p = Quaternion(1.0, 2.0, -1.0, 0.5)
q = Quaternion(0.0, 1.0, 1.0, 0.0)

print("p          =", p)
print("q          =", q)
print("p q        =", p * q)
print("q p        =", q * p)
print("conj(p q)  =", (p * q).conjugate())
print("conj q conj p =", q.conjugate() * p.conjugate())
print()

print("i j =", I * J, "   j i =", J * I, "   i j k =", I * J * K)
print()

# similarity: u q u^-1 runs over the whole class of q, which is pinned
# down by the real part and the norm of the imaginary part
u = Quaternion(0.5, -1.0, 2.0, 0.25)
rotated = u * q * u.inverse()
print("class of q        :", class_of(q))
print("class of u q u^-1 :", class_of(rotated))
print("similar?          :", similar(q, rotated))
print("norms             :", q.norm(), rotated.norm())
