"""From state space to polynomial fractions and back.

A SISO system has a left fraction den^-1 num and a right fraction
num den^-1 in the delay d; over the quaternions the two have different
coefficients but the same impulse response.
"""

from qctl import I, J, K, ONE, ZERO, QuatMatrix, StateSpace, markov, \
    realize, series, tf_left, tf_right, fraction_equal

plant = StateSpace(QuatMatrix([[ONE, I], [J, K]]),
                   QuatMatrix([[I], [ZERO]]),
                   QuatMatrix([[ONE, ZERO]]),
                   ZERO)

lf = tf_left(plant)
rf = tf_right(plant)
print("left fraction:")
print("  den:", lf.den)
print("  num:", lf.num)
print("right fraction:")
print("  den:", rf.den)
print("  num:", rf.num)
print("equal as transfer maps:", fraction_equal(lf, rf))
print()

ms = markov(plant, 6)
ss = series(lf, 6)
print("Markov parameters vs series of the left fraction:")
for k, (m, s) in enumerate(zip(ms, ss)):
    print(f"  k={k}:  {m}   |diff| = {(m - s).norm():.2e}")
print()

back = realize(lf)
print("realized from the fraction:", back.n, "states")
again = markov(back, 6)
print("worst Markov mismatch:",
      max((u - v).norm() for u, v in zip(ms, again)))
