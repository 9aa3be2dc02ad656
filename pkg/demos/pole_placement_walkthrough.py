"""Full pole-placement walkthrough on a 2-state quaternionic plant.

Steps: eigenvalues of the open loop, left fraction of the plant,
controller from the Diophantine equation, closed-loop transfer
functions and realization, and a simulated response written to CSV
and SVG next to this script.
"""

import os

from qctl import I, J, K, ONE, ZERO, QuatMatrix, StateSpace, markov, \
    place_poles, random_state, realize, right_eigenvalues, right_zeros, \
    series, simulate, simulate_feedback, tf_left
from qctl.cli import _csv_text, _svg_text

plant = StateSpace(QuatMatrix([[ONE, I], [J, K]]),
                   QuatMatrix([[I], [ZERO]]),
                   QuatMatrix([[ONE, ZERO]]),
                   ZERO)

print("open-loop right eigenvalue classes:")
for cls in right_eigenvalues(plant.F):
    print("  ", cls, " norm", f"{cls.norm():.5f}")
print("norms exceed 1, so the raw plant diverges")
print()

lf = tf_left(plant)
print("plant left fraction:")
print("  den:", lf.den)
print("  num:", lf.num)
print()

res = place_poles(plant, [3.0, 4.0])
print("target c:", res.c)
print("controller p:", res.p)
print("controller q:", res.q)
print()

print("closed-loop denominator:", res.t_w.den)
for z, cls in right_zeros(res.t_w.den).isolated:
    print("  zero class:", cls)
print("closed-loop spectrum:")
for cls in right_eigenvalues(res.closed_loop.F):
    print("  ", cls)
print("stable:", res.stable)
print()

# impulse equivalence: the realized loop reproduces the designed map
want = series(res.t_w, 8)
got = markov(res.closed_loop, 8)
print("realization Markov error:",
      max((u - v).norm() for u, v in zip(want, got)))

# free response from a seeded random initial state
steps, seed = 40, 7
ys = simulate(res.closed_loop, random_state(res.closed_loop.n, seed),
              None, steps)
norms = [y.norm() for y in ys]
print(f"free response: peak {max(norms):.4f}, "
      f"final {norms[-1]:.2e}")

here = os.path.dirname(os.path.abspath(__file__))
csv_path = os.path.join(here, "closed_loop_response.csv")
svg_path = os.path.join(here, "closed_loop_response.svg")
with open(csv_path, "w", newline="") as fh:
    fh.write(_csv_text(ys))
with open(svg_path, "w", newline="") as fh:
    fh.write(_svg_text(ys))
print("wrote", csv_path)
print("wrote", svg_path)

# the same loop driven through the actual feedback interconnection
ctrl = realize(res.controller)
ys2 = simulate_feedback(plant, ctrl,
                        QuatMatrix.zeros(plant.n, 1),
                        QuatMatrix.zeros(ctrl.n, 1),
                        [1.0], None, 10)
ref = series(res.t_v, 10)
print("feedback loop vs designed response:",
      max((u - v).norm() for u, v in zip(ys2, ref)))
