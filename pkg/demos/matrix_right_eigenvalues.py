"""Right eigenvalues of quaternion matrices via the complex adjoint."""

import numpy as np

from qctl import I, J, K, ONE, QuatMatrix, complex_adjoint, \
    right_eigenvalues, spectral_radius_stable

F = QuatMatrix([[ONE, I], [J, K]])

print("F =")
for i in range(2):
    print("  ", [str(F[i, j]) for j in range(2)])
print()

M = complex_adjoint(F)
print("complex adjoint (4 x 4):")
print(np.array_str(M, precision=3))
print()

spectrum = right_eigenvalues(F)
print("right eigenvalue classes:")
for cls in spectrum:
    print("  ", cls, " norm", f"{cls.norm():.6f}")
print()
print("spectral radius stable (needs all norms < 1):",
      spectral_radius_stable(F))
print("scaled by 0.5:",
      spectral_radius_stable(QuatMatrix(
          [[0.5 * F[i, j] for j in range(2)] for i in range(2)])))
