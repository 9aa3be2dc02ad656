"""Seeded random generators shared by the test modules.

Leading coefficients are kept away from zero so division and Euclid
steps stay well conditioned; spectral content is kept moderate so
series comparisons do not overflow their tolerances.
"""

import numpy as np

from qctl import QPoly, Quaternion, QuatMatrix, StateSpace


def rng_for(seed: int) -> np.random.Generator:
    return np.random.default_rng(seed)


def rand_quat(rng, scale: float = 1.0) -> Quaternion:
    w, x, y, z = scale * (2.0 * rng.random(4) - 1.0)
    return Quaternion(w, x, y, z)


def rand_nonzero_quat(rng, floor: float = 0.5) -> Quaternion:
    while True:
        q = rand_quat(rng)
        if q.norm() >= floor:
            return q


def rand_unit_quat(rng) -> Quaternion:
    q = rand_nonzero_quat(rng, 0.3)
    n = q.norm()
    return Quaternion(q.w / n, q.x / n, q.y / n, q.z / n)


def rand_poly(rng, deg: int, lead_floor: float = 0.5) -> QPoly:
    """Random polynomial of exact degree deg with |lead| >= lead_floor."""
    cs = [rand_quat(rng) for _ in range(deg)]
    cs.append(rand_nonzero_quat(rng, lead_floor))
    return QPoly(cs)


def rand_causal_poly(rng, deg: int) -> QPoly:
    """Random polynomial of exact degree deg with constant term 1."""
    if deg == 0:
        return QPoly.one()
    cs = [Quaternion(1.0)] + [rand_quat(rng) for _ in range(deg - 1)]
    cs.append(rand_nonzero_quat(rng))
    return QPoly(cs)


def rand_stable_denominator(rng, deg: int, zero_floor: float = 1.05):
    """Denominator with den(0) = 1 whose zero classes have norms
    >= zero_floor, built as a product of linear factors."""
    from qctl import pmul, scale_left
    den = QPoly.one()
    for _ in range(deg):
        z = rand_quat(rng)
        n = z.norm()
        want = zero_floor + 1.5 * rng.random()
        if n < 1e-3:
            z = Quaternion(want)
            n = want
        z = Quaternion(*(v * want / n for v in z.components()))
        den = pmul(den, QPoly([z, Quaternion(-1.0)]))
    return scale_left(den.at0().inverse(), den)


def rand_matrix(rng, rows: int, cols: int, scale: float = 1.0) -> QuatMatrix:
    return QuatMatrix([[rand_quat(rng, scale) for _ in range(cols)]
                       for _ in range(rows)], cols=cols)


def rand_system(rng, n: int, radius: float = 1.0) -> StateSpace:
    """Random n-state system with the loop matrix scaled to spectral
    radius about ``radius``."""
    import numpy.linalg as la
    from qctl import complex_adjoint
    F = rand_matrix(rng, n, n)
    if n:
        eigs = la.eigvals(complex_adjoint(F))
        top = max(abs(eigs)) if len(eigs) else 0.0
        if top > 1e-9:
            s = radius / top
            F = QuatMatrix([[F[i, j] * s for j in range(n)]
                            for i in range(n)], cols=n)
    G = rand_matrix(rng, n, 1)
    H = rand_matrix(rng, 1, n)
    return StateSpace(F, G, H, rand_quat(rng))
