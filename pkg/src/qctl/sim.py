"""Time-domain simulation of quaternionic state-space systems.

Random initial states come from a self-contained 64-bit linear
congruential generator so runs are reproducible across platforms:

    s <- (6364136223846793005 s + 1442695040888963407) mod 2^64

advanced once per draw, with the top 53 bits mapped to [0, 1) and then
to [-1, 1).  Components are drawn in w, x, y, z order, states in row
order.
"""

from __future__ import annotations

from .errors import DimensionMismatch, IllPosedLoop
from .quat import Quaternion, _coerce
from .qmat import QuatMatrix, add, matmul

_LCG_MUL = 6364136223846793005
_LCG_INC = 1442695040888963407
_MASK64 = (1 << 64) - 1


class Lcg:
    """Deterministic 64-bit linear congruential generator."""

    __slots__ = ("state",)

    def __init__(self, seed: int):
        self.state = seed & _MASK64

    def next_unit(self) -> float:
        """Advance and return a float in [0, 1) from the top 53 bits."""
        self.state = (_LCG_MUL * self.state + _LCG_INC) & _MASK64
        return (self.state >> 11) / float(1 << 53)

    def next_component(self) -> float:
        """Uniform on [-1, 1)."""
        return 2.0 * self.next_unit() - 1.0


def random_state(n: int, seed: int) -> QuatMatrix:
    """Seeded random n x 1 state with components uniform on [-1, 1)."""
    gen = Lcg(seed)
    rows = []
    for _ in range(n):
        c = [gen.next_component() for _ in range(4)]
        rows.append([Quaternion(c[0], c[1], c[2], c[3])])
    return QuatMatrix(rows, cols=1) if n else QuatMatrix.zeros(0, 1)


def _as_column(x, n):
    col = x if isinstance(x, QuatMatrix) else QuatMatrix(
        [[v] for v in x] if n else [], cols=1)
    if col.rows != n or col.cols != 1:
        raise DimensionMismatch(f"state must be {n} x 1")
    return col


def _input(seq, k):
    if seq is None or k >= len(seq):
        return Quaternion()
    return _coerce(seq[k])


def simulate(ss, x0, u, steps: int):
    """Outputs y(0..steps-1) of x(k+1) = F x(k) + G u(k),
    y(k) = H x(k) + J u(k).

    ``u`` may be None (zero input) or a sequence, zero-extended past
    its end.
    """
    x = _as_column(x0, ss.n)
    ys = []
    for k in range(steps):
        uk = _input(u, k)
        hx = matmul(ss.H, x)[0, 0]
        ys.append(hx + ss.J * uk)
        x = add(matmul(ss.F, x), _scaled_column(ss.G, uk))
    return ys


def _scaled_column(g: QuatMatrix, u: Quaternion) -> QuatMatrix:
    return QuatMatrix([[g[i, 0] * u] for i in range(g.rows)], cols=1)


def simulate_feedback(plant, controller, x0_plant, x0_ctrl, v, w,
                      steps: int):
    """Outputs of the loop y = (plant) u + w with u = v - (controller) y.

    Each step solves the static part
        (1 + J_p J_c) y = H_p x_p + J_p (v(k) - H_c x_c) + w(k)
    for y, forms u(k) = v(k) - (H_c x_c + J_c y), then advances both
    states.  Raises IllPosedLoop when 1 + J_p J_c is not invertible.
    """
    gain = Quaternion(1.0) + plant.J * controller.J
    if gain.norm() <= 1e-12 * (1.0 + plant.J.norm() * controller.J.norm()):
        raise IllPosedLoop("1 + J_plant J_ctrl is not invertible")
    gain_inv = gain.inverse()
    xp = _as_column(x0_plant, plant.n)
    xc = _as_column(x0_ctrl, controller.n)
    ys = []
    for k in range(steps):
        vk, wk = _input(v, k), _input(w, k)
        yc = matmul(controller.H, xc)[0, 0]
        yp = matmul(plant.H, xp)[0, 0]
        y = gain_inv * (yp + plant.J * (vk - yc) + wk)
        u = vk - (yc + controller.J * y)
        xp = add(matmul(plant.F, xp), _scaled_column(plant.G, u))
        xc = add(matmul(controller.F, xc), _scaled_column(controller.G, y))
        ys.append(y)
    return ys
