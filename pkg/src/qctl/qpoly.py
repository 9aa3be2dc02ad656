"""Skew polynomials over H in the central indeterminate d.

The indeterminate commutes with every coefficient, but coefficients do
not commute with each other, so divisions, divisors, and evaluations all
come in left and right flavors.  Coefficients are stored ascending by
power; index i holds the coefficient of d^i.

Numerical conventions: comparisons against zero use a caller tolerance
scaled by the infinity norm (largest coefficient norm) of the operands,
default 1e-9.
"""

from __future__ import annotations

import math

import numpy as np

from .errors import BothZero, EigensolverFailure, IllConditioned, ZeroDivisor
from .quat import (Quaternion, SimilarityClass, class_of, _coerce,
                   ZERO_THRESHOLD)

COEFF_TOL = 1e-9

NEG_INF = float("-inf")


class QPoly:
    """Polynomial sum a_i d^i with quaternion coefficients.

    Construction trims trailing exact zeros; use :meth:`trim` for
    tolerance-based trimming after floating-point arithmetic.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [_coerce(c) for c in coeffs]
        while cs and cs[-1].norm2() == 0.0:
            cs.pop()
        self.coeffs = tuple(cs)

    @staticmethod
    def zero() -> "QPoly":
        return QPoly()

    @staticmethod
    def one() -> "QPoly":
        return QPoly([Quaternion(1.0)])

    @staticmethod
    def constant(q) -> "QPoly":
        return QPoly([q])

    @staticmethod
    def monomial(q, power: int) -> "QPoly":
        return QPoly([Quaternion()] * power + [_coerce(q)])

    def degree(self):
        """Degree as an int, or -inf for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def is_zero(self) -> bool:
        return not self.coeffs

    def at0(self) -> Quaternion:
        return self.coeffs[0] if self.coeffs else Quaternion()

    def lead(self) -> Quaternion:
        if not self.coeffs:
            raise ZeroDivisor("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def coeff(self, i: int) -> Quaternion:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else Quaternion()

    def norm_inf(self) -> float:
        return max((c.norm() for c in self.coeffs), default=0.0)

    def trim(self, tol: float, scale: float = None) -> "QPoly":
        """Drop trailing coefficients of norm <= tol * scale.

        ``scale`` defaults to this polynomial's own infinity norm; pass
        the norm of the originating operands when trimming arithmetic
        results.
        """
        if scale is None:
            scale = max(1.0, self.norm_inf())
        cut = tol * scale
        cs = list(self.coeffs)
        while cs and cs[-1].norm() <= cut:
            cs.pop()
        return QPoly(cs)

    def __add__(self, other):
        n = max(len(self.coeffs), len(other.coeffs))
        return QPoly([self.coeff(i) + other.coeff(i) for i in range(n)])

    def __sub__(self, other):
        n = max(len(self.coeffs), len(other.coeffs))
        return QPoly([self.coeff(i) - other.coeff(i) for i in range(n)])

    def __neg__(self):
        return QPoly([-c for c in self.coeffs])

    def __mul__(self, other):
        if not isinstance(other, QPoly):
            return NotImplemented
        return mul(self, other)

    def __eq__(self, other):
        if not isinstance(other, QPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __repr__(self):
        if not self.coeffs:
            return "QPoly(0)"
        parts = []
        for i, c in enumerate(self.coeffs):
            parts.append(f"({c.w:g},{c.x:g},{c.y:g},{c.z:g})d^{i}")
        return "QPoly[" + " + ".join(parts) + "]"


def add(a: QPoly, b: QPoly) -> QPoly:
    return a + b


def mul(a: QPoly, b: QPoly) -> QPoly:
    """Product with coefficient products taken in left-right order:
    (a b)_k = sum a_i b_j over i + j = k."""
    if a.is_zero() or b.is_zero():
        return QPoly()
    out = [Quaternion() for _ in range(len(a.coeffs) + len(b.coeffs) - 1)]
    for i, ai in enumerate(a.coeffs):
        for j, bj in enumerate(b.coeffs):
            out[i + j] = out[i + j] + ai * bj
    return QPoly(out)


def scale_left(q, a: QPoly) -> QPoly:
    """q * a, the scalar multiplying every coefficient from the left."""
    q = _coerce(q)
    return QPoly([q * c for c in a.coeffs])


def scale_right(a: QPoly, q) -> QPoly:
    """a * q with the scalar on the right of every coefficient."""
    q = _coerce(q)
    return QPoly([c * q for c in a.coeffs])


def degree(a: QPoly):
    return a.degree()


def normalize(a: QPoly, tol: float = 0.0, scale: float = None) -> QPoly:
    """Trim near-zero trailing coefficients so the leading one is
    genuinely nonzero."""
    return a.trim(tol, scale) if tol > 0 else QPoly(a.coeffs)


def shift(a: QPoly, k: int) -> QPoly:
    """Multiply by d^k (k >= 0)."""
    if a.is_zero():
        return QPoly()
    return QPoly([Quaternion()] * k + list(a.coeffs))


def eval_right(a: QPoly, q) -> Quaternion:
    """Right evaluation sum a_i q^i, coefficients left of the powers.
    A right zero is a point where this vanishes."""
    q = _coerce(q)
    acc = Quaternion()
    for c in reversed(a.coeffs):
        acc = c + acc * q
    return acc


def eval_left(a: QPoly, q) -> Quaternion:
    """Left evaluation sum q^i a_i, powers left of the coefficients."""
    q = _coerce(q)
    acc = Quaternion()
    for c in reversed(a.coeffs):
        acc = c + q * acc
    return acc


def _eval_scale(a: QPoly, x: float) -> float:
    """Conditioning scale for evaluation residuals: sum |a_i| max(1,|x|)^i."""
    base = max(1.0, x)
    s = 0.0
    p = 1.0
    for c in a.coeffs:
        s += c.norm() * p
        p *= base
    return max(1.0, s)


def div_quotient_right(a: QPoly, b: QPoly):
    """Divide with the quotient on the right: a = b q + r, deg r < deg b.

    The top coefficient is eliminated by q_top = inverse(lead b) * lead a,
    so common LEFT divisors of a and b also left-divide r.  Raises
    ZeroDivisor when b = 0.
    """
    if b.is_zero():
        raise ZeroDivisor("division by the zero polynomial")
    if a.degree() < b.degree():
        return QPoly(), QPoly(a.coeffs)
    lead_inv = b.lead().inverse()
    db = b.degree()
    rem = list(a.coeffs)
    qcoeffs = [Quaternion() for _ in range(len(a.coeffs) - db)]
    for top in range(len(rem) - 1, db - 1, -1):
        t = lead_inv * rem[top]
        qcoeffs[top - db] = t
        # subtract b * (t d^(top-db)); the top term cancels exactly
        for i in range(db):
            rem[top - db + i] = rem[top - db + i] - b.coeffs[i] * t
        rem[top] = Quaternion()
    return QPoly(qcoeffs), QPoly(rem[:db])


def div_quotient_left(a: QPoly, b: QPoly):
    """Divide with the quotient on the left: a = q b + r, deg r < deg b.

    Elimination uses q_top = lead a * inverse(lead b); common RIGHT
    divisors of a and b right-divide r.
    """
    if b.is_zero():
        raise ZeroDivisor("division by the zero polynomial")
    if a.degree() < b.degree():
        return QPoly(), QPoly(a.coeffs)
    lead_inv = b.lead().inverse()
    db = b.degree()
    rem = list(a.coeffs)
    qcoeffs = [Quaternion() for _ in range(len(a.coeffs) - db)]
    for top in range(len(rem) - 1, db - 1, -1):
        t = rem[top] * lead_inv
        qcoeffs[top - db] = t
        for i in range(db):
            rem[top - db + i] = rem[top - db + i] - t * b.coeffs[i]
        rem[top] = Quaternion()
    return QPoly(qcoeffs), QPoly(rem[:db])


class BezoutData:
    """Extended Euclid output for one side.

    For side "left" (gcld): a p + b q = g and a u + b v = 0, cofactors
    multiplied on the right of a and b.  For side "right" (gcrd) the
    identities mirror: p a + q b = g and u a + v b = 0.
    """

    __slots__ = ("g", "p", "q", "u", "v", "side")

    def __init__(self, g, p, q, u, v, side):
        self.g = g
        self.p = p
        self.q = q
        self.u = u
        self.v = v
        self.side = side

    def __repr__(self):
        return f"BezoutData(side={self.side!r}, deg g={self.g.degree()})"


def gcld(a: QPoly, b: QPoly, tol: float = COEFF_TOL) -> BezoutData:
    """Greatest common left divisor via the Euclidean algorithm with
    right quotients.

    Maintains r_i = a p_i + b q_i (cofactors updated on the right, since
    r_{i+1} = r_{i-1} - r_i quo).  On termination g is normalized monic
    by a right unit, which keeps it a left divisor of both inputs.  The
    final cofactor pair gives the kernel: a u + b v = 0 with (u, -v)
    right coprime.
    """
    if a.is_zero() and b.is_zero():
        raise BothZero("gcld(0, 0) is undefined")
    scale = max(1.0, a.norm_inf(), b.norm_inf())
    r0, r1 = QPoly(a.coeffs), QPoly(b.coeffs).trim(tol, scale)
    p0, q0 = QPoly.one(), QPoly.zero()
    p1, q1 = QPoly.zero(), QPoly.one()
    while not r1.is_zero():
        quo, rem = div_quotient_right(r0, r1)
        rem = rem.trim(tol, scale)
        p0, p1 = p1, (p0 - p1 * quo)
        q0, q1 = q1, (q0 - q1 * quo)
        r0, r1 = r1, rem
    unit = r0.lead().inverse()
    return BezoutData(scale_right(r0, unit),
                      scale_right(p0, unit), scale_right(q0, unit),
                      p1, q1, "left")


def gcrd(a: QPoly, b: QPoly, tol: float = COEFF_TOL) -> BezoutData:
    """Greatest common right divisor; mirror of :func:`gcld` with left
    quotients and left-multiplied cofactors: p a + q b = g, u a + v b = 0."""
    if a.is_zero() and b.is_zero():
        raise BothZero("gcrd(0, 0) is undefined")
    scale = max(1.0, a.norm_inf(), b.norm_inf())
    r0, r1 = QPoly(a.coeffs), QPoly(b.coeffs).trim(tol, scale)
    p0, q0 = QPoly.one(), QPoly.zero()
    p1, q1 = QPoly.zero(), QPoly.one()
    while not r1.is_zero():
        quo, rem = div_quotient_left(r0, r1)
        rem = rem.trim(tol, scale)
        p0, p1 = p1, (p0 - quo * p1)
        q0, q1 = q1, (q0 - quo * q1)
        r0, r1 = r1, rem
    unit = r0.lead().inverse()
    return BezoutData(scale_left(unit, r0),
                      scale_left(unit, p0), scale_left(unit, q0),
                      p1, q1, "right")


def left_to_right(a: QPoly, b: QPoly, tol: float = COEFF_TOL):
    """Convert the left fraction a^{-1} b into a right fraction
    b_r a_r^{-1}.

    The kernel cofactors of gcld(a, b) satisfy a u + b v = 0, so
    a^{-1} b = u (-v)^{-1}; the pair (b_r, a_r) = (u, -v) is right
    coprime with deg a_r <= deg a and deg b_r <= deg b.  Both are
    rescaled by a right unit so a_r(0) = 1 (monic when a_r(0) = 0).
    """
    if a.is_zero():
        raise ZeroDivisor("left fraction needs a nonzero denominator")
    data = gcld(a, b, tol)
    b_r, a_r = data.u, -data.v
    scale = max(1.0, a_r.norm_inf(), b_r.norm_inf())
    c0 = a_r.at0()
    unit = c0.inverse() if c0.norm() > tol * scale else a_r.lead().inverse()
    return scale_right(b_r, unit), scale_right(a_r, unit)


def right_to_left(b: QPoly, a: QPoly, tol: float = COEFF_TOL):
    """Convert the right fraction b a^{-1} into a left fraction
    a_l^{-1} b_l, i.e. b_l a = a_l b.

    Mirror of :func:`left_to_right` through the gcrd kernel: from
    u a + v b = 0 take (a_l, b_l) = (-v, u), normalized by a left unit
    so a_l(0) = 1 (monic when a_l(0) = 0).
    """
    if a.is_zero():
        raise ZeroDivisor("right fraction needs a nonzero denominator")
    data = gcrd(a, b, tol)
    b_l, a_l = data.u, -data.v
    scale = max(1.0, a_l.norm_inf(), b_l.norm_inf())
    c0 = a_l.at0()
    unit = c0.inverse() if c0.norm() > tol * scale else a_l.lead().inverse()
    return scale_left(unit, a_l), scale_left(unit, b_l)


def companion_polynomial(a: QPoly) -> QPoly:
    """conj(a) a, which has real coefficients and degree 2 deg a.

    Every right zero of a lies in the similarity class of one of its
    roots.  Coefficients are assembled pairwise as 2 Re(conj(a_i) a_j),
    so they are exactly real by construction.
    """
    if a.is_zero():
        raise ZeroDivisor("companion of the zero polynomial")
    n = len(a.coeffs)
    out = [0.0] * (2 * n - 1)
    for i in range(n):
        ci = a.coeffs[i]
        out[2 * i] += ci.norm2()
        for j in range(i + 1, n):
            cj = a.coeffs[j]
            # Re(conj(ci) cj) doubled covers the (i,j) and (j,i) terms
            out[i + j] += 2.0 * (ci.w * cj.w + ci.x * cj.x
                                 + ci.y * cj.y + ci.z * cj.z)
    return QPoly([Quaternion(v) for v in out])


class ZeroReport:
    """Right zeros of a polynomial.

    isolated: list of (zero, class) pairs.  spherical: classes whose
    every member is a right zero (im_norm > 0 always).  warnings: notes
    about candidates accepted inside the ill-conditioning band.
    """

    __slots__ = ("isolated", "spherical", "warnings")

    def __init__(self, isolated, spherical, warnings=()):
        self.isolated = list(isolated)
        self.spherical = list(spherical)
        self.warnings = list(warnings)

    def all_classes(self):
        return [cls for _, cls in self.isolated] + list(self.spherical)

    def __repr__(self):
        return (f"ZeroReport(isolated={len(self.isolated)}, "
                f"spherical={len(self.spherical)})")


def _cluster_classes(roots, tol):
    """Group complex roots by similarity class (re, |im|)."""
    reps = sorted((r.real, abs(r.imag)) for r in roots)
    classes = []
    for re, im in reps:
        merged = False
        for idx, (cre, cim, cnt) in enumerate(classes):
            scale = max(1.0, math.hypot(re, im), math.hypot(cre, cim))
            if abs(re - cre) <= tol * scale and abs(im - cim) <= tol * scale:
                # running mean keeps the representative centered
                classes[idx] = ((cre * cnt + re) / (cnt + 1),
                                (cim * cnt + im) / (cnt + 1), cnt + 1)
                merged = True
                break
        if not merged:
            classes.append((re, im, 1))
    return [(re, im) for re, im, _ in classes]


def right_zeros(a: QPoly, tol: float = COEFF_TOL) -> ZeroReport:
    """All right zeros of a, isolated and spherical.

    Procedure: roots of the companion polynomial give the candidate
    similarity classes.  For a class with nonzero imaginary norm, divide
    a by the central quadratic psi(d) = d^2 - 2 re d + (re^2 + im^2);
    a vanishing remainder means the whole class consists of zeros
    (spherical), otherwise the remainder r_1 d + r_0 pins the single
    zero in the class at x = -inverse(r_1) r_0.  Real classes are
    checked by direct evaluation.

    Candidates whose class check misses by a factor in (1, 1e3] of the
    tolerance are kept but noted in ``warnings``; beyond that the
    polynomial is reported IllConditioned rather than silently wrong.
    """
    if a.is_zero():
        raise ValueError("right_zeros of the zero polynomial")
    if a.degree() < 1:
        return ZeroReport([], [])
    comp = companion_polynomial(a)
    coeffs_desc = [c.w for c in reversed(comp.coeffs)]
    try:
        roots = np.roots(coeffs_desc)
    except np.linalg.LinAlgError as exc:
        raise EigensolverFailure(str(exc)) from exc

    cluster_tol = max(1e-6, 10.0 * tol)
    isolated, spherical, warnings = [], [], []
    a_scale = max(1.0, a.norm_inf())
    for re, im in _cluster_classes(roots, cluster_tol):
        scale_c = max(1.0, math.hypot(re, im))
        if im <= cluster_tol * scale_c:
            # real class: a single candidate point, validated directly
            z = Quaternion(re)
            resid = eval_right(a, z).norm()
            if resid <= tol * _eval_scale(a, abs(re)):
                isolated.append((z, SimilarityClass(re, 0.0)))
            elif resid <= 1e3 * tol * _eval_scale(a, abs(re)):
                isolated.append((z, SimilarityClass(re, 0.0)))
                warnings.append(
                    f"real zero {re:.6g} accepted with residual {resid:.3g}")
            continue
        psi = QPoly([Quaternion(re * re + im * im), Quaternion(-2.0 * re),
                     Quaternion(1.0)])
        _, rem = div_quotient_right(a, psi)
        r0, r1 = rem.coeff(0), rem.coeff(1)
        if r0.norm() <= tol * a_scale and r1.norm() <= tol * a_scale:
            spherical.append(SimilarityClass(re, im))
            continue
        if r1.norm() <= tol * a_scale:
            # algebraically impossible for a genuine companion class
            raise IllConditioned(
                f"degenerate remainder for class ({re:.6g}, {im:.6g})")
        x = -(r1.inverse() * r0)
        xs = max(1.0, x.norm())
        miss = max(abs(x.w - re), abs(x.imag_norm() - im)) / xs
        if miss <= tol:
            isolated.append((x, SimilarityClass(re, im)))
        elif miss <= 1e3 * tol:
            isolated.append((x, SimilarityClass(re, im)))
            warnings.append(
                f"zero in class ({re:.6g}, {im:.6g}) accepted with "
                f"class mismatch {miss:.3g}")
        else:
            raise IllConditioned(
                f"candidate zero strays from class ({re:.6g}, {im:.6g}) "
                f"by {miss:.3g}")
    return ZeroReport(isolated, spherical, warnings)


def is_stable(a: QPoly, tol: float = 1e-9) -> bool:
    """Stability in the backward-shift variable: every right zero
    (isolated or spherical) must have norm > 1 + tol.  Nonzero constants
    are vacuously stable."""
    if a.is_zero():
        raise ValueError("stability of the zero polynomial is undefined")
    if a.degree() < 1:
        return True
    report = right_zeros(a)
    for z, _ in report.isolated:
        if z.norm() <= 1.0 + tol:
            return False
    for cls in report.spherical:
        if cls.norm() <= 1.0 + tol:
            return False
    return True
