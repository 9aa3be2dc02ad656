"""Randomized property suites.

Each run_* function executes ``cases`` seeded random cases and asserts
every one; the acceptance test invokes all of them at 200 cases.
Tolerances are relative to the natural scale of each identity so the
suites stay meaningful for both tame and large random draws.
"""

import numpy as np

from qctl import (LeftFraction, QPoly, Quaternion, RightFraction,
                  StateSpace, Unsolvable, class_of, denominator_classes_agree,
                  div_quotient_left, div_quotient_right, eval_right,
                  fraction_equal, gcld, gcrd, left_to_right, markov, pmul,
                  realize, right_to_left, series, solve_diophantine,
                  spectrum_matches_poles, tf_left)
import gen


def _relclose(diff_norm: float, scale: float, tol: float) -> bool:
    return diff_norm <= tol * max(1.0, scale)


def run_division_identities(cases: int, seed: int = 101) -> int:
    """a = b q + r with deg r < deg b, for both quotient sides, plus
    the exact quotient degree."""
    rng = gen.rng_for(seed)
    for _ in range(cases):
        da = int(rng.integers(0, 7))
        db = int(rng.integers(0, 7))
        a = gen.rand_poly(rng, da)
        b = gen.rand_poly(rng, db)
        scale = max(a.norm_inf(), b.norm_inf(), 1.0)
        for div in (div_quotient_right, div_quotient_left):
            q, r = div(a, b)
            back = pmul(b, q) + r if div is div_quotient_right \
                else pmul(q, b) + r
            assert _relclose((back - a).norm_inf(), scale, 1e-9)
            assert r.degree() < b.degree() or r.is_zero()
            if da >= db:
                assert q.degree() == da - db
            else:
                assert q.is_zero() and r == a
    return cases


def run_bezout_residuals(cases: int, seed: int = 102) -> int:
    """Extended Euclid output: Bezout identity, kernel identity, and
    divisibility of both inputs by the computed divisor."""
    rng = gen.rng_for(seed)
    for case in range(cases):
        craft = case % 2 == 0
        g0 = gen.rand_poly(rng, int(rng.integers(1, 3))) if craft else None
        a = gen.rand_poly(rng, int(rng.integers(1, 4)))
        b = gen.rand_poly(rng, int(rng.integers(0, 4)))
        if craft:
            a_full, b_full = pmul(g0, a), pmul(g0, b)
        else:
            a_full, b_full = a, b
        data = gcld(a_full, b_full)
        sc = max(1.0, a_full.norm_inf(), b_full.norm_inf(),
                 data.p.norm_inf(), data.q.norm_inf(),
                 data.u.norm_inf(), data.v.norm_inf())
        bez = pmul(a_full, data.p) + pmul(b_full, data.q) - data.g
        ker = pmul(a_full, data.u) + pmul(b_full, data.v)
        assert _relclose(bez.norm_inf(), sc * sc, 1e-8)
        assert _relclose(ker.norm_inf(), sc * sc, 1e-8)
        for poly in (a_full, b_full):
            _, rem = div_quotient_right(poly, data.g)
            assert _relclose(rem.norm_inf(), sc * sc, 1e-7)
        if craft:
            assert data.g.degree() >= g0.degree()

        # mirrored side
        if craft:
            a_full, b_full = pmul(a, g0), pmul(b, g0)
        data = gcrd(a_full, b_full)
        sc = max(1.0, a_full.norm_inf(), b_full.norm_inf(),
                 data.p.norm_inf(), data.q.norm_inf(),
                 data.u.norm_inf(), data.v.norm_inf())
        bez = pmul(data.p, a_full) + pmul(data.q, b_full) - data.g
        ker = pmul(data.u, a_full) + pmul(data.v, b_full)
        assert _relclose(bez.norm_inf(), sc * sc, 1e-8)
        assert _relclose(ker.norm_inf(), sc * sc, 1e-8)
        for poly in (a_full, b_full):
            _, rem = div_quotient_left(poly, data.g)
            assert _relclose(rem.norm_inf(), sc * sc, 1e-7)
        if craft:
            assert data.g.degree() >= g0.degree()
    return cases


def run_product_right_evaluation(cases: int, seed: int = 103) -> int:
    """eval_right(f g, x) = eval_right(f, gx x gx^-1) gx with
    gx = eval_right(g, x), and = 0 whenever gx = 0."""
    rng = gen.rng_for(seed)
    for case in range(cases):
        f = gen.rand_poly(rng, int(rng.integers(0, 5)))
        x = gen.rand_quat(rng, 1.2)
        if case % 3 == 0:
            # plant a right zero of the right factor at x
            g = pmul(gen.rand_poly(rng, int(rng.integers(0, 3))),
                     QPoly([x, Quaternion(-1.0)]))
            val = eval_right(pmul(f, g), x)
            sc = f.norm_inf() * g.norm_inf() * max(1.0, x.norm()) ** 8
            assert _relclose(val.norm(), sc, 1e-9)
            continue
        g = gen.rand_poly(rng, int(rng.integers(0, 5)))
        gx = eval_right(g, x)
        lhs = eval_right(pmul(f, g), x)
        if gx.norm() < 1e-6:
            continue
        conj_pt = gx * x * gx.inverse()
        rhs = eval_right(f, conj_pt) * gx
        sc = max(lhs.norm(), rhs.norm(),
                 f.norm_inf() * g.norm_inf() * max(1.0, x.norm()) ** 10)
        assert _relclose((lhs - rhs).norm(), sc, 1e-9)
    return cases


def run_conversion_cross_identity(cases: int, seed: int = 104) -> int:
    """left_to_right satisfies a b_r = b a_r; right_to_left satisfies
    b_l a = a_l b; both preserve the series for 20 terms."""
    rng = gen.rng_for(seed)
    for case in range(cases):
        da = int(rng.integers(1, 4))
        db = int(rng.integers(0, 5))
        a = gen.rand_causal_poly(rng, da)
        b = gen.rand_poly(rng, db)
        b_r, a_r = left_to_right(a, b)
        sc = max(1.0, a.norm_inf() * b_r.norm_inf(),
                 b.norm_inf() * a_r.norm_inf())
        cross = pmul(a, b_r) - pmul(b, a_r)
        assert _relclose(cross.norm_inf(), sc, 1e-8)
        if case % 2 == 0:
            lf = LeftFraction(a, b)
            rf = RightFraction(b_r, a_r)
            s_l = series(lf, 20)
            s_r = series(rf, 20)
            for u, v in zip(s_l, s_r):
                assert _relclose((u - v).norm(),
                                 max(u.norm(), v.norm()), 1e-7)

        a2 = gen.rand_causal_poly(rng, int(rng.integers(1, 4)))
        b2 = gen.rand_poly(rng, int(rng.integers(0, 5)))
        a_l, b_l = right_to_left(b2, a2)
        sc = max(1.0, b_l.norm_inf() * a2.norm_inf(),
                 a_l.norm_inf() * b2.norm_inf())
        cross = pmul(b_l, a2) - pmul(a_l, b2)
        assert _relclose(cross.norm_inf(), sc, 1e-8)
        if case % 2 == 1:
            rf = RightFraction(b2, a2)
            lf = LeftFraction(a_l, b_l)
            s_r = series(rf, 20)
            s_l = series(lf, 20)
            for u, v in zip(s_l, s_r):
                assert _relclose((u - v).norm(),
                                 max(u.norm(), v.norm()), 1e-7)
    return cases


def run_denominator_class_bijection(cases: int, seed: int = 105) -> int:
    """The left and right denominators of one coprime fraction carry
    the same zero-class multiset."""
    rng = gen.rng_for(seed)
    done = 0
    while done < cases:
        a = gen.rand_causal_poly(rng, int(rng.integers(1, 4)))
        b = gen.rand_poly(rng, int(rng.integers(0, 4)))
        lf = LeftFraction(a, b)
        if lf.den.degree() < 1:
            continue
        b_r, a_r = left_to_right(lf.den, lf.num)
        rf = RightFraction(b_r, a_r)
        assert denominator_classes_agree(lf, rf, 1e-6)
        done += 1
    return done


def run_reciprocal_class_containment(cases: int, seed: int = 106) -> int:
    """Minimal realizations place every inverted denominator zero class
    in the spectrum and pad the rest of the spectrum at the origin."""
    rng = gen.rng_for(seed)
    done = 0
    while done < cases:
        dden = int(rng.integers(1, 4))
        dnum = int(rng.integers(0, 5))
        den = gen.rand_stable_denominator(rng, dden)
        num = gen.rand_poly(rng, dnum)
        f = LeftFraction(den, num)
        if f.den.degree() != dden:
            continue
        ss = realize(f)
        assert ss.n == max(f.den.degree(), max(f.num.degree(), 0))
        assert spectrum_matches_poles(ss, f, 1e-6)
        done += 1
    return done


def run_solvability_two_directional(cases: int, seed: int = 107) -> int:
    """a x + b y = c is solvable when c is a left multiple of the
    common left divisor and unsolvable when a remainder is planted."""
    rng = gen.rng_for(seed)
    for _ in range(cases):
        g = gen.rand_poly(rng, int(rng.integers(1, 3)))
        a = pmul(g, gen.rand_poly(rng, int(rng.integers(1, 3))))
        b = pmul(g, gen.rand_poly(rng, int(rng.integers(0, 3))))
        ctilde = gen.rand_poly(rng, int(rng.integers(0, 3)))
        c_good = pmul(g, ctilde)
        sol = solve_diophantine(a, b, c_good)
        resid = pmul(a, sol.x) + pmul(b, sol.y) - c_good
        sc = max(1.0, a.norm_inf() * max(1.0, sol.x.norm_inf()),
                 b.norm_inf() * max(1.0, sol.y.norm_inf()))
        assert _relclose(resid.norm_inf(), sc * 10, 1e-8)

        c_bad = c_good + QPoly([gen.rand_nonzero_quat(rng)])
        try:
            solve_diophantine(a, b, c_bad)
            raised = False
        except Unsolvable as exc:
            raised = True
            assert exc.g is not None and not exc.remainder.is_zero()
        assert raised
    return cases


def run_minimal_solution_degrees(cases: int, seed: int = 108) -> int:
    """Minimal-x and minimal-y solutions respect their degree bounds
    and are independent of the particular solution they started from."""
    rng = gen.rng_for(seed)
    for _ in range(cases):
        a = gen.rand_poly(rng, int(rng.integers(1, 4)))
        b = gen.rand_poly(rng, int(rng.integers(1, 4)))
        c = gen.rand_poly(rng, int(rng.integers(0, 5)))
        min_x = solve_diophantine(a, b, c, mode="minimal_x")
        assert min_x.x.degree() < min_x.x_step.degree()
        min_y = solve_diophantine(a, b, c, mode="minimal_y")
        assert min_y.y.degree() < min_y.y_step.degree()
        for sol in (min_x, min_y):
            resid = pmul(a, sol.x) + pmul(b, sol.y) - c
            sc = max(1.0, a.norm_inf() * max(1.0, sol.x.norm_inf()),
                     b.norm_inf() * max(1.0, sol.y.norm_inf()))
            assert _relclose(resid.norm_inf(), sc * 10, 1e-7)

        # shift the particular solution by a random kernel multiple and
        # reduce by hand: the same minimal pair must come back
        part = solve_diophantine(a, b, c, mode="particular")
        t = gen.rand_poly(rng, int(rng.integers(0, 3)))
        x_s, y_s = part.shifted(t)
        t2, x_red = div_quotient_right(x_s, part.x_step)
        y_red = y_s - pmul(part.y_step, t2)
        sc = max(1.0, x_s.norm_inf(), y_s.norm_inf(),
                 min_x.x.norm_inf(), min_x.y.norm_inf())
        assert _relclose((x_red - min_x.x).norm_inf(), sc * 10, 1e-6)
        assert _relclose((y_red - min_x.y).norm_inf(), sc * 10, 1e-6)
    return cases


def run_realize_tf_round_trips(cases: int, seed: int = 109) -> int:
    """Round trip A: series(tf_left(ss)) = markov(ss).  Round trip B:
    markov(realize(f)) = series(f), tf_left(realize(f)) = f, and the
    realization hits the minimal state count."""
    rng = gen.rng_for(seed)
    for case in range(cases):
        if case % 2 == 0:
            n = int(rng.integers(0, 5))
            ss = gen.rand_system(rng, n, radius=0.9 + 0.2 * rng.random())
            count = 2 * n + 4
            lf = tf_left(ss)
            want = markov(ss, count)
            got = series(lf, count)
            for u, v in zip(want, got):
                assert (u - v).norm() <= 1e-8 * max(1.0, u.norm())
            assert max(lf.den.degree(),
                       max(lf.num.degree(), 0)) <= n
        else:
            dden = int(rng.integers(1, 5))
            dnum = int(rng.integers(0, 5))
            f = LeftFraction(gen.rand_stable_denominator(rng, dden),
                             gen.rand_poly(rng, dnum))
            n = max(f.den.degree(), max(f.num.degree(), 0))
            ss = realize(f)
            assert ss.n == n
            count = 2 * n + 4
            want = series(f, count)
            got = markov(ss, count)
            for u, v in zip(want, got):
                assert (u - v).norm() <= 1e-8 * max(1.0, u.norm())
            back = tf_left(ss)
            assert fraction_equal(back, f, 1e-7)
            assert max(back.den.degree(),
                       max(back.num.degree(), 0)) == ss.n
    return cases


def run_norm_multiplicativity(cases: int, seed: int = 110) -> int:
    """|p q| = |p| |q|, and similarity preserves both class data and
    the norm (every class member shares one norm)."""
    rng = gen.rng_for(seed)
    for _ in range(cases):
        p = gen.rand_quat(rng, 2.0)
        q = gen.rand_quat(rng, 2.0)
        assert abs((p * q).norm() - p.norm() * q.norm()) \
            <= 1e-12 * max(1.0, p.norm() * q.norm())
        u = gen.rand_nonzero_quat(rng, 0.2)
        sim = u * q * u.inverse()
        assert class_of(sim).matches(class_of(q), 1e-10)
        assert abs(sim.norm() - q.norm()) <= 1e-10 * max(1.0, q.norm())
    return cases


ALL_SUITES = (
    run_division_identities,
    run_bezout_residuals,
    run_product_right_evaluation,
    run_conversion_cross_identity,
    run_denominator_class_bijection,
    run_reciprocal_class_containment,
    run_solvability_two_directional,
    run_minimal_solution_degrees,
    run_realize_tf_round_trips,
    run_norm_multiplicativity,
)
