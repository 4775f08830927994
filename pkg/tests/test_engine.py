import random
from fractions import Fraction

import pytest

from donaldson_cp2.engine import (
    DegreeMismatch,
    IntegrandSpec,
    Specialization,
    elementary_symmetric,
    integrand_at,
    integrate,
    sample_specialization,
    segre_coefficients,
)
from donaldson_cp2.partitions import EMPTY, FixedPoint, Partition, enumerate_fixed_points
from donaldson_cp2.weights import WeightForm, chart_frames


def esym_bruteforce(values):
    """Expand prod_j (1 + x_j t) by explicit polynomial multiplication."""
    poly = [Fraction(1)]
    for x in values:
        poly = [a + (poly[j - 1] * x if j else 0) for j, a in enumerate(poly)] + [poly[-1] * x]
    return poly


def inverse_series_bruteforce(chern, k):
    """1 / c(t) to order k via the geometric series sum (1 - c)^t,
    valid because c - 1 has positive valuation."""
    u = [Fraction(0) - c for c in chern]
    u[0] += 1  # u = 1 - c, u[0] = 0
    out = [Fraction(0)] * (k + 1)
    power = [Fraction(1)] + [Fraction(0)] * k
    for _ in range(k + 1):
        for j in range(k + 1):
            out[j] += power[j]
        nxt = [Fraction(0)] * (k + 1)
        for a in range(k + 1):
            if power[a] == 0:
                continue
            for b in range(min(len(u), k + 1 - a)):
                nxt[a + b] += power[a] * u[b]
        power = nxt
    return out


def test_elementary_symmetric_examples():
    assert elementary_symmetric([2, 3], 2) == [1, 5, 6]
    x = Fraction(7, 3)
    assert elementary_symmetric([x], 1) == [1, x]


def test_elementary_symmetric_against_bruteforce():
    rng = random.Random(3)
    for _ in range(10):
        vals = [Fraction(rng.randint(-9, 9), rng.randint(1, 9)) for _ in range(6)]
        assert elementary_symmetric(vals, 6) == esym_bruteforce(vals)


def test_elementary_symmetric_rejects_excess_up_to():
    with pytest.raises(ValueError):
        elementary_symmetric([1, 2], 3)


def test_segre_low_order_identities():
    c1, c2 = Fraction(5), Fraction(-3)
    assert segre_coefficients([1, c1], 1)[1] == -c1
    assert segre_coefficients([1, c1, c2], 2)[2] == c1 * c1 - c2


def test_segre_against_series_inversion():
    rng = random.Random(4)
    for _ in range(5):
        roots = [Fraction(rng.randint(-5, 5)) for _ in range(4)]
        chern = elementary_symmetric(roots, 4)
        assert segre_coefficients(chern, 6) == inverse_series_bruteforce(chern, 6)


def test_segre_requires_unit_leading_term():
    with pytest.raises(ValueError):
        segre_coefficients([2, 1], 1)


def point_in_chart(chart):
    mu = [EMPTY, EMPTY, EMPTY]
    mu[chart] = Partition((1,))
    return FixedPoint(tuple(mu))


def test_integrand_at_hand_examples():
    spec = Specialization(1, 5, seed=0)
    # chart 0: lambda specializes to 0, euler to 5
    assert integrand_at(point_in_chart(0), spec, IntegrandSpec(2, 0)) == 0
    # chart 1: lambda = w1 = 1, tangent weights {-w1, w2-w1} -> euler = -4
    assert integrand_at(point_in_chart(1), spec, IntegrandSpec(2, 0)) == Fraction(1, -4)


def test_integrand_at_trivial_numerator():
    spec = Specialization(2, 9, seed=0)
    for fp in enumerate_fixed_points(2):
        euler = 1
        from donaldson_cp2.weights import tangent_weights
        for f in tangent_weights(fp):
            euler *= f.evaluate(2, 9)
        assert integrand_at(fp, spec, IntegrandSpec(0, 0)) == Fraction(1, euler)


def test_integrate_known_value():
    assert integrate(3, IntegrandSpec(3, 3)).value == 8


def test_integrate_vanishing_mode():
    assert integrate(2, IntegrandSpec(1, 2)).value == 0


def test_integrate_rejects_excess_degree():
    with pytest.raises(DegreeMismatch):
        integrate(2, IntegrandSpec(3, 2))


def test_integrate_rejects_negative_exponents():
    with pytest.raises(ValueError):
        integrate(2, IntegrandSpec(-1, 2))


def test_vanishing_grid():
    for m in range(1, 4):
        for i in range(2 * m):
            for k in range(2 * m - i):
                assert integrate(m, IntegrandSpec(i, k)).value == 0, (m, i, k)


def test_specialization_independence():
    for seed in (1, 17, 99):
        assert integrate(4, IntegrandSpec(2, 6), seed=seed).value == 12


def test_manual_sign_flip_specialization():
    # summing over all fixed points, (w1, w2) and (-w1, -w2) agree
    integrand = IntegrandSpec(2, 2)
    fps = enumerate_fixed_points(2)
    plus = sum(integrand_at(fp, Specialization(3, 11, 0), integrand) for fp in fps)
    minus = sum(integrand_at(fp, Specialization(-3, -11, 0), integrand) for fp in fps)
    assert plus == minus


def test_linearization_shift_invariance():
    frames = chart_frames(WeightForm(3, -2))
    for m, integrand in [(2, IntegrandSpec(4, 0)), (3, IntegrandSpec(3, 3)),
                         (3, IntegrandSpec(0, 6))]:
        assert integrate(m, integrand, frames=frames).value == \
            integrate(m, integrand).value


def test_parallel_matches_serial():
    one = integrate(4, IntegrandSpec(2, 6), seed=7, threads=1)
    four = integrate(4, IntegrandSpec(2, 6), seed=7, threads=4)
    assert one.value == four.value


def test_result_metadata():
    res = integrate(3, IntegrandSpec(3, 3), seed=42)
    assert res.m == 3
    assert res.fixed_point_count == 22
    assert res.spec_used != res.cross_check_spec
    assert res.is_integral


def test_sample_specialization_avoids_degenerate_lines():
    rng = random.Random(8)
    for _ in range(100):
        spec = sample_specialization(rng, 8)
        assert spec.w1 != 0 and spec.w2 != 0 and spec.w1 != spec.w2
        assert abs(spec.w1) <= 10**6 and abs(spec.w2) <= 10**6
