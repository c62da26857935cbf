"""Candidate enumeration, parity reports, grid verification."""

import random

import pytest

from weilparity.bounds import functional_equation_sign
from weilparity.cyclotomic import totient
from weilparity.enumerator import (
    G_CAP,
    admissible_full_degree_specs,
    enumerate_candidates,
    half_degree_candidates,
    primes_between,
    verify_grid,
    verify_parity_theorem,
)
from weilparity.errors import CapExceeded
from weilparity.intpoly import IntPoly
from weilparity.weil import WeilParams


def spec_pairs(specs):
    return [(s.q_star_sign, s.t) for s in specs]


def test_admissible_specs_g1():
    params = WeilParams(p=5, n=1, g=1)
    assert spec_pairs(admissible_full_degree_specs(params)) == [(-1, 1), (1, 1)]


def test_admissible_specs_g2():
    params = WeilParams(p=5, n=1, g=2)
    pairs = spec_pairs(admissible_full_degree_specs(params))
    assert pairs == [(-1, 1), (1, 1), (-1, 2), (1, 2), (-1, 3), (1, 3)]
    degrees = {t: totient(4 * t) for _, t in pairs}
    assert degrees == {1: 2, 2: 4, 3: 4}


def test_admissible_specs_g3_excludes_t5():
    # (-,5) fails full degree; (+,5) is full degree but phi(20) = 8 > 6
    params = WeilParams(p=5, n=1, g=3)
    pairs = spec_pairs(admissible_full_degree_specs(params))
    assert (-1, 5) not in pairs
    assert (1, 5) not in pairs


def test_scan_cap_is_complete():
    # beyond t = 2g^2 no phi(4t) fits in 2g; beyond 8g^2 not even half fits
    for g in range(1, 7):
        for t in range(2 * g * g + 1, 4 * g * g + 1):
            assert totient(4 * t) > 2 * g
        for t in range(8 * g * g + 1, 16 * g * g + 1):
            assert totient(4 * t) // 2 > 2 * g


def test_enumerate_g1():
    candidates = enumerate_candidates(WeilParams(p=5, n=1, g=1))
    assert [c.poly.coeffs for c in candidates] == [(-5, 0, 1), (5, 0, 1)]


def test_enumerate_g2_contains_expected_products():
    candidates = enumerate_candidates(WeilParams(p=5, n=1, g=2))
    polys = {c.poly.coeffs for c in candidates}
    assert (-25, 0, 0, 0, 1) in polys        # (X^2+5)(X^2-5)
    assert (25, 0, 10, 0, 1) in polys        # (X^2+5)^2
    assert len(candidates) == 7


def test_enumerate_g1_p3():
    candidates = enumerate_candidates(WeilParams(p=3, n=1, g=1))
    assert {c.poly.coeffs for c in candidates} == {(-3, 0, 1), (3, 0, 1)}
    # the half-degree spec at p=3 is flagged separately
    assert spec_pairs(half_degree_candidates(WeilParams(p=3, n=1, g=1))) == [(1, 3)]


def test_candidate_structure_invariants():
    for p in (3, 5, 7, 13):
        for g in (1, 2, 3):
            params = WeilParams(p=p, n=1, g=g)
            for cand in enumerate_candidates(params):
                assert cand.poly.is_monic()
                assert cand.poly.degree == 2 * g
                assert abs(cand.poly.coefficient(0)) == params.q ** g
                assert sum(m * totient(4 * s.t) for s, m in cand.factors) == 2 * g
                assert functional_equation_sign(cand.poly, params.q) is not None


def test_enumeration_order_is_canonical():
    params = WeilParams(p=7, n=1, g=3)
    first = enumerate_candidates(params)
    second = enumerate_candidates(params)
    assert first == second
    keys = [tuple((s.t, s.q_star_sign, m) for s, m in c.factors) for c in first]
    assert keys == sorted(keys)


def test_enumerate_cap():
    with pytest.raises(CapExceeded):
        enumerate_candidates(WeilParams(p=23, n=1, g=G_CAP + 1))


def test_half_degree_examples():
    assert half_degree_candidates(WeilParams(p=11, n=1, g=3)) == []
    assert spec_pairs(half_degree_candidates(WeilParams(p=5, n=1, g=3))) == [(-1, 5)]
    assert spec_pairs(half_degree_candidates(WeilParams(p=7, n=1, g=3))) == [(1, 7)]


def test_p_equals_two_detector_branch():
    # q* even: half degree exactly when t = 2 mod 4, for both signs
    params = WeilParams(p=2, n=1, g=1)
    assert {c.poly.coeffs for c in enumerate_candidates(params)} == {(-2, 0, 1), (2, 0, 1)}
    assert spec_pairs(half_degree_candidates(params)) == [(-1, 2), (1, 2)]


def test_half_degree_structure_for_odd_p():
    # for odd p the detected specs satisfy: t odd, p | t, q* = 3 mod 4;
    # p | t then forces p-1 | phi(t), which is what makes half-degree
    # specs impossible once p - 1 > 2g
    for p in (3, 5, 7):
        for g in (1, 2, 3, 4):
            params = WeilParams(p=p, n=1, g=g)
            for s in half_degree_candidates(params):
                q_star = s.q_star_sign * params.q
                assert s.t % 2 == 1
                assert s.t % p == 0
                assert q_star % 4 == 3
                assert totient(s.t) <= 2 * g
                assert totient(s.t) % (p - 1) == 0


def test_verify_parity_theorem_examples():
    r = verify_parity_theorem(WeilParams(p=11, n=1, g=3))
    assert r.odd_candidates == 0
    assert r.half_degree_specs == ()
    assert r.contract_ok
    assert r.violations == ()

    r = verify_parity_theorem(WeilParams(p=13, n=3, g=2))
    assert r.odd_candidates == 0
    assert r.contract_ok

    r = verify_parity_theorem(WeilParams(p=5, n=1, g=3))
    assert r.half_degree_specs != ()
    assert r.contract_ok  # p = 5 <= 2g+1 = 7: below the threshold, informational


def test_parity_report_violations_consistency():
    for p in (5, 7, 11, 13):
        r = verify_parity_theorem(WeilParams(p=p, n=1, g=2))
        assert (r.odd_candidates > 0) == bool(r.violations)
        assert r.total_candidates == len(r.candidates)


def test_primes_between():
    assert primes_between(3, 20) == [5, 7, 11, 13, 17, 19]
    assert primes_between(7, 7) == []


def test_verify_grid_small():
    result = verify_grid(3, 50, [1])
    assert result.all_ok
    assert all(r.odd_candidates == 0 for r in result.reports)
    assert all(r.half_degree_specs == () for r in result.reports)


def test_verify_grid_cells():
    result = verify_grid(1, 7, [1])
    cells = [(r.params.g, r.params.p, r.params.n) for r in result.reports]
    assert cells == [(1, 5, 1), (1, 7, 1)]
    result = verify_grid(2, 7, [3])
    cells = [(r.params.g, r.params.p, r.params.n) for r in result.reports]
    assert cells == [(1, 5, 3), (1, 7, 3), (2, 7, 3)]
    assert result.all_ok


def test_verify_grid_validation():
    with pytest.raises(ValueError):
        verify_grid(0, 50, [1])
    with pytest.raises(CapExceeded):
        verify_grid(G_CAP + 1, 50, [1])
    with pytest.raises(ValueError):
        verify_grid(2, 50, [2])  # even n rejected at params construction


def test_product_of_even_polynomials_is_even():
    rng = random.Random(111)
    for _ in range(200):
        a = IntPoly([rng.randint(-9, 9) if i % 2 == 0 else 0 for i in range(rng.randint(1, 9))])
        b = IntPoly([rng.randint(-9, 9) if i % 2 == 0 else 0 for i in range(rng.randint(1, 9))])
        assert a.is_even() and b.is_even()
        assert (a * b).is_even()


def test_candidate_roots_have_weil_magnitude():
    # independent numeric oracle: every root of every candidate must lie
    # on the circle of radius sqrt(q).  Repeated factors limit attainable
    # accuracy to roughly eps**(1/multiplicity), so the tolerance scales
    # with the largest factor multiplicity; a wrong polynomial would be
    # off by orders of magnitude more.
    import numpy as np

    for p, n, g in ((5, 1, 2), (7, 1, 3), (13, 1, 3), (3, 3, 2)):
        params = WeilParams(p=p, n=n, g=g)
        radius = params.q ** 0.5
        for cand in enumerate_candidates(params):
            max_mult = max(m for _, m in cand.factors)
            tol = max(1e-8, 100 * (1e-16) ** (1.0 / max_mult))
            roots = np.roots(list(reversed(cand.poly.coeffs)))
            assert max(abs(abs(r) - radius) for r in roots) < tol * radius


def test_candidate_factorization_recomputes():
    from weilparity.weil import minpoly_full_degree

    params = WeilParams(p=7, n=1, g=3)
    for cand in enumerate_candidates(params):
        product = IntPoly.one()
        for spec, mult in cand.factors:
            product = product * minpoly_full_degree(params, spec.q_star_sign, spec.t) ** mult
        assert product == cand.poly


def test_partition_search_is_order_independent():
    # the family of factor multisets must not depend on the spec scan order
    from weilparity.enumerator import _bounded_partitions

    rng = random.Random(222)
    params = WeilParams(p=13, n=1, g=4)
    specs = admissible_full_degree_specs(params)
    degrees = [totient(4 * s.t) for s in specs]

    def multisets(order):
        degs = tuple(degrees[i] for i in order)
        found = set()
        for mults in _bounded_partitions(degs, 2 * params.g):
            found.add(frozenset(
                (specs[i].q_star_sign, specs[i].t, m)
                for i, m in zip(order, mults) if m
            ))
        return found

    canonical = multisets(list(range(len(specs))))
    for _ in range(5):
        order = list(range(len(specs)))
        rng.shuffle(order)
        assert multisets(order) == canonical


def test_totient_lower_bound_supporting_scan_cap():
    # phi(m) >= sqrt(m/2) underwrites both scan caps; check it at scale
    for m in range(1, 20001):
        assert totient(m) ** 2 * 2 >= m
