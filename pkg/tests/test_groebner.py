"""Groebner engine tests: bases, normal forms, membership, intersections,
colons.  Monomial cases are checked against independent lattice oracles from
support.py rather than against the engine itself.
"""

import random
import threading

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from testideals import (
    Ideal,
    buchberger,
    colon_element,
    colon_ideal,
    dedupe_ideals,
    ideal_intersect,
    ideal_sum,
    ideals_equal,
    is_groebner_basis,
    normal_form,
    order_from_tag,
    parse_polynomial,
    s_polynomial,
)

from .support import (
    ideal_exponents,
    make_ring,
    monomial_colon_oracle,
    monomial_intersection_oracle,
    random_ideal,
    random_monomial_ideal,
    random_nonzero_poly,
    random_poly,
)


def P(ring, text):
    return parse_polynomial(ring, text)


def gens_text(I):
    return sorted(g.text() for g in I.gens)


# --- known reduced bases -----------------------------------------------------

def test_known_basis_lex():
    r = make_ring(2, 2)
    basis = buchberger([P(r, "x1^2 + x2"), P(r, "x2")], order_from_tag("lex"))
    assert sorted(g.text() for g in basis) == ["x1^2", "x2"]


def test_known_basis_degrevlex():
    r = make_ring(2, 2)
    basis = buchberger([P(r, "x1*x2 + x2"), P(r, "x1")])
    assert sorted(g.text() for g in basis) == ["x1", "x2"]


def test_monomial_input_is_its_own_basis():
    r = make_ring(3, 3)
    gens = [P(r, "x1*x2"), P(r, "x3^2")]
    basis = buchberger(gens)
    assert sorted(g.text() for g in basis) == ["x1*x2", "x3^2"]


def test_basis_drops_redundant_monomial():
    r = make_ring(2, 2)
    basis = buchberger([P(r, "x1"), P(r, "x1*x2")])
    assert [g.text() for g in basis] == ["x1"]


def test_unit_ideal_basis():
    r = make_ring(5, 2)
    basis = buchberger([P(r, "3"), P(r, "x1")])
    assert len(basis) == 1 and basis[0].is_constant()
    assert basis[0] == r.one()


def test_zero_ideal_basis():
    r = make_ring(2, 2)
    assert buchberger([r.zero()]) == []
    assert buchberger([]) == []


def test_basis_is_reduced():
    # no leading term divides another, tails are fully reduced, all monic
    r = make_ring(3, 3)
    rng = random.Random(7)
    order = order_from_tag("degrevlex")
    for _ in range(20):
        I = random_ideal(rng, r)
        basis = buchberger(I.gens)
        lts = [g.leading(order)[0] for g in basis]
        for i, lt in enumerate(lts):
            for j, other in enumerate(lts):
                if i != j:
                    assert not all(a <= b for a, b in zip(other, lt))
        for g in basis:
            assert g.leading(order)[1] == 1
            tail = g - g.ring.monomial(list(g.leading(order)[0]))
            assert normal_form(tail, basis) == tail


def test_groebner_basis_checker():
    r = make_ring(2, 2)
    good = buchberger([P(r, "x1^2 + x2"), P(r, "x1*x2")])
    assert is_groebner_basis(good)
    # the raw generators are not a basis for this ideal
    assert not is_groebner_basis([P(r, "x1^2 + x2"), P(r, "x1*x2")])


# --- normal forms -------------------------------------------------------------

def test_normal_form_example_char2():
    r = make_ring(2, 5)
    basis = buchberger([P(r, "x1^2 + x4*x5")])
    f = P(r, "x1^2*x2 + x4*x5*x2")
    assert normal_form(f, basis).is_zero()


def test_normal_form_of_reducible_and_irreducible():
    r = make_ring(2, 2)
    basis = buchberger([P(r, "x1")])
    assert normal_form(P(r, "x1*x2 + x2"), basis) == P(r, "x2")
    assert normal_form(P(r, "x2^3"), basis) == P(r, "x2^3")


def test_normal_form_idempotent_and_linear():
    rng = random.Random(3)
    for p in (2, 3):
        r = make_ring(p, 3)
        for _ in range(15):
            basis = buchberger(random_ideal(rng, r).gens)
            f = random_poly(rng, r)
            g = random_poly(rng, r)
            nf = normal_form(f, basis)
            assert normal_form(nf, basis) == nf
            a = rng.randint(1, p - 1)
            combo = f * r.constant(a) + g
            assert normal_form(combo, basis) == normal_form(f, basis) * r.constant(a) + normal_form(g, basis)


def test_membership_of_explicit_combinations():
    rng = random.Random(5)
    for p in (2, 3):
        r = make_ring(p, 4)
        for _ in range(12):
            gens = [random_nonzero_poly(rng, r, max_terms=3, max_exp=2) for _ in range(rng.randint(1, 4))]
            I = Ideal(r, gens)
            combo = r.zero()
            for g in gens:
                combo = combo + g * random_poly(rng, r, max_terms=2, max_exp=2)
            assert I.contains(combo)


def test_non_membership():
    r = make_ring(2, 2)
    I = Ideal(r, [P(r, "x1^2"), P(r, "x2^2")])
    assert not I.contains(P(r, "x1*x2"))
    assert not I.contains(r.one())
    assert I.contains(P(r, "x1^3 + x1^2*x2"))


def test_membership_of_one_minus_t_char2():
    # over F_2, 1 - t is t + 1; the elimination machinery leans on this
    r = make_ring(2, 1)
    f = P(r, "x1 + 1")
    g = r.one() - r.variable(0)
    assert f == g
    assert f.text() == "x1 + 1"


def test_zero_and_unit_membership():
    r = make_ring(3, 2)
    Z = Ideal(r, [])
    assert Z.contains(r.zero())
    assert not Z.contains(r.one())
    U = Ideal(r, [r.constant(2)])
    assert U.is_unit()
    assert U.contains(P(r, "x1^5 + x2"))


# --- s-polynomials ------------------------------------------------------------

def test_s_polynomial_cancels_leading_terms():
    r = make_ring(2, 2)
    f = P(r, "x1^2 + x2")
    g = P(r, "x1*x2 + 1")
    s = s_polynomial(f, g)
    # lcm is x1^2*x2; both leading terms cancel
    assert s == P(r, "x2^2 + x1")


def test_s_polynomial_coprime_leads():
    r = make_ring(3, 2)
    f = P(r, "x1 + 1")
    g = P(r, "x2 + 2")
    s = s_polynomial(f, g)
    basis = buchberger([f, g])
    assert normal_form(s, basis).is_zero()


# --- intersections -------------------------------------------------------------

def test_intersection_monomial_oracle():
    rng = random.Random(17)
    for p in (2, 3):
        r = make_ring(p, 3)
        for _ in range(20):
            A = random_monomial_ideal(rng, r)
            B = random_monomial_ideal(rng, r)
            got = ideal_intersect(A, B)
            want = monomial_intersection_oracle(ideal_exponents(A), ideal_exponents(B))
            assert sorted(ideal_exponents(got)) == sorted(want)


def test_intersection_principal_ideals():
    # (f) cap (g) = (lcm) and for coprime monomials that is the product
    r = make_ring(2, 2)
    got = ideal_intersect(Ideal(r, [P(r, "x1")]), Ideal(r, [P(r, "x2")]))
    assert gens_text(got) == ["x1*x2"]


def test_intersection_with_unit_and_zero():
    r = make_ring(2, 2)
    I = Ideal(r, [P(r, "x1^2 + x2")])
    U = Ideal(r, [r.one()])
    Z = Ideal(r, [])
    assert ideals_equal(ideal_intersect(I, U), I)
    assert ideal_intersect(I, Z).is_zero()


def test_intersection_nonmonomial():
    r = make_ring(2, 2)
    I = Ideal(r, [P(r, "x1 + x2")])
    J = Ideal(r, [P(r, "x1")])
    got = ideal_intersect(I, J)
    want = Ideal(r, [P(r, "x1^2 + x1*x2")])
    assert ideals_equal(got, want)


def test_intersection_is_contained_in_both():
    rng = random.Random(23)
    r = make_ring(2, 3)
    for _ in range(10):
        A = random_ideal(rng, r)
        B = random_ideal(rng, r)
        got = ideal_intersect(A, B)
        for g in got.gens:
            assert A.contains(g) and B.contains(g)


# --- colons ---------------------------------------------------------------------

def test_colon_by_one_is_identity():
    r = make_ring(2, 3)
    I = Ideal(r, [P(r, "x1^2 + x2*x3")])
    assert ideals_equal(colon_element(I, r.one()), I)


def test_colon_monomial_oracle():
    rng = random.Random(29)
    for p in (2, 3):
        r = make_ring(p, 3)
        for _ in range(20):
            I = random_monomial_ideal(rng, r)
            a = tuple(rng.randint(0, 2) for _ in range(3))
            if not any(a):
                continue
            got = colon_element(I, r.monomial(list(a)))
            want = monomial_colon_oracle(ideal_exponents(I), a)
            assert sorted(ideal_exponents(got)) == sorted(want)


def test_colon_ideal_example():
    # ((x1*x2) : (x1, x2)) = (x1*x2): neither generator alone divides in
    r = make_ring(2, 2)
    I = Ideal(r, [P(r, "x1*x2")])
    J = Ideal(r, [P(r, "x1"), P(r, "x2")])
    got = colon_ideal(I, J)
    assert ideals_equal(got, I)


def test_colon_ideal_is_intersection_of_element_colons():
    rng = random.Random(31)
    r = make_ring(2, 3)
    for _ in range(8):
        I = random_ideal(rng, r, max_gens=2)
        J = random_ideal(rng, r, max_gens=2)
        got = colon_ideal(I, J)
        want = None
        for g in J.gens:
            piece = colon_element(I, g)
            want = piece if want is None else ideal_intersect(want, piece)
        assert ideals_equal(got, want)


def test_colon_times_denominator_lands_inside():
    rng = random.Random(37)
    r = make_ring(3, 3)
    for _ in range(10):
        I = random_ideal(rng, r, max_gens=2)
        f = random_nonzero_poly(rng, r, max_terms=2, max_exp=2)
        got = colon_element(I, f)
        for g in got.gens:
            assert I.contains(g * f)


def test_colon_by_zero_divisor_of_ideal():
    r = make_ring(2, 2)
    I = Ideal(r, [P(r, "x1")])
    # x1 * 1 lies in I, so (I : x1) is the unit ideal
    assert colon_element(I, P(r, "x1")).is_unit()


# --- ideal equality and dedupe ---------------------------------------------------

def test_ideals_equal_different_generators():
    r = make_ring(2, 5)
    I = Ideal(r, [P(r, "x1 + x2"), P(r, "x1^2 + x4*x5")])
    J = Ideal(r, [P(r, "x1 + x2"), P(r, "x2^2 + x4*x5")])
    assert ideals_equal(I, J)


def test_ideals_not_equal():
    r = make_ring(2, 2)
    assert not ideals_equal(Ideal(r, [P(r, "x1")]), Ideal(r, [P(r, "x2")]))


def test_dedupe_ideals():
    r = make_ring(2, 5)
    I = Ideal(r, [P(r, "x1 + x2"), P(r, "x1^2 + x4*x5")])
    J = Ideal(r, [P(r, "x1 + x2"), P(r, "x2^2 + x4*x5")])
    K = Ideal(r, [P(r, "x1")])
    uniques, groups = dedupe_ideals([I, J, K])
    assert len(uniques) == 2
    assert groups == [[0, 1], [2]]
    assert uniques[0] is I and uniques[1] is K


def test_dedupe_keeps_all_when_distinct():
    r = make_ring(2, 2)
    ideals = [Ideal(r, [P(r, "x1")]), Ideal(r, [P(r, "x2")])]
    uniques, groups = dedupe_ideals(ideals)
    assert len(uniques) == 2 and groups == [[0], [1]]


def test_canonical_basis_deterministic_under_generator_shuffle():
    rng = random.Random(41)
    r = make_ring(2, 3)
    for _ in range(10):
        I = random_ideal(rng, r)
        gens = list(I.gens)
        rng.shuffle(gens)
        J = Ideal(r, gens)
        assert [g.text() for g in I.canonical_basis()] == [g.text() for g in J.canonical_basis()]


# --- ideal construction validation ------------------------------------------------

def test_ideal_rejects_foreign_polynomials():
    r1 = make_ring(2, 2)
    r2 = make_ring(3, 2)
    with pytest.raises(ValueError):
        Ideal(r1, [r2.one()])


def test_ideal_drops_zero_generators():
    r = make_ring(2, 2)
    I = Ideal(r, [r.zero(), P(r, "x1")])
    assert [g.text() for g in I.gens] == ["x1"]
    assert Ideal(r, [r.zero()]).is_zero()


def test_ideal_sum():
    r = make_ring(2, 3)
    I = Ideal(r, [P(r, "x1")])
    J = Ideal(r, [P(r, "x2")])
    S = ideal_sum(I, J)
    assert S.contains(P(r, "x1")) and S.contains(P(r, "x2"))
    assert not S.contains(P(r, "x3"))


# --- caching and threads -----------------------------------------------------------

def test_groebner_cache_is_stable():
    r = make_ring(2, 3)
    I = Ideal(r, [P(r, "x1*x2 + x3^2"), P(r, "x2^2")])
    first = I.groebner_basis()
    second = I.groebner_basis()
    assert [g.text() for g in first] == [g.text() for g in second]


def test_threaded_intersections_agree():
    r = make_ring(2, 3)
    rng = random.Random(43)
    pairs = [(random_monomial_ideal(rng, r), random_monomial_ideal(rng, r)) for _ in range(8)]
    expected = [sorted(ideal_exponents(ideal_intersect(a, b))) for a, b in pairs]
    results = [None] * 8
    def work(i):
        a, b = pairs[i]
        results[i] = sorted(ideal_exponents(ideal_intersect(a, b)))
    threads = [threading.Thread(target=work, args=(i,)) for i in range(8)]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    assert results == expected


# --- randomized basis property ------------------------------------------------------

@settings(max_examples=25, deadline=None)
@given(st.integers(0, 2**32 - 1), st.sampled_from([2, 3]))
def test_buchberger_output_verifies(seed, p):
    rng = random.Random(seed)
    r = make_ring(p, 3)
    I = random_ideal(rng, r, max_gens=3, max_terms=3, max_exp=2)
    basis = buchberger(I.gens)
    assert is_groebner_basis(basis)
    for g in I.gens:
        assert normal_form(g, basis).is_zero()
