from math import gcd

import pytest

from belyi.covering import lift_boundary_loop
from belyi.errors import NotCoprimeError, RangeError, UnsupportedInertiaError
from belyi.homology import (
    H1Class,
    InertiaType,
    WedgeClass,
    closed_form_delta,
    eps_basis_image,
    eps_h1,
    eps_wedge,
    expand_T,
    fermat_image,
    general_inertia_delta,
    inertia_parameters,
    pfaffian_check,
    substitute,
    t_decomposition,
)
from belyi.params import valid_pairs, validate
from belyi.words import magnus_class, relabel

from oracles import family_clauses, dense, leibniz_det, pfaffian, t_sum, enumerated_coefficients


def wc(n, **kw):
    # wc(5, e12=-1, e34=1) -> -[E_1]^[E_2] + [E_3]^[E_4]
    return WedgeClass(n, {(int(k[1]), int(k[2])): v for k, v in kw.items()})


DELTA_5_1 = wc(5, e12=-1, e13=1, e14=-1, e23=-1, e24=1, e34=-1)
DELTA_5_2 = wc(5, e13=-1, e14=1, e24=-1)


def test_closed_form_5_1():
    assert closed_form_delta(validate(5, 1)) == DELTA_5_1
    assert str(DELTA_5_1) == (
        "-[E_1]∧[E_2] + [E_1]∧[E_3] - [E_1]∧[E_4] - [E_2]∧[E_3] + [E_2]∧[E_4] - [E_3]∧[E_4]"
    )


def test_closed_form_5_2():
    assert closed_form_delta(validate(5, 2)) == DELTA_5_2


def test_closed_form_3_1():
    assert closed_form_delta(validate(3, 1)) == wc(3, e12=-1)


def test_closed_form_matches_enumeration_of_j():
    for n, k in valid_pairs(61):
        assert closed_form_delta(validate(n, k)).terms == enumerated_coefficients(n, k), (n, k)


def test_overlapping_cases_cancel():
    # d = 6 satisfies both congruences at n = 11, k = 6
    p = validate(11, 6)
    assert closed_form_delta(p).coeff(1, 7) == 0
    _, L = lift_boundary_loop(p)
    assert magnus_class(L.inverse()).coeff(1, 7) == 0


def test_wedge_class_canonical_form():
    w = WedgeClass(5, {(3, 1): 2, (1, 3): -1, (2, 2): 7, (0, 4): 3, (5, 2): 1, (1, 2): 0})
    assert w.items() == [((1, 3), -3)]
    assert w.coeff(3, 1) == 3
    assert (w - w).is_zero() and 2 * w == w + w
    assert WedgeClass.wedge(H1Class.basis(5, 1), H1Class.basis(5, 2) - H1Class.basis(5, 1)) == wc(5, e12=1)


def test_latex_uses_braces_for_two_digit_indices():
    w = WedgeClass(12, {(3, 11): -1})
    assert w.latex() == r"-[E_3]\wedge[E_{11}]"
    assert DELTA_5_2.latex() == r"-[E_1]\wedge[E_3]+[E_1]\wedge[E_4]-[E_2]\wedge[E_4]"


def test_expand_T_examples():
    p = validate(5, 1)
    T1 = wc(5, e12=1, e23=1, e34=1)
    assert expand_T(p, 1) == T1
    assert expand_T(p, 2) == wc(5, e13=1, e24=1, e14=-1)
    assert expand_T(p, 4) == -T1


def test_expand_T_range():
    p = validate(5, 1)
    for r in (0, 5, -1):
        with pytest.raises(RangeError):
            expand_T(p, r)


def test_expand_T_matches_direct_sum():
    for n, k in valid_pairs(31):
        p = validate(n, k)
        for r in range(1, n):
            assert expand_T(p, r).terms == t_sum(n, {r: 1})
            assert expand_T(p, n - r) == -expand_T(p, r)


@pytest.mark.parametrize(
    "n,k,expected",
    [(5, 1, {1: -1, 2: 1}), (11, 6, {1: -1, 3: 1, 4: -1}), (11, 7, {1: -1, 2: 1, 3: -1, 5: 1})],
)
def test_t_decomposition_examples(n, k, expected):
    td = t_decomposition(validate(n, k))
    assert dict(td.items()) == expected


def test_t_decomposition_text():
    assert str(t_decomposition(validate(11, 6))) == "-T_1 + T_3 - T_4"
    assert str(t_decomposition(validate(11, 7))) == "-T_1 + T_2 - T_3 + T_5"
    assert t_decomposition(validate(11, 7)).latex() == "-T_1+T_2-T_3+T_5"


def test_t_decomposition_recomposes():
    for n, k in valid_pairs(61):
        p = validate(n, k)
        td = t_decomposition(p)
        assert t_sum(n, dict(td.items())) == closed_form_delta(p).terms


def test_every_clause_is_exercised():
    seen = {name for n in range(3, 32, 2) for name, _, _ in family_clauses(n)}
    assert seen == {"k=1", "k=2", "k=n-2", "k=n-3", "k=(n-1)/2", "k=(n-3)/2",
                    "n=2 mod 3", "n=1 mod 3"}


@pytest.mark.parametrize("n", range(3, 32, 2))
def test_family_clauses(n):
    for name, k, expected in family_clauses(n):
        p = validate(n, k)
        assert dict(t_decomposition(p).items()) == expected, (name, n, k)
        # and against the word, independently of the closed form
        _, L = lift_boundary_loop(p)
        assert magnus_class(L.inverse()).terms == t_sum(n, expected), (name, n, k)


def test_literal_sum_over_S_is_twice_delta():
    from belyi.params import s_set

    for n, k in valid_pairs(31):
        p = validate(n, k)
        coeffs = {}
        for r in s_set(p):
            r = r.value
            coeffs[r - 1] = coeffs.get(r - 1, 0) - 1
            coeffs[r] = coeffs.get(r, 0) + 1
        literal = t_sum(n, {r: t for r, t in coeffs.items() if r % n})
        assert literal == (2 * closed_form_delta(p)).terms


def test_eps_h1_examples():
    p = validate(7, 2)
    assert eps_h1(p, H1Class.basis(7, 1)) == H1Class.basis(7, 2) - H1Class.basis(7, 1)
    assert eps_h1(p, H1Class.basis(7, 6)) == -H1Class.basis(7, 1)
    assert eps_basis_image(p, 0).is_zero()
    assert eps_basis_image(p, 3) == H1Class.basis(7, 4) - H1Class.basis(7, 1)


def test_eps_h1_has_order_n():
    for n, k in valid_pairs(31):
        p = validate(n, k)
        for i in range(1, n):
            v = H1Class.basis(n, i)
            w = v
            for step in range(1, n + 1):
                w = eps_h1(p, w)
                if step < n and i == 1:
                    assert w != v
            assert w == v


def test_eps_wedge_examples():
    p = validate(5, 2)
    assert eps_wedge(p, expand_T(p, 1)) == expand_T(p, 1)
    assert eps_wedge(p, DELTA_5_2) == DELTA_5_2
    e = lambda i: H1Class.basis(5, i)
    assert eps_wedge(p, wc(5, e12=1)) == WedgeClass.wedge(e(2) - e(1), e(3) - e(1))


def test_eps_wedge_fixes_T_and_delta():
    for n, k in valid_pairs(41):
        p = validate(n, k)
        for r in range(1, n):
            assert eps_wedge(p, expand_T(p, r)) == expand_T(p, r)
        d = closed_form_delta(p)
        assert eps_wedge(p, d) == d


def test_eps_wedge_moves_other_classes():
    p = validate(7, 1)
    assert eps_wedge(p, wc(7, e12=1)) != wc(7, e12=1)


def test_substitute_examples():
    p = validate(5, 2)
    remark = wc(5, e12=-1, e23=-1, e34=-1)
    assert substitute(p, remark, 3) == -DELTA_5_2
    assert substitute(p, DELTA_5_2, 1) == DELTA_5_2
    for j in (2, 3, 4):
        assert substitute(p, substitute(p, DELTA_5_2, j), pow(j, -1, 5)) == DELTA_5_2
    with pytest.raises(NotCoprimeError):
        substitute(validate(9, 1), closed_form_delta(validate(9, 1)), 3)


def test_substitute_is_multiplicative_and_unimodular():
    for n, k in valid_pairs(23):
        p = validate(n, k)
        d = closed_form_delta(p)
        units = [j for j in range(1, n) if gcd(j, n) == 1]
        for a in units[:4]:
            for b in units[:4]:
                assert substitute(p, substitute(p, d, a), b) == substitute(p, d, a * b)
            assert pfaffian_check(p, substitute(p, d, a)) == 1


def test_substitute_agrees_with_relabelled_word():
    for n, k in valid_pairs(23):
        p = validate(n, k)
        _, L = lift_boundary_loop(p)
        for j in range(2, n):
            if gcd(j, n) == 1:
                assert substitute(p, closed_form_delta(p), j) == magnus_class(relabel(L, j).inverse())


def test_general_inertia_delta_examples():
    g = general_inertia_delta(5, (3, 1, 1))
    remark = wc(5, e12=-1, e23=-1, e34=-1)
    assert g in (remark, -remark)
    assert general_inertia_delta(5, (2, 4, 4)) in (
        substitute(validate(5, 2), DELTA_5_2, 3),
        -substitute(validate(5, 2), DELTA_5_2, 3),
    )
    for n, k in valid_pairs(23):
        assert general_inertia_delta(n, (1, k, n - k - 1)) == closed_form_delta(validate(n, k))


def test_general_inertia_delta_via_magnus():
    # (2, 4, 4) at n = 5: the word relabelled by j^{-1} = 3 gives the class directly
    p = validate(5, 2)
    _, L = lift_boundary_loop(p)
    assert general_inertia_delta(5, (2, 4, 4)) == magnus_class(relabel(L, 3).inverse())


@pytest.mark.parametrize(
    "n,t", [(5, (1, 2, 3)), (9, (3, 3, 3)), (5, (0, 1, 4)), (5, (2, 3, 0)), (9, (1, 2, 6))]
)
def test_unsupported_inertia(n, t):
    with pytest.raises(UnsupportedInertiaError):
        general_inertia_delta(n, t)


def test_inertia_type_normalises():
    t = InertiaType(6, 1, 3, n=5)
    assert t.as_tuple() == (1, 1, 3)
    assert inertia_parameters(5, t) == (1, 1)
    assert inertia_parameters(5, (3, 1, 1)) == (3, 2)


def test_fermat_image_examples():
    p = validate(5, 2)
    e = lambda i: H1Class.basis(5, i)
    assert fermat_image(p, 0, 0).is_zero()
    assert fermat_image(p, 1, 1) == e(2) - e(3) + e(1)
    assert fermat_image(p, 0, 1).is_zero()
    assert str(fermat_image(p, 1, 1)) == "[E_1] + [E_2] - [E_3]"


def test_pfaffian_examples():
    assert pfaffian_check(validate(5, 1), DELTA_5_1) == 1
    assert pfaffian_check(validate(5, 2), DELTA_5_2) == 1
    assert pfaffian_check(validate(5, 2), WedgeClass(5)) == 0
    m = dense(5, DELTA_5_1.terms)
    assert pfaffian(m) == 1 and pfaffian(dense(5, DELTA_5_2.terms)) == -1


def test_pfaffian_against_brute_force():
    for n, k in valid_pairs(9):
        p = validate(n, k)
        m = dense(n, closed_form_delta(p).terms)
        det = pfaffian_check(p, closed_form_delta(p))
        assert det == pfaffian(m) ** 2 == leibniz_det(m) == 1


def test_pfaffian_against_recursive_pfaffian():
    for n, k in valid_pairs(11):
        p = validate(n, k)
        assert pfaffian(dense(n, closed_form_delta(p).terms)) ** 2 == pfaffian_check(p, closed_form_delta(p))
