import pytest
from hypothesis import given
from hypothesis import strategies as st

from jacsplit import serialize as ser
from jacsplit.errors import (
    BadInput,
    BadProduct,
    BadSquareRoot,
    InfinitePoint,
    NotAHalf,
    OddSupport,
    RootNotInR,
    ThetaDegenerate,
    WeierstrassInSupport,
)
from jacsplit.ff import sqrt
from jacsplit.halving import (
    SignVector,
    SqrtProfile,
    base_profile,
    enumerate_halves,
    flip,
    half_from_profile,
    profile_from_half,
    profile_new,
    verify_sign_theorem,
    weierstrass_translate,
)
from jacsplit.jacobian import (
    INFINITY,
    AffinePoint,
    MumfordDivisor,
    cantor_add,
    cantor_double,
    curve_new,
    make_point,
    neg,
    point_to_mumford,
    two_torsion_point,
    weierstrass_point,
)
from jacsplit.poly import Poly

# Halves on y^2 = x(x-1)(x-3) over F_11, found by exhaustive search over J(F_121)
# (oracle.brute_force_halves); pairs are (U, V) coefficient lists.
HALVES_P5 = {  # P = (5, 3t)
    ((((3, 2), (1, 0)), ((1, 4),))),
    ((((3, 9), (1, 0)), ((10, 4),))),
    ((((9, 5), (1, 0)), ((6, 8),))),
    ((((9, 6), (1, 0)), ((5, 8),))),
}
HALVES_W0 = {  # P = W_0 = (0, 0)
    ((((5, 0), (1, 0)), ((0, 1),))),
    ((((5, 0), (1, 0)), ((0, 10),))),
    ((((6, 0), (1, 0)), ((0, 3),))),
    ((((6, 0), (1, 0)), ((0, 8),))),
}


def _as_tuples(D):
    return (tuple(map(tuple, ser.poly_to_json(D.U))), tuple(map(tuple, ser.poly_to_json(D.V))))


def all_points(c):
    return [AffinePoint(a, sqrt(c.f(a))[0]) for a in c.F.prime_elements()]


CURVES = [
    (11, [0, 1, 3]),
    (7, [1, 2, 4]),
    (13, [0, 1, 2, 5, 7]),
    (7, [0, 3, 4, 5, 6]),
]


@pytest.fixture(params=CURVES, ids=lambda v: f"p{v[0]}-{len(v[1])}")
def curve(request):
    p, roots = request.param
    return curve_new(p, (len(roots) - 1) // 2, roots)


# ---------------------------------------------------------------- SignVector


def test_sign_vector_parsing():
    phi = SignVector.from_string("01100")
    assert phi.support == (1, 2)
    assert str(phi) == "01100"
    with pytest.raises(OddSupport):
        SignVector.from_string("01000")
    with pytest.raises(BadInput):
        SignVector.from_string("01x")
    assert str(SignVector.psi(5, 2)) == "11011"
    assert len(SignVector.all_even(5)) == 16
    assert len(set(SignVector.all_even(7))) == 64


# ---------------------------------------------------------------- profiles


def test_profile_new_weierstrass_value_is_zero(ell11):
    P = weierstrass_point(ell11, 1)
    r = base_profile(ell11, P)
    assert r.values[1] == 0
    bad = list(r.values)
    bad[1] = ell11.F.one
    with pytest.raises(BadSquareRoot):
        profile_new(ell11, P, bad)


def test_profile_new_single_flip_breaks_product(ell11):
    P = make_point(ell11, 5, sqrt(ell11.f(ell11.F(5)))[0])
    r = base_profile(ell11, P)
    for i in range(3):
        vals = list(r.values)
        vals[i] = -vals[i]
        with pytest.raises(BadProduct):
            profile_new(ell11, P, vals)


def test_profile_new_rejects_infinity(ell11):
    with pytest.raises(InfinitePoint):
        profile_new(ell11, INFINITY, [0, 0, 0])
    with pytest.raises(InfinitePoint):
        base_profile(ell11, INFINITY)


def test_base_profile_valid_everywhere(curve):
    for P in all_points(curve):
        r = base_profile(curve, P)
        assert profile_new(curve, P, r.values) == r
        canonical = [sqrt(P.a - a)[0] for a in curve.roots]
        diff = [i for i, (u, v) in enumerate(zip(r.values, canonical)) if u != v]
        assert len(diff) <= 1
        if P.b == 0:
            assert diff == []


def test_flip_identity_and_involution(curve):
    P = all_points(curve)[2]
    r = base_profile(curve, P)
    n = len(curve.roots)
    assert flip(r, SignVector.zero(n)) == r
    for phi in SignVector.all_even(n):
        assert flip(flip(r, phi), phi) == r
        f = flip(r, phi)
        assert profile_new(curve, P, f.values) == f


@given(st.data())
def test_flip_action_composes_and_is_free(data):
    c = curve_new(13, 2, [0, 1, 2, 5, 7])
    a = data.draw(st.integers(0, 12))
    P = AffinePoint(c.F(a), sqrt(c.f(c.F(a)))[0])
    r = base_profile(c, P)
    phis = SignVector.all_even(5)
    p1, p2 = data.draw(st.sampled_from(phis)), data.draw(st.sampled_from(phis))
    assert flip(r, p1 + p2) == flip(flip(r, p1), p2)
    if flip(r, p1) == r:
        assert not any(p1.bits)


# ---------------------------------------------------------------- halves


def test_halves_match_brute_force_g1(ell11):
    F = ell11.F
    P = make_point(ell11, 5, F(0, 3))
    assert {_as_tuples(h.divisor) for h in enumerate_halves(ell11, P)} == HALVES_P5
    W = weierstrass_point(ell11, 0)
    halves = enumerate_halves(ell11, W)
    assert {_as_tuples(h.divisor) for h in halves} == HALVES_W0
    assert all(h.profile.values[0] == 0 for h in halves)


def test_half_postconditions(curve):
    e_count = 4 ** curve.g
    for P in all_points(curve):
        halves = enumerate_halves(curve, P)
        assert len(halves) == e_count
        assert len({h.divisor for h in halves}) == e_count
        target = point_to_mumford(curve, P)
        for h in halves:
            U = h.divisor.U
            assert U.degree == curve.g and U.is_monic()
            assert h.divisor.V.degree < curve.g
            assert all(U(a) for a in curve.roots)
            assert cantor_double(curve, h.divisor) == target


def test_genus3_counts():
    c = curve_new(11, 3, [0, 1, 2, 3, 5, 7, 9])
    P = AffinePoint(c.F(4), sqrt(c.f(c.F(4)))[0])
    halves = enumerate_halves(c, P)
    assert len({h.divisor for h in halves}) == 64


def test_round_trips(curve):
    for P in all_points(curve):
        for h in enumerate_halves(curve, P):
            r = profile_from_half(curve, P, h.divisor)
            assert r == h.profile
            assert half_from_profile(curve, r) == h.divisor


def test_profile_from_half_weierstrass(ell11):
    W = weierstrass_point(ell11, 3)
    for h in enumerate_halves(ell11, W):
        assert profile_from_half(ell11, W, h.divisor).values[2] == 0


def test_profile_from_half_rejects_non_halves(ell11):
    F = ell11.F
    P = make_point(ell11, 5, F(0, 3))
    with pytest.raises(NotAHalf):
        profile_from_half(ell11, P, point_to_mumford(ell11, P))
    with pytest.raises(NotAHalf):
        profile_from_half(ell11, P, MumfordDivisor.identity(F))


# ---------------------------------------------------------------- translation


def test_translate_matches_cantor(curve):
    for P in all_points(curve):
        for h in enumerate_halves(curve, P):
            for beta in curve.roots:
                W = point_to_mumford(curve, weierstrass_point(curve, beta))
                D = weierstrass_translate(curve, h.divisor, beta)
                assert D == cantor_add(curve, h.divisor, W)
                assert D.U.degree == curve.g and D.U.is_monic()
                assert weierstrass_translate(curve, D, beta) == h.divisor


def test_translate_errors(g2_p13):
    c = g2_p13
    F = c.F
    deg1 = point_to_mumford(c, AffinePoint(F(4), sqrt(c.f(F(4)))[0]))
    with pytest.raises(ThetaDegenerate):
        weierstrass_translate(c, deg1, 0)
    W01 = two_torsion_point(c, [0, 1])
    with pytest.raises(WeierstrassInSupport):
        weierstrass_translate(c, W01, 0)
    with pytest.raises(RootNotInR):
        weierstrass_translate(c, W01, 3)


# ---------------------------------------------------------------- sign theorem


def test_sign_theorem_full(curve):
    for P in all_points(curve):
        report = verify_sign_theorem(curve, P)
        assert report.passed
        assert len(report.checks) == 16 ** curve.g
        assert len(report.psi_checks) == (2 * curve.g + 1) * 4 ** curve.g


def test_single_root_flip_adds_weierstrass_point(curve):
    P = all_points(curve)[3]
    n = len(curve.roots)
    for h in enumerate_halves(curve, P):
        for l, beta in enumerate(curve.roots):
            r_beta = flip(h.profile, SignVector.psi(n, l))
            assert r_beta.values[l] == h.profile.values[l]
            W = point_to_mumford(curve, weierstrass_point(curve, beta))
            assert half_from_profile(curve, r_beta) == cantor_add(curve, h.divisor, W)


def test_weierstrass_base_point_negates_half(curve):
    n = len(curve.roots)
    for l, beta in enumerate(curve.roots):
        P = weierstrass_point(curve, beta)
        W = point_to_mumford(curve, P)
        for h in enumerate_halves(curve, P):
            r_l = flip(h.profile, SignVector.psi(n, l))
            assert r_l == SqrtProfile(P, tuple(-v for v in h.profile.values))
            a = half_from_profile(curve, r_l)
            assert a == neg(curve, h.divisor) == cantor_add(curve, h.divisor, W)


def test_zero_flip_is_identity(ell11):
    P = make_point(ell11, 5, ell11.F(0, 3))
    report = verify_sign_theorem(ell11, P)
    zero = [ch for ch in report.checks if not any(ch.phi.bits)]
    assert len(zero) == 4 and all(ch.ok for ch in zero)


def test_halving_rejects_a_outside_prime_field(ell11):
    F = ell11.F
    a = F.t
    b = sqrt(ell11.f(a))
    P = AffinePoint(a, b[0])
    with pytest.raises(BadInput):
        enumerate_halves(ell11, P)


def test_half_from_profile_unchecked_poly_shape(ell11):
    P = make_point(ell11, 5, ell11.F(0, 3))
    r = base_profile(ell11, P)
    D = half_from_profile(ell11, r, verify=False)
    assert D == half_from_profile(ell11, r)
    assert isinstance(D.U, Poly)
