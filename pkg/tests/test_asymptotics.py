import math

import pytest
from hypothesis import given, strategies as st

from hooksums.asymptotics import (
    c_theta,
    coords_from_decomposition,
    full_I,
    full_I_closed,
    full_I_product,
    g_hook,
    gaussian_J,
    hook_asymptotic,
    log_a_hook,
    log_a_hook_half,
    log_vandermonde,
    psi_selberg,
    scaled_I_k,
    selberg_I,
    single_f_hook_estimate,
    single_f_strip_estimate,
    strip_asymptotics,
    strip_coords,
)
from hooksums.errors import DegenerateShape, DomainError
from hooksums.partitions import HookDecomposition, Partition
from oracles import full_I_quad_21, selberg_quad

GRID = [(k, l) for k in (1, 2, 3) for l in (1, 2, 3)]


def test_g_examples():
    assert g_hook(1, 1, 0.5) == 0
    assert g_hook(2, 1, 0.5) == 0.5
    assert g_hook(1, 1, 1) == 0.5


def test_a_examples():
    assert log_a_hook(1, 1, 0.5) == pytest.approx(math.log(0.5), abs=1e-13)
    assert log_a_hook(2, 1, 0.5) == pytest.approx(math.log(0.25 * math.sqrt(3 / math.pi)), abs=1e-13)
    assert log_a_hook(1, 1, 1) == pytest.approx(-math.log(4 * math.sqrt(math.pi)), abs=1e-13)
    assert log_a_hook_half(2, 1) == pytest.approx(math.log(0.2443013), abs=1e-6)


def test_hook_formulas_reject_strips_and_bad_z():
    for bad in ((0, 1, 1), (1, 0, 1), (1, 1, 0), (1, 1, -2), (1.5, 1, 1)):
        with pytest.raises(DomainError):
            log_a_hook(*bad)
        with pytest.raises(DomainError):
            g_hook(*bad)
    with pytest.raises(DomainError):
        log_a_hook_half(0, 2)
    with pytest.raises(DomainError):
        strip_asymptotics(0, 1)


def test_strip_examples():
    for z in (0.5, 1.0, 2.5):
        form = strip_asymptotics(1, z)
        assert form.log_a == pytest.approx(0.0, abs=1e-14)
        assert form.g == 0 and form.log_base == 0
        assert form.evaluate(17) == pytest.approx(1.0, rel=1e-13)
    assert strip_asymptotics(2, 1).g == 1.5


def test_strip_k2_z_half_matches_central_binomial_growth():
    # sum over <=2 rows of f^nu is C(n, floor(n/2)) ~ sqrt(2/pi) 2^n / sqrt(n)
    form = strip_asymptotics(2, 0.5)
    assert form.g == 0.5
    assert form.a == pytest.approx(math.sqrt(2 / math.pi), rel=1e-13)


def test_c_theta_examples():
    log_c, theta = c_theta(1, 1)
    assert log_c == pytest.approx(-0.5 * math.log(2 * math.pi), abs=1e-14)
    assert theta == 0.5
    assert c_theta(2, 1)[1] == 1.5
    assert c_theta(3, 2) == c_theta(2, 3)


def test_psi_and_selberg_examples():
    for beta in (0.3, 1.0, 2.0, 5.0):
        assert psi_selberg(1, beta) == pytest.approx(0.5 * math.log(2 * math.pi / beta), abs=1e-14)
        assert selberg_I(1, beta) == pytest.approx(0.0, abs=1e-14)
    # s=2, beta=2: (2 pi) 2^(-2) Gamma(3)/Gamma(2) = pi
    assert psi_selberg(2, 2.0) == pytest.approx(math.log(math.pi), abs=1e-14)
    with pytest.raises(DomainError):
        psi_selberg(0, 1.0)
    with pytest.raises(DomainError):
        psi_selberg(2, 0.0)


@pytest.mark.parametrize("beta", [0.5, 1.0, 2.0, 3.0])
def test_selberg_I_two_points_by_quadrature(beta):
    assert math.exp(selberg_I(2, beta)) == pytest.approx(selberg_quad(2, beta), rel=1e-9)


@pytest.mark.parametrize("beta", [1.0, 2.0])
def test_selberg_I_three_points_by_quadrature(beta):
    assert math.exp(selberg_I(3, beta)) == pytest.approx(selberg_quad(3, beta), rel=1e-7)


@pytest.mark.parametrize("z", [0.5, 1.0])
def test_full_I_21_by_quadrature(z):
    assert math.exp(full_I(2, 1, z)) == pytest.approx(full_I_quad_21(z), rel=1e-7)


def test_full_I_examples():
    for z in (0.5, 1.0, 2.0, 3.7):
        assert full_I(1, 1, z) == pytest.approx(math.log(0.5 * math.sqrt(math.pi / z)), abs=1e-14)
        assert gaussian_J(1, 1, z) == pytest.approx(math.sqrt(math.pi / (4 * z)), rel=1e-15)
    log_c, _ = c_theta(2, 1)
    assert full_I(2, 1, 0.5) == pytest.approx(log_a_hook(2, 1, 0.5) - log_c, abs=1e-13)


def test_scaled_I_k_is_rescaled_selberg():
    for k, l in GRID:
        for z in (0.5, 1.0, 1.5):
            power = (k * (k - 1) * z + k - 1) / 2.0
            expected = -power * math.log(k + l) + selberg_I(k, 2 * z)
            assert scaled_I_k(k, l, z) == pytest.approx(expected, abs=1e-12)
    assert scaled_I_k(1, 1, 0.7) == pytest.approx(0.0, abs=1e-14)


def test_assembly_routes_agree():
    for k, l in GRID:
        for z in (0.5, 1.0, 1.5):
            log_c, theta = c_theta(k, l)
            assert abs(log_a_hook(k, l, z) - (2 * z * log_c + full_I(k, l, z))) <= 1e-12
            assert abs(g_hook(k, l, z) - (2 * z * theta - (k + l - 1) / 2)) <= 1e-12


def test_full_I_paths_agree_up_to_four():
    for k in range(1, 5):
        for l in range(1, 5):
            for z in (0.5, 1.0, 2.0):
                assert abs(full_I_product(k, l, z) - full_I_closed(k, l, z)) <= 1e-12


def test_half_specialisation():
    for k in range(1, 5):
        for l in range(1, 5):
            assert abs(log_a_hook_half(k, l) - log_a_hook(k, l, 0.5)) <= 1e-12


def test_strip_reduction():
    for k in (1, 2, 3):
        for z in (0.5, 1.0):
            form = strip_asymptotics(k, z)
            assert abs(log_a_hook(k, 0, z, strip_ok=True) - form.log_a) <= 1e-10
            assert abs(g_hook(k, 0, z, strip_ok=True) - form.g) <= 1e-10


@given(st.integers(1, 4), st.integers(1, 4), st.floats(0.05, 5.0))
def test_symmetry(k, l, z):
    assert g_hook(k, l, z) == g_hook(l, k, z)
    assert log_a_hook(k, l, z) == log_a_hook(l, k, z)
    assert full_I(k, l, z) == pytest.approx(full_I(l, k, z), abs=1e-13)


@pytest.mark.parametrize(
    "k, l, z, a, g, base",
    [
        (1, 1, 0.5, 0.5, 0.0, 2.0),
        (2, 1, 0.5, 0.25 * math.sqrt(3 / math.pi), 0.5, 3.0),
        (1, 1, 1.0, 1 / (4 * math.sqrt(math.pi)), 0.5, 4.0),
    ],
)
def test_hook_asymptotic_examples(k, l, z, a, g, base):
    form = hook_asymptotic(k, l, z)
    assert form.a == pytest.approx(a, rel=1e-12)
    assert form.g == g
    assert form.base == pytest.approx(base, rel=1e-15)
    n = 50
    assert form.evaluate(n) == pytest.approx(a * base**n / n**g, rel=1e-12)


def test_log_eval_stays_finite_for_huge_n():
    form = hook_asymptotic(3, 3, 2.0)
    assert math.isfinite(form.log_eval(10**9))
    with pytest.raises(OverflowError):
        form.evaluate(10**6)


def test_log_vandermonde():
    assert log_vandermonde([]) == 0.0
    assert log_vandermonde([0.3]) == 0.0
    assert log_vandermonde([3.0, 1.0, 0.0]) == pytest.approx(math.log(2 * 3 * 1))
    with pytest.raises(DegenerateShape):
        log_vandermonde([1.0, 1.0])
    with pytest.raises(DomainError):
        log_vandermonde([0.0, 1.0])


def test_coords_examples():
    # balanced: nu = mu = (n_bar/2)
    d = HookDecomposition(Partition((5,)), Partition((5,)), 1, 1)
    c = coords_from_decomposition(d)
    assert c.alpha == (0.0,) and c.beta == (0.0,)
    d = HookDecomposition(Partition((8,)), Partition((2,)), 1, 1)
    c = coords_from_decomposition(d)
    assert c.alpha[0] == pytest.approx(3 / math.sqrt(10)) and c.beta[0] == pytest.approx(-c.alpha[0])
    d = HookDecomposition(Partition(()), Partition(()), 1, 1)
    with pytest.raises(DomainError):
        coords_from_decomposition(d)


@st.composite
def decompositions(draw):
    k = draw(st.integers(1, 4))
    l = draw(st.integers(1, 4))
    nu = sorted(draw(st.lists(st.integers(0, 400), min_size=k, max_size=k)), reverse=True)
    mu = sorted(draw(st.lists(st.integers(0, 400), min_size=l, max_size=l)), reverse=True)
    if sum(nu) + sum(mu) == 0:
        nu[0] = 1
    return HookDecomposition(
        Partition([x for x in nu if x]), Partition([x for x in mu if x]), k, l
    )


@given(decompositions())
def test_coords_invariants(d):
    c = coords_from_decomposition(d)
    assert len(c.alpha) == d.k and len(c.beta) == d.l
    assert abs(math.fsum(c.alpha) + math.fsum(c.beta)) <= 1e-12
    assert c.alpha_sum == pytest.approx(math.fsum(c.alpha), abs=1e-15)
    # the affine map inverts: nu_i = n_bar/(k+l) + alpha_i sqrt(n_bar)
    root, centre = math.sqrt(d.n_bar), d.n_bar / (d.k + d.l)
    assert all(abs(centre + a * root - d.nu.part(i + 1)) <= 1e-9 for i, a in enumerate(c.alpha))


@given(decompositions())
def test_strip_exponent_identity(d):
    c = coords_from_decomposition(d)
    k, m = d.k, d.k + d.l
    lhs = 0.5 * k * math.fsum(x * x for x in c.a)
    rhs = 0.5 * m * math.fsum(x * x for x in c.alpha) - m / (2 * k) * c.alpha_sum**2
    assert abs(lhs - rhs) <= 1e-10 * max(1.0, abs(rhs))


def test_single_estimates():
    # k = 1 strip: f^(n) = 1 and the estimate is exactly 1
    assert single_f_strip_estimate(1, (0.0,), 40) == pytest.approx(0.0, abs=1e-12)
    # gamma_2 = 4 / sqrt(2 pi); at a = (1/2, -1/2), n = 1: gamma_2 * 1 * e^(-1/2) * 2
    expected = math.log(4 / math.sqrt(2 * math.pi)) - 0.5 + math.log(2.0)
    assert single_f_strip_estimate(2, (0.5, -0.5), 1) == pytest.approx(expected, abs=1e-14)
    with pytest.raises(DegenerateShape):
        single_f_strip_estimate(2, (0.0, 0.0), 10)
    with pytest.raises(DomainError):
        single_f_strip_estimate(2, (0.0,), 10)
    # k = l = 1 never degenerates
    d = HookDecomposition(Partition((3,)), Partition((3,)), 1, 1)
    assert math.isfinite(single_f_hook_estimate(d))
    d = HookDecomposition(Partition((3, 3)), Partition((2,)), 2, 1)
    with pytest.raises(DegenerateShape):
        single_f_hook_estimate(d)


def test_strip_coords():
    assert strip_coords((6, 4), 2) == pytest.approx((1 / math.sqrt(10), -1 / math.sqrt(10)))
    assert strip_coords((5,), 2)[1] == pytest.approx(-2.5 / math.sqrt(5))
    with pytest.raises(DomainError):
        strip_coords((2, 1, 1), 2)
