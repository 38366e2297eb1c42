"""Property-based checks of the algebraic identities behind the bounds."""

import numpy as np
from hypothesis import assume, given, settings, strategies as st

import uncertainty_lab as ul


def _finite(lo=-2.0, hi=2.0):
    return st.floats(min_value=lo, max_value=hi, allow_nan=False, allow_infinity=False)


@st.composite
def hermitian(draw, dim):
    flat = draw(
        st.lists(_finite(), min_size=2 * dim * dim, max_size=2 * dim * dim)
    )
    arr = np.array(flat[: dim * dim]) + 1j * np.array(flat[dim * dim:])
    m = arr.reshape(dim, dim)
    return ul.validate_observable((m + m.conj().T) / 2.0)


@st.composite
def state(draw, dim):
    flat = draw(st.lists(_finite(), min_size=2 * dim, max_size=2 * dim))
    raw = np.array(flat[:dim]) + 1j * np.array(flat[dim:])
    assume(np.linalg.norm(raw) > 1e-3)
    return ul.StateVector.normalized(raw)


@st.composite
def pair_and_state(draw):
    dim = draw(st.integers(min_value=2, max_value=5))
    return draw(hermitian(dim)), draw(hermitian(dim)), draw(state(dim))


@st.composite
def triple_and_state(draw):
    dim = draw(st.integers(min_value=2, max_value=5))
    return draw(hermitian(dim)), draw(hermitian(dim)), draw(hermitian(dim)), draw(state(dim))


@st.composite
def vectors(draw):
    dim = draw(st.integers(min_value=2, max_value=5))
    flat = draw(st.lists(_finite(), min_size=4 * dim, max_size=4 * dim))
    u = np.array(flat[:dim]) + 1j * np.array(flat[dim:2 * dim])
    v = np.array(flat[2 * dim:3 * dim]) + 1j * np.array(flat[3 * dim:])
    return u, v


@given(vectors())
def test_inner_conjugate_symmetry(uv):
    u, v = uv
    assert abs(ul.inner(u, v) - np.conj(ul.inner(v, u))) <= 1e-12


@given(pair_and_state())
def test_commutator_antisymmetry(abs_):
    a, b, _ = abs_
    assert np.array_equal(ul.commutator(a, b), -ul.commutator(b, a))


@given(pair_and_state())
def test_deviation_vector_orthogonal_to_state(abs_):
    a, _, phi = abs_
    dv = ul.deviation_vector(a, phi)
    assert abs(ul.inner(phi, dv.vec)) <= ul.DEFAULT_TOLERANCES.tol_zero


@given(pair_and_state(), _finite(-5.0, 5.0))
def test_std_dev_shift_invariance(abs_, c):
    a, _, phi = abs_
    shifted = a + c * ul.identity(a.dim)
    assert abs(ul.std_dev(shifted, phi) - ul.std_dev(a, phi)) <= 1e-12


@given(pair_and_state())
def test_correlation_conjugate_symmetry(abs_):
    a, b, phi = abs_
    assert abs(ul.correlation(a, b, phi) - np.conj(ul.correlation(b, a, phi))) <= 1e-10


@given(triple_and_state())
def test_correlation_additivity_in_second_slot(abbs):
    a, b1, b2, phi = abbs
    lhs = ul.correlation(a, b1 + b2, phi)
    rhs = ul.correlation(a, b1, phi) + ul.correlation(a, b2, phi)
    assert abs(lhs - rhs) <= 1e-10


@given(pair_and_state())
@settings(max_examples=150)
def test_bound_chain(abs_):
    a, b, phi = abs_
    rep = ul.evaluate(a, b, phi)  # raises on any internal inconsistency
    assert rep.hr_bound <= rep.schrodinger_bound + 1e-10
    assert abs(rep.schrodinger_bound - rep.general_bound) <= 1e-10
    assert rep.product >= rep.general_bound - 1e-10


@given(pair_and_state())
def test_pearson_in_unit_interval(abs_):
    a, b, phi = abs_
    try:
        r = ul.pearson(a, b, phi)
    except ul.DegenerateSpread:
        return  # undefined on eigenstates; nothing to assert
    assert 0.0 <= r <= 1.0
