import cmath

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ldicodes.fixtures import STEANE_PRESCRIPTIVE_LDI
from ldicodes.phi import (
    INTEGERS,
    NotPrimeError,
    PauliWord,
    PhiVector,
    Ring,
    compose,
    lift,
    pauli_weight,
    phi_map,
    realize_dense,
    symplectic_product,
)

# X (x) Z^-1 (x) I (x) XZ
EXAMPLE_WORD = ((1, 0), (0, -1), (0, 0), (1, 1))


def vec(row, ring=INTEGERS):
    return PhiVector.from_row(row, ring)


def test_phi_map_mod2():
    assert phi_map(PauliWord(EXAMPLE_WORD, Ring.mod(2))).row == (1, 0, 0, 1, 0, 1, 0, 1)


def test_phi_map_integers():
    assert phi_map(PauliWord(EXAMPLE_WORD, INTEGERS)).row == (1, 0, 0, 1, 0, -1, 0, 1)


@pytest.mark.parametrize("ring", [INTEGERS, Ring.mod(2), Ring.mod(5)])
def test_phi_map_identity(ring):
    assert phi_map(PauliWord.identity(3, ring)) == PhiVector.zeros(3, ring)


def test_ring_rejects_composite():
    with pytest.raises(NotPrimeError):
        Ring.mod(4)


def test_phivector_range_checked():
    with pytest.raises(ValueError):
        PhiVector((2,), (0,), Ring.mod(2))


def test_lift_systems():
    assert [lift(v, 5) for v in range(5)] == [0, 1, 2, -2, -1]
    assert [lift(v, 2) for v in range(2)] == [0, 1]
    assert [lift(v, 3, "standard") for v in (-1, 4)] == [2, 1]


def test_symplectic_examples():
    u, v = vec((1, 1, 0, 0)), vec((0, 0, 1, 1))
    assert symplectic_product(u, v) == 2
    assert symplectic_product(u, u) == 0
    rows = [vec(r) for r in STEANE_PRESCRIPTIVE_LDI]
    assert symplectic_product(rows[0], rows[5]) == 0


def test_symplectic_length_mismatch():
    with pytest.raises(ValueError):
        symplectic_product(vec((1, 0)), vec((1, 0, 0, 0)))


def test_compose_examples():
    u = vec((1, 0, 0, 1), Ring.mod(2))
    assert compose(u, PhiVector.zeros(2, Ring.mod(2))) == u
    assert compose(u, u).row == (0, 0, 0, 0)
    w = vec((1, 0, 0, 1))
    assert compose(w, w).row == (2, 0, 0, 2)
    with pytest.raises(ValueError):
        compose(u, w)


def test_pauli_weight_examples():
    assert pauli_weight(vec((1, 0, 0, 1, 0, 1, 0, 1))) == 3
    assert pauli_weight(PhiVector.zeros(4)) == 0
    assert pauli_weight(vec((0, 0, 1, 1))) == 2


rows_n3 = st.lists(st.integers(-6, 6), min_size=6, max_size=6)


@given(rows_n3, rows_n3, rows_n3)
def test_product_antisymmetric_and_bilinear(a, b, c):
    u, v, w = vec(a), vec(b), vec(c)
    assert symplectic_product(u, v) == -symplectic_product(v, u)
    assert symplectic_product(compose(u, w), v) == symplectic_product(u, v) + symplectic_product(w, v)


@given(rows_n3, rows_n3, st.sampled_from([2, 3, 5, 7]))
def test_reduction_congruence(a, b, q):
    u, v = vec(a), vec(b)
    ur, vr = u.reduce(Ring.mod(q)), v.reduce(Ring.mod(q))
    assert symplectic_product(ur, vr) % q == symplectic_product(u, v) % q


@given(st.lists(st.tuples(st.integers(0, 4), st.integers(0, 4)), min_size=1, max_size=4))
def test_phi_bijective_on_reduced_words(factors):
    ring = Ring.mod(5)
    u = phi_map(PauliWord(tuple(factors), ring))
    back = PauliWord(tuple(zip(u.x, u.z)), ring)
    assert back.factors == tuple(factors)


# -- dense oracle ----------------------------------------------------------


def test_dense_x_qubit():
    m = realize_dense(vec((1, 0)), 2).matrix
    assert np.allclose(m, [[0, 1], [1, 0]])


def test_dense_z_qutrit():
    w = cmath.exp(2j * cmath.pi / 3)
    m = realize_dense(vec((0, 1)), 3).matrix
    assert np.allclose(m, np.diag([1, w, w * w]))


def test_dense_phase_relation_qutrit():
    # X Z = w^-1 Z X, while the symplectic product of (1|0), (0|1) is +1
    q = 3
    w = cmath.exp(2j * cmath.pi / q)
    u, v = vec((1, 0)), vec((0, 1))
    a, b = realize_dense(u, q).matrix, realize_dense(v, q).matrix
    c = symplectic_product(u, v)
    assert c == 1
    assert np.allclose(a @ b, w ** (-c) * (b @ a))


def test_dense_cap():
    with pytest.raises(ValueError):
        realize_dense(PhiVector.zeros(4), 3)


@settings(max_examples=60)
@given(st.sampled_from([2, 3]), st.integers(1, 3), st.data())
def test_dense_phase_matches_product(q, n, data):
    if q**n > 64:
        return
    entries = st.lists(st.integers(0, q - 1), min_size=2 * n, max_size=2 * n)
    u, v = vec(data.draw(entries)), vec(data.draw(entries))
    w = cmath.exp(2j * cmath.pi / q)
    a, b = realize_dense(u, q).matrix, realize_dense(v, q).matrix
    assert np.allclose(a @ b, w ** (-symplectic_product(u, v)) * (b @ a), atol=1e-10)
