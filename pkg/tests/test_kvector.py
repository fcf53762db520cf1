import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hyperlab.algebra import GF, prime_power
from hyperlab.errors import StructuralError, TooLargeError
from hyperlab.hyper import Coset, build_factor_hyperfield, krasner_hyperfield
from hyperlab.kvector import (
    KVectorSpace,
    basis_cardinalities,
    dimension,
    find_basis,
    is_independent,
    spans,
)
from hyperlab.projective import incidence_hypergroup, projective_space

SPACES = [(3, 1), (4, 1), (5, 1), (3, 2)]


def factor_space(q, n):
    p, k = prime_power(q)
    A = GF(p, k * (n + 1))
    return A, build_factor_hyperfield(A, q - 1)


def test_k_has_dimension_one():
    V = KVectorSpace(krasner_hyperfield())
    assert find_basis(V) == [1]
    assert dimension(V) == 1


def test_f9_mod_f3_examples():
    A, H = factor_space(3, 1)
    V = KVectorSpace(H.additive())
    idx = {label: k for k, label in enumerate(H.labels)}
    one, i = idx[str(A.one)], idx[str(A.gen)]
    assert is_independent(V, {one})
    assert is_independent(V, {one, i})
    assert not is_independent(V, {0, one})
    assert spans(V, {one, i})
    assert len(find_basis(V)) == 2


@pytest.mark.parametrize("q,n", SPACES)
def test_projective_dimension(q, n):
    V = KVectorSpace(incidence_hypergroup(projective_space(q, n)))
    assert dimension(V) == n + 1


@pytest.mark.parametrize("q,n", [(3, 1), (3, 2), (4, 1), (5, 1)])
def test_factor_dimension(q, n):
    _, H = factor_space(q, n)
    assert dimension(KVectorSpace(H.additive())) == n + 1


@pytest.mark.parametrize("q,n", SPACES)
def test_basis_size_independent_of_order(q, n):
    V = KVectorSpace(incidence_hypergroup(projective_space(q, n)))
    sizes = basis_cardinalities(V, seed=7, orders=20)
    assert len(sizes) == 21 and set(sizes) == {n + 1}


@pytest.mark.parametrize("q,n", [(3, 1), (3, 2), (4, 1), (4, 2), (5, 1), (5, 2)])
def test_field_basis_maps_to_hyper_basis(q, n):
    """An F_q-basis 1, g, ..., g^n of F_{q^(n+1)} gives a basis of the factor table."""
    A, H = factor_space(q, n)
    if H.n > 50:
        pytest.skip("carrier above the subset-sum cap")
    T = A.subgroup(q - 1)
    g = A.primitive_element
    idx = {label: k for k, label in enumerate(H.labels)}
    B = [idx[str(Coset.of(g**i, T))] for i in range(n + 1)]
    V = KVectorSpace(H.additive())
    assert len(set(B)) == n + 1
    assert is_independent(V, B) and spans(V, B)


def test_bases_are_nonzero_and_distinct():
    V = KVectorSpace(incidence_hypergroup(projective_space(4, 1)))
    B = find_basis(V)
    assert V.zero not in B and len(B) == len(set(B))


def test_not_a_k_vector_space():
    with pytest.raises(StructuralError):
        KVectorSpace(build_factor_hyperfield(GF(5), 1).additive())


def test_carrier_cap():
    with pytest.raises(TooLargeError):
        KVectorSpace(incidence_hypergroup(projective_space(7, 2)))


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(SPACES), st.data())
def test_subsets_of_a_basis_are_independent(space, data):
    q, n = space
    V = KVectorSpace(incidence_hypergroup(projective_space(q, n)))
    order = data.draw(st.permutations(V.nonzero()))
    B = find_basis(V, order)
    sub = data.draw(st.sets(st.sampled_from(B)))
    assert is_independent(V, sub)
    assert spans(V, B)
    extra = data.draw(st.sampled_from([x for x in V.nonzero() if x not in B]))
    assert not is_independent(V, set(B) | {extra})
