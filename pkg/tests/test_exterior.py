from itertools import combinations
from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from epwcalc.exterior import (
    DIM3,
    ExteriorVector,
    GradeError,
    SymplecticSpace,
    merge_sign,
    vol,
)
from epwcalc.linalg import Subspace
from epwcalc.scalars import GF, QQ, FieldMismatch
from epwcalc.rng import derive_rng

F = GF(10007)
SP = SymplecticSpace(F)
SQ = SymplecticSpace(QQ)


def vec(field, grade, coords):
    return ExteriorVector(field, grade, coords)


def rand_vec(field, grade, rnd):
    return ExteriorVector(field, grade, [field.random(rnd) for _ in range(comb(6, grade))])


def test_basis_wedge_conventions():
    e0 = ExteriorVector.basis(F, 0)
    e1 = ExteriorVector.basis(F, 1)
    assert (e0 ^ e0).is_zero()
    assert (e0 ^ e1) == ExteriorVector.basis(F, 0, 1)
    e012 = ExteriorVector.basis(F, 0, 1, 2)
    e345 = ExteriorVector.basis(F, 3, 4, 5)
    assert vol(e012 ^ e345) == 1
    assert merge_sign((0, 2), (1,)) == -1


def test_wedge_grade_overflow():
    a = ExteriorVector.basis(F, 0, 1, 2)
    b = ExteriorVector.basis(F, 0, 1, 2, 3)
    with pytest.raises(GradeError):
        a.wedge(b)


def test_mixed_field_wedge_is_an_error():
    a = ExteriorVector.basis(F, 0)
    b = ExteriorVector.basis(QQ, 1)
    with pytest.raises(FieldMismatch):
        a.wedge(b)


grades = st.sampled_from([(1, 1), (1, 2), (2, 1), (1, 3), (2, 2), (3, 3), (2, 3)])


@given(grades, st.integers(0, 2**30))
def test_graded_anticommutativity(gr, seed):
    j, k = gr
    rnd = derive_rng(seed, "anticomm")
    a, b = rand_vec(F, j, rnd), rand_vec(F, k, rnd)
    lhs = a ^ b
    rhs = (b ^ a).scale((-1) ** (j * k))
    assert lhs == rhs


@given(st.integers(0, 2**30))
def test_wedge_associative_and_bilinear(seed):
    rnd = derive_rng(seed, "assoc")
    a, b, c = rand_vec(F, 1, rnd), rand_vec(F, 2, rnd), rand_vec(F, 2, rnd)
    assert (a ^ b) ^ c == a ^ (b ^ c)
    s = F.random(rnd)
    assert (a.scale(s)) ^ b == (a ^ b).scale(s)
    assert (b.add(c)) ^ a == (b ^ a).add(c ^ a)


@given(st.integers(0, 2**30))
def test_form_antisymmetric_and_isotropic_on_self(seed):
    rnd = derive_rng(seed, "form")
    a, b = rand_vec(F, 3, rnd), rand_vec(F, 3, rnd)
    assert SP.form(a, a) == 0
    assert SP.form(a, b) == F.neg(SP.form(b, a))


def test_gram_rank_20():
    assert SP.gram().rank() == 20
    assert SQ.gram().rank() == 20


@given(st.integers(0, 2**30))
def test_fiber_is_lagrangian_and_scale_invariant(seed):
    rnd = derive_rng(seed, "fiber")
    v = rand_vec(F, 1, rnd)
    if v.is_zero():
        return
    fib = SP.fiber(v)
    assert fib.dim == 10
    assert SP.is_lagrangian(fib)
    lam = F.random(rnd)
    if not F.is_zero(lam):
        assert SP.fiber(v.scale(lam)) == fib


def test_fiber_of_e0_is_span_of_subsets_containing_0():
    v = ExteriorVector.basis(F, 0)
    fib = SP.fiber(v)
    spanning = []
    for s in combinations(range(6), 3):
        if 0 in s:
            spanning.append(ExteriorVector.basis(F, *s).coords)
    direct = Subspace.from_spanning(F, DIM3, spanning)
    assert direct == fib
    assert SP.is_lagrangian(direct)


def test_fiber_rejects_zero_vector():
    with pytest.raises(ValueError):
        SP.fiber(ExteriorVector.zero(F, 1))


def test_perp_examples(rng):
    A = SP.random_lagrangian(rng)
    assert SP.perp(A) == A
    assert SP.perp(Subspace.zero(F, DIM3)) == Subspace.full(F, DIM3)
    u = Subspace.from_spanning(F, DIM3, A.basis()[:9])
    pu = SP.perp(u)
    assert pu.dim == 11
    assert pu.contains_subspace(u)


def test_lagrangian_completion(rng):
    already = SP.random_lagrangian(rng)
    assert SP.lagrangian_completion(already, rng) == already
    seed = Subspace.from_spanning(F, DIM3, [ExteriorVector.basis(F, 0, 1, 2).coords])
    L = SP.lagrangian_completion(seed, rng)
    assert SP.is_lagrangian(L)
    assert L.contains(ExteriorVector.basis(F, 0, 1, 2).coords)
    not_isotropic = Subspace.from_spanning(
        F, DIM3, [ExteriorVector.basis(F, 0, 1, 2).coords, ExteriorVector.basis(F, 3, 4, 5).coords]
    )
    with pytest.raises(ValueError):
        SP.lagrangian_completion(not_isotropic, rng)


def test_decomposable_of_is_basis_independent(rng):
    w = Subspace.from_spanning(F, 6, [[1, 2, 3, 4, 5, 6], [0, 1, 0, 2, 0, 3], [0, 0, 1, 1, 1, 1]])
    d1 = SP.decomposable_of(w)
    # a different spanning set of the same subspace
    rows = w.basis()
    mixed = [
        [F.add(a, b) for a, b in zip(rows[0], rows[1])],
        [F.add(F.mul(F.of(3), a), b) for a, b in zip(rows[1], rows[2])],
        rows[2],
    ]
    d2 = SP.decomposable_of(Subspace.from_spanning(F, 6, mixed))
    assert d1 == d2
    lead = next(c for c in d1.coords if not F.is_zero(c))
    assert lead == F.one


def test_decomposable_of_standard_basis():
    w = Subspace.from_spanning(F, 6, [[1, 0, 0, 0, 0, 0], [0, 1, 0, 0, 0, 0], [0, 0, 1, 0, 0, 0]])
    assert SP.decomposable_of(w) == ExteriorVector.basis(F, 0, 1, 2)


def test_decomposable_orthogonality_iff_intersection(rng):
    for _ in range(30):
        w1 = _rand_sub(rng, 3)
        w2 = _rand_sub(rng, 3)
        d1, d2 = SP.decomposable_of(w1), SP.decomposable_of(w2)
        assert F.is_zero(SP.form(d1, d2)) == (w1.meet(w2).dim > 0)


def _rand_sub(rnd, dim):
    while True:
        s = Subspace.from_spanning(F, 6, [[F.random(rnd) for _ in range(6)] for _ in range(dim)])
        if s.dim == dim:
            return s


def test_perp_meet_join_for_lagrangian_pairs(rng):
    for _ in range(5):
        A = SP.random_lagrangian(rng)
        B = SP.random_lagrangian(rng)
        assert SP.perp(A.meet(B)) == A.join(B)


def test_is_lagrangian_rejects_nine_dimensional_isotropic(rng):
    A = SP.random_lagrangian(rng)
    u = Subspace.from_spanning(F, DIM3, list(A.basis()[:9]))
    assert SP.is_isotropic(u)
    assert not SP.is_lagrangian(u)
