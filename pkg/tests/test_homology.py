"""Bar chains, coset bookkeeping, and the transfer chain map."""

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from padicreg.arith import RingParams
from padicreg.errors import NonUnitError, ParameterError, SizeGuardError
from padicreg.homology import (
    BarChain,
    GroupSpec,
    bar_differential,
    check_chain_map,
    coset_data,
    factorization_check,
    is_boundary,
    matrix_group_spec,
    perm_closure,
    perm_group_spec,
    perm_identity,
    perm_inv,
    perm_is_even,
    perm_mul,
    symmetric_group,
    t_tilde,
    transfer_T,
    section_s,
    verify_reps,
)
from padicreg.homology import _lattice_contains
from padicreg.matforms import OMatrix

# image tuples, 0-based: E3 identity, T12 swaps 0,1, C123 is the 3-cycle
E3 = (0, 1, 2)
T12 = (1, 0, 2)
T13 = (2, 1, 0)
C123 = (1, 2, 0)
C132 = (2, 0, 1)


def a3_spec(reps=(E3, T12)):
    return perm_group_spec(symmetric_group(3), perm_is_even, reps=reps)


def s4_a4_spec():
    return perm_group_spec(symmetric_group(4), perm_is_even)


def s4_d4_spec():
    d4 = set(perm_closure([(1, 2, 3, 0), (2, 1, 0, 3)]))
    assert len(d4) == 8
    return perm_group_spec(symmetric_group(4), lambda g: g in d4)


def rand_perm(rng, n):
    xs = list(range(n))
    rng.shuffle(xs)
    return tuple(xs)


def rand_chain(rng, elements, n, nterms):
    terms = {}
    for _ in range(nterms):
        key = tuple(rng.choice(elements) for _ in range(n))
        terms[key] = terms.get(key, 0) + rng.randrange(-3, 4)
    return BarChain(n, terms)


def rand_invertible(rng, params, N):
    while True:
        mat = OMatrix(
            params,
            tuple(
                tuple(
                    params.from_coeffs(
                        [rng.randrange(params.pM) for _ in range(params.d)]
                    )
                    for _ in range(N)
                )
                for _ in range(N)
            ),
        )
        try:
            mat.inverse()
        except NonUnitError:
            continue
        return mat


def test_perm_composition_is_right_action():
    # apply (12) then (123): 0 -> 1 -> 2
    assert perm_mul(T12, C123) == (2, 1, 0)
    assert perm_mul(C123, T12) == (0, 2, 1)
    for g in symmetric_group(3):
        assert perm_mul(g, perm_inv(g)) == E3


def test_perm_closure_sizes():
    assert len(perm_closure([C123])) == 3
    assert set(perm_closure([T12, C123])) == set(symmetric_group(3))


def test_coset_data_frozen_s3():
    spec = a3_spec()
    h, j = coset_data(spec, 0, T12)
    assert (h, j) == (E3, 1)
    h, j = coset_data(spec, 1, T12)
    assert (h, j) == (E3, 0)
    h, j = coset_data(spec, 1, C123)
    assert (h, j) == (C132, 1)
    for i in range(2):
        assert coset_data(spec, i, E3) == (E3, i)


def test_transfer_frozen_s3():
    spec = a3_spec()
    got = transfer_T(spec, BarChain.basis((C123,)))
    assert got == BarChain(1, {(C123,): 1, (C132,): 1})


def test_transfer_of_identity_tuples():
    spec = s4_d4_spec()
    m = spec.index
    assert m == 3
    ident = perm_identity(4)
    assert transfer_T(spec, BarChain.basis((ident, ident))) == BarChain(
        2, {(ident, ident): m}
    )
    # degree 0 the transfer is multiplication by the index
    assert transfer_T(spec, BarChain.basis(())) == BarChain(0, {(): m})


def test_differential_frozen_shape():
    spec = s4_a4_spec()
    rng = random.Random(7)
    for _ in range(20):
        g, h = rand_perm(rng, 4), rand_perm(rng, 4)
        got = bar_differential(spec, BarChain.basis((g, perm_mul(g, h))))
        want = BarChain(1, {})
        want = want + BarChain(1, {(h,): 1})
        want = want + BarChain(1, {(perm_mul(g, h),): -1})
        want = want + BarChain(1, {(g,): 1})
        assert got == want


def test_differential_squares_to_zero():
    spec = s4_a4_spec()
    rng = random.Random(11)
    for _ in range(10):
        c = rand_chain(rng, symmetric_group(4), 3, 5)
        assert bar_differential(spec, bar_differential(spec, c)).is_zero()


def test_coset_permutation_antihomomorphism():
    spec = s4_d4_spec()
    elems = symmetric_group(4)
    rng = random.Random(13)
    m = spec.index
    for _ in range(40):
        g, gp = rng.choice(elems), rng.choice(elems)
        pi_g = tuple(coset_data(spec, i, g)[1] for i in range(m))
        pi_gp = tuple(coset_data(spec, i, gp)[1] for i in range(m))
        pi_ggp = tuple(
            coset_data(spec, i, perm_mul(g, gp))[1] for i in range(m)
        )
        assert pi_ggp == perm_mul(pi_g, pi_gp)
        for i in range(m):
            h_g, j = coset_data(spec, i, g)
            h_ggp, _ = coset_data(spec, i, perm_mul(g, gp))
            h_tail, _ = coset_data(spec, j, gp)
            assert perm_mul(perm_inv(h_g), h_ggp) == h_tail


@pytest.mark.parametrize(
    "make", [a3_spec, s4_a4_spec, s4_d4_spec], ids=["a3", "a4", "d4"]
)
def test_chain_map_permutation_groups(make):
    spec = make()
    n_letters = len(spec.identity)
    rng = random.Random(17 + n_letters)
    elems = symmetric_group(n_letters)
    for n in (1, 2, 3):
        for _ in range(6):
            c = rand_chain(rng, elems, n, 4)
            assert check_chain_map(spec, c)


@settings(max_examples=40, deadline=None)
@given(
    st.lists(
        st.tuples(
            st.permutations(range(3)),
            st.permutations(range(3)),
            st.integers(-4, 4),
        ),
        min_size=1,
        max_size=5,
    )
)
def test_chain_map_property_s3(raw):
    spec = a3_spec()
    c = BarChain(
        2, {(tuple(a), tuple(b)): v for a, b, v in raw if v}
    )
    assert check_chain_map(spec, c)


def test_factorization_through_section():
    rng = random.Random(19)
    for make in (a3_spec, s4_d4_spec):
        spec = make()
        elems = symmetric_group(len(spec.identity))
        for n in (1, 2):
            c = rand_chain(rng, elems, n, 4)
            assert factorization_check(spec, c)


def test_homogeneous_lift_section_roundtrip():
    spec = a3_spec()
    lifts = t_tilde(spec, (C123, T12))
    assert len(lifts) == 2
    for i, homog in lifts:
        assert homog[0] == spec.reps[i]
        hs = section_s(spec, homog)
        assert all(perm_is_even(h) for h in hs)
        assert hs[0] == E3


def test_rep_independence_is_boundary():
    a3 = tuple(perm_closure([C123]))
    c = BarChain.basis((T12,))
    t1 = transfer_T(a3_spec(reps=(E3, T12)), c)
    t2 = transfer_T(a3_spec(reps=(E3, T13)), c)
    diff = t1 - t2
    assert not diff.is_zero()
    assert is_boundary(a3_spec(), a3, diff)
    # negative control: a 3-cycle generates H_1 = Z/3, not a boundary
    assert not is_boundary(a3_spec(), a3, BarChain.basis((C123,)))


def test_rep_independence_degree_two():
    # degree-2 cycles produced as boundaries of random degree-3 chains
    a3 = tuple(perm_closure([C123]))
    rng = random.Random(23)
    found = 0
    while found < 3:
        x = rand_chain(rng, symmetric_group(3), 3, 3)
        cyc = bar_differential(a3_spec(), x)
        if cyc.is_zero():
            continue
        found += 1
        t1 = transfer_T(a3_spec(reps=(E3, T12)), cyc)
        t2 = transfer_T(a3_spec(reps=(E3, T13)), cyc)
        diff = t1 - t2
        assert bar_differential(a3_spec(), diff).is_zero()
        assert is_boundary(a3_spec(), a3, diff)


def test_lattice_membership_solver():
    assert _lattice_contains([[2]], [4])
    assert not _lattice_contains([[2]], [3])
    assert _lattice_contains([[2, 3]], [4, 6])
    assert not _lattice_contains([[2, 3]], [4, 5])
    assert _lattice_contains([[4, 0], [6, 0]], [2, 0])
    assert _lattice_contains([[2, 1], [0, 3]], [2, 4])
    assert not _lattice_contains([[2, 0], [0, 2]], [1, 1])
    assert _lattice_contains([], [0, 0])
    assert not _lattice_contains([], [1, 0])


def test_verify_reps_rejects_bad_choices():
    with pytest.raises(ParameterError):
        perm_group_spec(symmetric_group(3), perm_is_even, reps=(E3, C123))
    with pytest.raises(ParameterError):
        # too few reps: odd permutations never matched
        perm_group_spec(symmetric_group(3), perm_is_even, reps=(E3,))
    with pytest.raises(ParameterError):
        # reps[0] outside the subgroup
        GroupSpec(
            "permutation", E3, perm_mul, perm_inv, perm_is_even, (T12, E3)
        )


def test_matrix_spec_counts_and_cosets():
    params = RingParams(3, 2)
    spec = matrix_group_spec(params, 2, 1)
    assert spec.index == 48
    assert spec.reps[0] == OMatrix.identity(params, 2)
    rng = random.Random(29)
    for _ in range(20):
        g = rand_invertible(rng, params, 2)
        i = rng.randrange(48)
        h, j = coset_data(spec, i, g)
        assert h.is_one_mod(1)
        assert spec.mul(spec.reps[i], g) == spec.mul(h, spec.reps[j])


def test_matrix_spec_scan_matches_key_lookup():
    params = RingParams(3, 2)
    fast = matrix_group_spec(params, 2, 1)
    slow = GroupSpec(
        fast.kind,
        fast.identity,
        fast.mul,
        fast.inv,
        fast.in_subgroup,
        fast.reps,
    )
    rng = random.Random(31)
    for _ in range(10):
        g = rand_invertible(rng, params, 2)
        i = rng.randrange(fast.index)
        assert coset_data(fast, i, g) == coset_data(slow, i, g)


def test_matrix_spec_unramified_units():
    # GL_1 over the quadratic unramified extension at level 1
    params = RingParams(3, 2, 2, (1, 0, 1))
    spec = matrix_group_spec(params, 1, 1)
    assert spec.index == 8
    units = []
    for a in range(9):
        for b in range(9):
            mat = OMatrix(params, ((params.from_coeffs([a, b]),),))
            try:
                mat.inverse()
            except NonUnitError:
                continue
            units.append(mat)
    assert len(units) == 72
    verify_reps(spec, units)


def test_chain_map_matrix_group():
    params = RingParams(3, 2)
    spec = matrix_group_spec(params, 2, 1)
    rng = random.Random(37)
    for n in (1, 2):
        for _ in range(3):
            c = rand_chain(
                rng,
                [rand_invertible(rng, params, 2) for _ in range(6)],
                n,
                3,
            )
            assert check_chain_map(spec, c)
            assert factorization_check(spec, c)


def test_matrix_spec_guards():
    with pytest.raises(SizeGuardError):
        matrix_group_spec(RingParams(3, 4), 2, 4)
    with pytest.raises(SizeGuardError):
        matrix_group_spec(RingParams(3, 2), 2, 2, max_index=100)
    with pytest.raises(ParameterError):
        matrix_group_spec(RingParams(3, 2), 2, 3)


def test_chain_validation():
    with pytest.raises(ParameterError):
        BarChain(1, {(E3, T12): 1})
    with pytest.raises(ParameterError):
        bar_differential(a3_spec(), BarChain(0, {(): 1}))
    assert BarChain(1, {(E3,): 1, (T12,): 0}) == BarChain(1, {(E3,): 1})
    c = BarChain.basis((C123,))
    assert (c - c).is_zero()
