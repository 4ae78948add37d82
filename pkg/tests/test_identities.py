import itertools

import pytest

from bernalg import (CommAlgebra, Identity, Witness, check_identity,
                     identity_defect, make_family, plenary_power,
                     random_identity_probe, subalgebra_on)

from conftest import fresh_rng

ALL_IDENTITIES = tuple(Identity)


def slow_identity_check(a, ident, weight=None):
    """Independent decision route: inclusion-exclusion polarization of each
    variable, evaluated through identity_defect on all ordered basis tuples.

    For a form of degree d in x, the full polarization at (b_1, ..., b_d) is
    sum over nonempty S of (-1)^(d-|S|) f(sum_S b_i); the identity holds over
    the rationals iff every such value (for every assignment of the other
    variables) vanishes.
    """
    degree = {
        Identity.BERNSTEIN: 4,
        Identity.SQUARE_SQUARE_ZERO: 4,
        Identity.CUBE_WEIGHT: 3,
        Identity.CUBE_ZERO: 3,
        Identity.JORDAN: 3,
    }
    others = tuple(v for v in ident.variables if v != "x")
    if ident is Identity.JACOBI:
        for t in itertools.product(range(a.dim), repeat=3):
            assignment = {"x": a.basis_element(t[0]), "y": a.basis_element(t[1]),
                          "z": a.basis_element(t[2])}
            if not identity_defect(a, ident, assignment, weight).is_zero():
                return False
        return True
    d = degree[ident]
    for t in itertools.product(range(a.dim), repeat=d):
        for extra in itertools.product(range(a.dim), repeat=len(others)):
            total = a.zero_element()
            for size in range(1, d + 1):
                for subset in itertools.combinations(range(d), size):
                    x = a.zero_element()
                    for pos in subset:
                        x = x + a.basis_element(t[pos])
                    assignment = {"x": x}
                    for var, idx in zip(others, extra):
                        assignment[var] = a.basis_element(idx)
                    val = identity_defect(a, ident, assignment, weight)
                    total = total + val if (d - size) % 2 == 0 else total - val
            if not total.is_zero():
                return False
    return True


# ---------------------------------------------------------------- verdicts


def test_square_square_zero_witness_on_squareshift():
    a = make_family("squareshift", 3)
    w = check_identity(a, Identity.SQUARE_SQUARE_ZERO)
    assert isinstance(w, Witness)
    assert dict(w.assignment)["x"] == a.basis_element(2)  # e3
    assert w.residual == a.basis_element(0)  # (e3^2)^2 = e1


def test_one_dimensional_idempotent_is_bernstein():
    a = CommAlgebra.from_table(["e"], {("e", "e"): {"e": 1}})
    assert check_identity(a, Identity.BERNSTEIN, [1]) is True


def test_bdown3_jordan_fails_with_reproducible_witness():
    b = make_family("bdown", 3)
    w = check_identity(b.algebra, Identity.JORDAN)
    assert isinstance(w, Witness)
    again = identity_defect(b.algebra, Identity.JORDAN, w.assignment_dict())
    assert again == w.residual and not again.is_zero()
    # deterministic: a second run returns the identical witness
    assert check_identity(b.algebra, Identity.JORDAN) == w


def test_jordan3_family_is_jordan():
    b = make_family("jordan3")
    assert check_identity(b.algebra, Identity.JORDAN) is True


def test_weight_required():
    a = make_family("squareshift", 2)
    with pytest.raises(ValueError):
        check_identity(a, Identity.BERNSTEIN)
    with pytest.raises(ValueError):
        random_identity_probe(a, Identity.CUBE_WEIGHT)


def test_prime_field_rejected(gf5):
    b = make_family("bdown", 2, field=gf5)
    with pytest.raises(ValueError):
        check_identity(b.algebra, Identity.JACOBI)


# ---------------------------------------------------------------- dual routes


@pytest.mark.parametrize("maker, weighted", [
    (lambda: make_family("squareshift", 3), False),
    (lambda: make_family("zhevlakov", 3), False),
    (lambda: make_family("jordan3"), True),
    (lambda: make_family("bdown", 2), True),
    (lambda: make_family("bup", 2), True),
])
def test_fast_check_matches_polarization_oracle(maker, weighted):
    alg = maker()
    weight = alg.weight if weighted else None
    a = alg.algebra if weighted else alg
    for ident in ALL_IDENTITIES:
        if ident.needs_weight and weight is None:
            continue
        fast = check_identity(a, ident, weight)
        slow = slow_identity_check(a, ident, weight)
        assert (fast is True) == slow, ident


def test_check_agrees_with_probe_across_corpus(baric_corpus, plain_corpus):
    rng = fresh_rng(23)
    cases = [(b.algebra, b.weight) for _, b in baric_corpus]
    cases += [(a, None) for _, a in plain_corpus]
    for a, weight in cases:
        for ident in ALL_IDENTITIES:
            if ident.needs_weight and weight is None:
                continue
            verdict = check_identity(a, ident, weight)
            probed = random_identity_probe(a, ident, weight, trials=200, rng=rng)
            if verdict is True:
                assert probed is True
            else:
                # the witness must reproduce its residual exactly
                again = identity_defect(a, ident, verdict.assignment_dict(), weight)
                assert again == verdict.residual and not again.is_zero()


def test_probe_finds_squareshift_defect_quickly():
    a = make_family("squareshift", 3)
    res = random_identity_probe(a, Identity.SQUARE_SQUARE_ZERO, trials=100, seed=1)
    assert isinstance(res, Witness)
    assert not identity_defect(a, Identity.SQUARE_SQUARE_ZERO,
                               res.assignment_dict()).is_zero()


def test_probe_confirms_jordan3():
    b = make_family("jordan3")
    assert random_identity_probe(b.algebra, Identity.JORDAN, trials=60, seed=2) is True
    with pytest.raises(ValueError):
        random_identity_probe(b.algebra, Identity.JORDAN, trials=0)


# ---------------------------------------------------------------- implications


def barideal_algebras(baric_corpus):
    out = []
    for name, b in baric_corpus:
        out.append((name + ".N", subalgebra_on(b.algebra, b.barideal())))
    return out


def test_cube_zero_implies_jacobi_jordan_and_fast_solvability(baric_corpus, plain_corpus):
    corpus = [(n, a) for n, a in plain_corpus]
    corpus += [(n, b.algebra) for n, b in baric_corpus]
    corpus += barideal_algebras(baric_corpus)
    hit = 0
    for name, a in corpus:
        if check_identity(a, Identity.CUBE_ZERO) is not True:
            continue
        hit += 1
        assert check_identity(a, Identity.JACOBI) is True, name
        assert check_identity(a, Identity.JORDAN) is True, name
        assert plenary_power(a, a.full_space(), 4).is_zero(), name
    assert hit >= 3  # jordan3.N, bdown2.N, bup2.N at least


def test_square_square_zero_holds_on_bernstein_barideals(baric_corpus):
    for name, a in barideal_algebras(baric_corpus):
        assert check_identity(a, Identity.SQUARE_SQUARE_ZERO) is True, name
