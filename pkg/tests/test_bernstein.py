from fractions import Fraction

import pytest

from bernalg import (BaricAlgebra, CommAlgebra, Identity,
                     Subspace, Witness, check_identity, check_peirce_relations,
                     classify, find_idempotent, make_family, nilpotency_report,
                     nuclear_core, peirce, plenary_power, quotient,
                     subspace_product, verify_weight)

from conftest import non_nilpotent_baric


def span_named(a, *names):
    rows = [a.basis_element(a.index_of(n)).coords for n in names]
    return Subspace(rows, a.dim, a.field)


# ---------------------------------------------------------------- weights


def test_bdown_weight_valid():
    assert verify_weight(make_family("bdown", 3)) is True


def test_zero_weight_rejected():
    a = make_family("squareshift", 3)
    w = verify_weight(BaricAlgebra(a, [0, 0, 0]))
    assert isinstance(w, Witness)
    assert "zero" in w.note


def test_squareshift_weight_not_multiplicative():
    a = make_family("squareshift", 3)
    w = verify_weight(BaricAlgebra(a, [1, 0, 0]))
    assert isinstance(w, Witness)
    # first failing pair in scan order: (e1, e1), since w(e1*e1) = 0 != 1
    pair = w.assignment_dict()
    assert pair["x"] == a.basis_element(0) and pair["y"] == a.basis_element(0)
    assert w.residual == Fraction(-1)


# ---------------------------------------------------------------- idempotents


def test_default_idempotent_bdown():
    b = make_family("bdown", 3)
    assert find_idempotent(b) == b.algebra.basis_element(0)


def test_one_dimensional_idempotent():
    a = CommAlgebra.from_table(["e"], {("e", "e"): {"e": 1}})
    b = BaricAlgebra(a, [1])
    assert find_idempotent(b) == a.basis_element(0)


def test_seeded_idempotent_shift():
    b = make_family("bdown", 3)
    a = b.algebra
    seed = a.basis_element(0) + a.basis_element(a.index_of("u1"))
    e = find_idempotent(b, seed)
    # (e + u1)^2 = e + u1 because e*u1 = u1/2 and u1*u1 = 0
    assert e == seed
    assert e * e == e


def test_non_bernstein_seed_square_detected():
    # e*e = e + n with e*n = n/2 makes (e)^2 fail idempotency
    a = CommAlgebra.from_table(
        ["e", "n"],
        {("e", "e"): {"e": 1, "n": 1}, ("e", "n"): {"n": Fraction(1, 2)}})
    b = BaricAlgebra(a, [1, 0])
    assert verify_weight(b) is True
    with pytest.raises(ValueError):
        find_idempotent(b)


def test_zero_weight_seed_rejected():
    b = make_family("bdown", 2)
    with pytest.raises(ValueError):
        find_idempotent(b, b.algebra.basis_element(1))


# ---------------------------------------------------------------- peirce


def test_bdown_peirce_components():
    b = make_family("bdown", 4)
    p = peirce(b)
    a = b.algebra
    assert p.U == span_named(a, "u1", "u2", "u3", "u4")
    assert p.V == span_named(a, "v1")
    assert p.N == p.U.plus(p.V)
    assert p.annU == p.U  # U*U = 0 here


def test_one_dimensional_peirce():
    a = CommAlgebra.from_table(["e"], {("e", "e"): {"e": 1}})
    p = peirce(BaricAlgebra(a, [1]))
    assert p.U.is_zero() and p.V.is_zero() and p.N.is_zero()


def test_jordan3_ann_u_is_zero():
    p = peirce(make_family("jordan3"))
    assert p.U.dim == 1 and p.V.dim == 1
    assert p.annU.is_zero()  # u*u = v != 0


def test_peirce_rejects_wrong_eigenvalue():
    # e*n = n puts n in the 1-eigenspace, so N does not split into U and V
    a = CommAlgebra.from_table(
        ["e", "n"], {("e", "e"): {"e": 1}, ("e", "n"): {"n": 1}})
    b = BaricAlgebra(a, [1, 0])
    assert verify_weight(b) is True
    with pytest.raises(ValueError):
        peirce(b)


def test_peirce_relations_hold_on_corpus(peirce_corpus):
    for name, b, p in peirce_corpus:
        assert check_peirce_relations(b, p) is True, name


def test_jordan3_is_exactly_nuclear():
    b = make_family("jordan3")
    p = peirce(b)
    assert subspace_product(b.algebra, p.U, p.U) == p.V


def test_corrupted_table_breaks_relations():
    # u1*u2 = e violates U*U <= V; reuse the clean decomposition data
    clean = make_family("bdown", 3)
    p = peirce(clean)
    a = clean.algebra
    table = {(0, 0): a.basis_element(0).coords}
    for i in range(1, a.dim):
        row = a.table_row(0, i)
        if row:
            coords = [a.field.zero] * a.dim
            for k, c in row:
                coords[k] = c
            table[(0, i)] = tuple(coords)
    for i in range(2, a.dim):
        row = a.table_row(1, i)
        if row:
            coords = [a.field.zero] * a.dim
            for k, c in row:
                coords[k] = c
            table[(1, i)] = tuple(coords)
    table[(a.index_of("u1"), a.index_of("u2"))] = a.basis_element(0).coords
    corrupted = CommAlgebra(a.basis_names, table)
    cb = BaricAlgebra(corrupted, clean.weight)
    w = check_peirce_relations(cb, p)
    assert isinstance(w, Witness)
    assert w.note == "U*U is not contained in V"


# ---------------------------------------------------------------- classification


def test_classify_bdown3():
    fl = classify(make_family("bdown", 3))
    assert (fl.is_baric, fl.is_bernstein, fl.is_jordan, fl.is_nuclear,
            fl.barideal_nilpotent) == (True, True, False, False, True)
    jw = fl.witnesses["jordan"]
    a = make_family("bdown", 3).algebra
    got = {k: v.coords for k, v in jw.assignment}
    assert got["u"] == a.basis_element(a.index_of("u3")).coords
    assert got["v"] == a.basis_element(a.index_of("v1")).coords
    assert jw.residual.coords == a.basis_element(a.index_of("u1")).coords
    assert "nuclear" in fl.witnesses


def test_classify_jordan3():
    fl = classify(make_family("jordan3"))
    assert (fl.is_bernstein, fl.is_jordan, fl.is_nuclear) == (True, True, True)
    assert not fl.witnesses


def test_classify_one_dimensional():
    a = CommAlgebra.from_table(["e"], {("e", "e"): {"e": 1}})
    fl = classify(BaricAlgebra(a, [1]))
    assert (fl.is_baric, fl.is_bernstein, fl.is_jordan, fl.is_nuclear,
            fl.barideal_nilpotent) == (True, True, True, True, True)


def test_classify_flags_on_small_truncations():
    assert classify(make_family("bdown", 2)).is_jordan is True
    assert classify(make_family("bup", 2)).is_jordan is True
    assert classify(make_family("bup", 3)).is_jordan is False


def test_structural_jordan_matches_identity_routes(peirce_corpus):
    # condition on the components vs the element identity vs the cube rule
    for name, b, _ in peirce_corpus:
        fl = classify(b)
        via_identity = check_identity(b.algebra, Identity.JORDAN) is True
        via_cube = check_identity(b.algebra, Identity.CUBE_WEIGHT, b.weight) is True
        assert fl.is_jordan == via_identity == via_cube, name


def test_classify_non_nilpotent_barideal():
    fl = classify(non_nilpotent_baric())
    assert fl.is_bernstein is True
    assert fl.barideal_nilpotent is False
    assert "barideal_nilpotent" in fl.witnesses


# ---------------------------------------------------------------- invariants


def test_corpus_dimension_split(peirce_corpus):
    for name, b, p in peirce_corpus:
        assert b.dim == 1 + p.U.dim + p.V.dim, name


def test_idempotent_independence(peirce_corpus):
    for name, b, p in peirce_corpus:
        a = b.algebra
        # seed with e + (first U basis vector) when U is nonzero
        if p.U.is_zero():
            continue
        seed = p.e + a.element(p.U.rows[0])
        p2 = peirce(b, find_idempotent(b, seed))
        assert (p2.U.dim, p2.V.dim) == (p.U.dim, p.V.dim), name
        assert p2.annU == p.annU, name


def test_barideal_solvable_with_third_plenary_zero(peirce_corpus):
    for name, b, p in peirce_corpus:
        assert plenary_power(b.algebra, p.N, 3).is_zero(), name


def test_nuclear_members_annihilate_barideal(peirce_corpus):
    for name, b, p in peirce_corpus:
        if classify(b).is_nuclear:
            assert subspace_product(b.algebra, p.annU, p.N).is_zero(), name
            assert nilpotency_report(b.algebra, p.N).nil_index_principal is not None


# ---------------------------------------------------------------- quotients


def test_quotient_bdown3_by_ann_u():
    b = make_family("bdown", 3)
    p = peirce(b)
    q = quotient(b, p.annU)
    a = q.algebra
    assert a.basis_names == ("e", "v1")
    assert a.basis_element(0) * a.basis_element(0) == a.basis_element(0)
    assert (a.basis_element(0) * a.basis_element(1)).is_zero()
    assert (a.basis_element(1) * a.basis_element(1)).is_zero()
    assert q.weight == (Fraction(1), Fraction(0))
    assert classify(q).is_jordan is True


def test_quotient_by_zero_is_same_table():
    b = make_family("bdown", 2)
    q = quotient(b, Subspace.zero(b.dim))
    assert q.algebra.basis_names == b.algebra.basis_names
    for i in range(b.dim):
        for j in range(b.dim):
            assert q.algebra.table_row(i, j) == b.algebra.table_row(i, j)
    assert q.weight == b.weight


def test_quotient_rejects_bad_ideals():
    b = make_family("bdown", 3)
    a = b.algebra
    with pytest.raises(ValueError):
        quotient(b, span_named(a, "u2"))  # not an ideal
    with pytest.raises(ValueError):
        quotient(b, span_named(a, "e"))  # not inside ker(weight)


def test_quotient_by_ann_u_is_jordan_on_corpus(peirce_corpus):
    for name, b, p in peirce_corpus:
        q = quotient(b, p.annU)
        assert classify(q).is_jordan is True, name


# ---------------------------------------------------------------- nuclear core


def test_nuclear_core_of_jordan3_is_everything():
    b = make_family("jordan3")
    core = nuclear_core(b)
    assert core.dim == 3
    assert classify(core).is_nuclear is True


def test_nuclear_core_of_bdown3_drops_v():
    b = make_family("bdown", 3)
    core = nuclear_core(b, peirce(b))
    assert core.dim == 4  # Ke + U, since U*U = 0
    fl = classify(core)
    assert fl.is_bernstein and fl.is_nuclear


def test_nuclear_core_one_dimensional():
    a = CommAlgebra.from_table(["e"], {("e", "e"): {"e": 1}})
    b = BaricAlgebra(a, [1])
    assert nuclear_core(b).dim == 1


def test_nuclear_core_is_nuclear_across_corpus(peirce_corpus):
    for name, b, p in peirce_corpus:
        core = nuclear_core(b, p)
        assert classify(core).is_nuclear is True, name
