import itertools
import random

import pytest

from bernalg import (BaricAlgebra, CommAlgebra, PrimeField, Subspace,
                     make_family, peirce)


def bernstein_corpus():
    """All baric corpus members: bdown/bup truncations and jordan3."""
    out = []
    for n in range(2, 9):
        out.append((f"bdown{n}", make_family("bdown", n)))
        out.append((f"bup{n}", make_family("bup", n)))
    out.append(("jordan3", make_family("jordan3")))
    return out


def commutative_corpus():
    """Plain commutative corpus members (no weight)."""
    out = []
    for n in range(2, 9):
        out.append((f"squareshift{n}", make_family("squareshift", n)))
        out.append((f"zhevlakov{n}", make_family("zhevlakov", n)))
    return out


@pytest.fixture(scope="session")
def baric_corpus():
    return bernstein_corpus()


@pytest.fixture(scope="session")
def plain_corpus():
    return commutative_corpus()


@pytest.fixture(scope="session")
def peirce_corpus(baric_corpus):
    """(name, baric algebra, PeirceData) for the whole baric corpus."""
    return [(name, b, peirce(b)) for name, b in baric_corpus]


def non_nilpotent_baric():
    """A Bernstein algebra whose barideal is not nilpotent: u*v = u keeps
    the line through u fixed under multiplication by V."""
    from fractions import Fraction
    a = CommAlgebra.from_table(
        ["e", "u", "v"],
        {("e", "e"): {"e": 1},
         ("e", "u"): {"u": Fraction(1, 2)},
         ("u", "v"): {"u": 1}})
    return BaricAlgebra(a, [1, 0, 0])


def random_vector_in(rng, space: Subspace, lo=-3, hi=3):
    field = space.field
    v = [field.zero] * space.ambient_dim
    for row in space.rows:
        c = rng.randint(lo, hi)
        if c:
            v = [a + field.of(c) * b for a, b in zip(v, row)]
    return tuple(v)


def random_subspace_in(rng, space: Subspace):
    """A random subspace of `space`, spanned by 0..dim random combinations."""
    k = rng.randint(0, space.dim)
    vecs = [random_vector_in(rng, space) for _ in range(k)]
    return Subspace(vecs, space.ambient_dim, space.field)


def span_elements(space: Subspace):
    """Every element of a subspace over a prime field, as a frozenset."""
    field = space.field
    vals = [field.of(i) for i in range(field.p)]
    out = set()
    for coeffs in itertools.product(vals, repeat=space.dim):
        v = [field.zero] * space.ambient_dim
        for c, row in zip(coeffs, space.rows):
            if c != field.zero:
                v = [a + c * b for a, b in zip(v, row)]
        out.add(tuple(v))
    return frozenset(out)


def all_subspaces_within(space: Subspace):
    """Every subspace of `space` over its prime field, found by growing
    spans one vector at a time (layer by layer in dimension)."""
    field = space.field
    vectors = [v for v in span_elements(space)
               if any(x != field.zero for x in v)]
    zero = Subspace.zero(space.ambient_dim, field)
    found = {zero}
    layer = {zero}
    for _ in range(space.dim):
        grown = set()
        for s in layer:
            for v in vectors:
                if not s.contains(v):
                    grown.add(s.plus(Subspace([v], space.ambient_dim, field)))
        layer = grown
        found |= layer
    return found


@pytest.fixture(scope="session")
def gf5():
    return PrimeField(5)


def fresh_rng(seed=0):
    return random.Random(seed)
