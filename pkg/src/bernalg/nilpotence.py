"""Nilpotency machinery around the barideal of a Bernstein algebra: the
word action of V on annU, the submodule/ideal correspondence, the greatest
subspace fixed by I -> V*I, nilpotency of the multiplication closure of V
on N, stability checks for N*I = I versus V*I = I, and a constructive
finiteness certificate for ideals with nilpotent generator closures.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import (CommAlgebra, Element, FULL, full_power_terms,
                      generated_ideal, generated_subalgebra, is_ideal,
                      power_chain)
from .bernstein import BaricAlgebra, PeirceData
from .linalg import Matrix, Subspace


def module_action(p: PeirceData, word, u: Element) -> Element:
    """Right-to-left iterated multiplication (v1*...*vk).u = v1(...(vk u)...).

    Every word letter must lie in V and u in annU; the result stays in annU
    because annU is an ideal whose U-part products vanish.
    """
    a = u.algebra
    if not p.annU.contains(u.coords):
        raise ValueError("element is not in annU")
    result = u
    for letter in reversed(list(word)):
        if not p.V.contains(letter.coords):
            raise ValueError("word letter is not in V")
        result = letter * result
    return result


@dataclass(frozen=True)
class SubmoduleIdealReport:
    is_submodule: bool
    is_ideal_in_a: bool


def submodule_ideal_check(b: BaricAlgebra, p: PeirceData, s: Subspace) -> SubmoduleIdealReport:
    """For s inside annU: being stable under V equals being an ideal of the
    whole algebra; both booleans are computed independently."""
    if not s.leq(p.annU):
        raise ValueError("subspace is not contained in annU")
    a = b.algebra
    sub = a.subspace_product(p.V, s).leq(s)
    return SubmoduleIdealReport(sub, is_ideal(a, s))


@dataclass(frozen=True)
class FixedSubspaceResult:
    """Chain I_0 = N, I_{k+1} = V * I_k down to its limit, the greatest
    subspace I with V*I = I."""

    chain: tuple
    gfp: Subspace
    steps: int


def greatest_fixed_subspace(b: BaricAlgebra, p: PeirceData) -> FixedSubspaceResult:
    """Iterate I -> V*I from N.  Any I with V*I = I satisfies I = V^k I
    inside every chain term, so the (always reached) limit is the greatest
    fixed subspace; starting at N loses nothing since V*A is inside N."""
    a = b.algebra
    chain = [p.N]
    while True:
        nxt = a.subspace_product(p.V, chain[-1])
        chain.append(nxt)
        if nxt.is_zero():
            return FixedSubspaceResult(tuple(chain), nxt, len(chain) - 1)
        if nxt == chain[-2]:
            return FixedSubspaceResult(tuple(chain), nxt, len(chain) - 1)


@dataclass(frozen=True)
class MultClosure:
    """The associative operator algebra generated by multiplication by V
    on N.  nil_index k means every product of k generators vanishes (and
    so the k-th power of the closure is zero); with no generators the
    closure is zero and the index is 1."""

    generators: tuple
    span_closure: tuple
    nilpotent: bool
    nil_index: int | None


def _matrix_span(matrices, k, field) -> Subspace:
    return Subspace([m.entries for m in matrices], k * k, field)


def _span_matrices(span: Subspace, k, field):
    return tuple(Matrix(k, k, row, field) for row in span.rows)


def mult_closure_nilpotent(b: BaricAlgebra, p: PeirceData) -> MultClosure:
    """Build the operators L_v on N for a basis of V, close their span under
    composition, and decide nilpotency from the spans of fixed-length words
    (an operator algebra on a d-dimensional space that is nilpotent at all
    must vanish on words of length d)."""
    a = b.algebra
    k = p.N.dim
    field = a.field
    gens = []
    for row in p.V.rows:
        gens.append(a.left_mult_matrix(a.element(row), restrict_to=p.N))
    gen_span = _matrix_span(gens, k, field)
    # closure of the span under composition
    closure = gen_span
    frontier_rows = list(gen_span.rows)
    while frontier_rows:
        products = [Matrix(k, k, f, field) @ g
                    for f in frontier_rows for g in gens]
        new_span = closure.plus(_matrix_span(products, k, field))
        if new_span == closure:
            break
        frontier_rows = [row for row in new_span.rows if not closure.contains(row)]
        closure = new_span
    # word spans of exact length m
    nil_index = None
    word_span = gen_span
    for m in range(1, max(k, 1) + 2):
        if word_span.is_zero():
            nil_index = m
            break
        products = [Matrix(k, k, f, field) @ g
                    for f in word_span.rows for g in gens]
        word_span = _matrix_span(products, k, field)
    return MultClosure(tuple(gens), _span_matrices(closure, k, field),
                       nil_index is not None, nil_index)


@dataclass(frozen=True)
class StabilityReport:
    """Outcome of comparing N*I with I and V*I with I for a subspace I."""

    ni_eq_i: bool
    vi_eq_i: bool
    conclusion_holds: bool


def stable_subspace_check(b: BaricAlgebra, p: PeirceData, s: Subspace) -> StabilityReport:
    """N*I = I holds exactly when V*I = I does, and either forces I inside
    annU and an ideal; conclusion_holds records both facts for this s."""
    a = b.algebra
    ni = a.subspace_product(p.N, s) == s
    vi = a.subspace_product(p.V, s) == s
    conclusion = (ni == vi)
    if ni:
        conclusion = conclusion and s.leq(p.annU) and is_ideal(a, s)
    return StabilityReport(ni, vi, conclusion)


@dataclass(frozen=True)
class DecompositionCertificate:
    """Checked decomposition N = F + N^m with F^m = 0 for the subalgebra F
    generated by ideal generators of N, including the power inclusions
    N^i <= F^i + N^{i+1} for i = 1..m."""

    F: Subspace
    m: int
    eq_checked_up_to: int
    n_equals_f_plus_nm: bool
    n_nilpotent: bool


def decompose_nilpotent_ideal(a: CommAlgebra, n: Subspace, gens,
                              max_steps: int | None = None) -> DecompositionCertificate:
    """Certificate for: if the subalgebra F generated by ideal generators of
    N is nilpotent with F^m = 0, then N decomposes as F + N^m, and at finite
    dimension N^m itself vanishes so the certificate closes with N = F.
    """
    gens = list(gens)
    if not is_ideal(a, n):
        raise ValueError("subspace is not an ideal")
    if generated_ideal(a, gens) != n:
        raise ValueError("generators do not generate the ideal")
    f = generated_subalgebra(a, gens)
    f_chain = power_chain(a, f, FULL, max_steps)
    if f_chain.nil_index is None:
        raise ValueError("generated subalgebra is not nilpotent; "
                         "the decomposition does not apply")
    m = f_chain.nil_index
    f_powers = full_power_terms(a, f, m)
    n_powers = full_power_terms(a, n, m + 1)
    for i in range(1, m + 1):
        if not n_powers[i - 1].leq(f_powers[i - 1].plus(n_powers[i])):
            raise AssertionError(f"power inclusion failed at exponent {i}")
    n_m = n_powers[m - 1]
    return DecompositionCertificate(f, m, m, n == f.plus(n_m), n_m.is_zero())
