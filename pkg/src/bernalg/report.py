"""Assembly of machine-readable reports with a stable key order.

Reports are plain dicts built in a fixed insertion order and serialized
with json.dumps, so identical inputs give byte-identical output.  Exact
rationals are rendered as 'p' or 'p/q' strings; subspaces as their RREF
basis rows.
"""

from __future__ import annotations

import json

from .algebra import nilpotency_report
from .bernstein import (BaricAlgebra, classify, check_peirce_relations,
                        peirce, verify_weight)
from .identities import Identity, Witness, check_identity
from .linalg import Subspace
from .nilpotence import (decompose_nilpotent_ideal, greatest_fixed_subspace,
                         mult_closure_nilpotent)


def scalar_json(x) -> str:
    return str(x)


def coords_json(coords) -> list:
    return [str(c) for c in coords]


def subspace_json(s: Subspace) -> list:
    return [coords_json(row) for row in s.rows]


def witness_json(w: Witness) -> dict:
    out = {"assignment": {var: coords_json(e.coords) for var, e in w.assignment}}
    residual = w.residual
    out["residual"] = coords_json(residual.coords) if hasattr(residual, "coords") \
        else scalar_json(residual)
    if w.note:
        out["note"] = w.note
    return out


def check_json(result) -> object:
    if result is True:
        return True
    if isinstance(result, Witness):
        return witness_json(result)
    if isinstance(result, Subspace):
        return subspace_json(result)
    return result


def identity_battery(algebra, weight=None, rng_seed: int = 0) -> dict:
    """Run every applicable identity; weight-based ones only when a weight
    is available."""
    out = {}
    for ident in (Identity.BERNSTEIN, Identity.JORDAN, Identity.CUBE_WEIGHT,
                  Identity.JACOBI, Identity.CUBE_ZERO, Identity.SQUARE_SQUARE_ZERO):
        if ident.needs_weight and weight is None:
            continue
        result = check_identity(algebra, ident, weight, rng_seed=rng_seed)
        out[ident.value] = True if result is True else witness_json(result)
    return out


def chain_summary(algebra, s: Subspace, max_steps=None) -> dict:
    rep = nilpotency_report(algebra, s, max_steps)
    return {
        "full_nil_index": rep.nil_index_full,
        "principal_nil_index": rep.nil_index_principal,
        "solvability_index": rep.solv_index,
    }


def build_report(name: str, alg, max_steps=None, rng_seed: int = 0) -> tuple[dict, int]:
    """Full pipeline report for one algebra; the int is the exit status
    (0 ok, 1 when a structural property fails with a witness)."""
    baric = isinstance(alg, BaricAlgebra)
    algebra = alg.algebra if baric else alg
    report = {
        "algebra": name,
        "dimension": algebra.dim,
        "basis": list(algebra.basis_names),
        "baric": baric,
    }
    if not baric:
        report["identities"] = identity_battery(algebra, rng_seed=rng_seed)
        report["chains"] = chain_summary(algebra, algebra.full_space(), max_steps)
        return report, 0

    weight_ok = verify_weight(alg)
    report["weight_ok"] = weight_ok is True
    if weight_ok is not True:
        report["weight_witness"] = witness_json(weight_ok)
        return report, 1

    report["identities"] = identity_battery(algebra, alg.weight, rng_seed)
    flags = classify(alg)
    report["flags"] = {
        "baric": flags.is_baric,
        "bernstein": flags.is_bernstein,
        "jordan": flags.is_jordan,
        "nuclear": flags.is_nuclear,
        "barideal_nilpotent": flags.barideal_nilpotent,
    }
    if flags.witnesses:
        report["witnesses"] = {k: check_json(v) for k, v in flags.witnesses.items()}
    if not flags.is_bernstein:
        return report, 1

    p = peirce(alg)
    relations = check_peirce_relations(alg, p)
    report["peirce"] = {
        "idempotent": coords_json(p.e.coords),
        "n_dim": p.N.dim,
        "u_dim": p.U.dim,
        "v_dim": p.V.dim,
        "ann_u_dim": p.annU.dim,
        "ann_u_basis": subspace_json(p.annU),
        "relations_ok": relations is True,
    }
    status = 0
    if relations is not True:
        report["peirce"]["relations_witness"] = witness_json(relations)
        status = 1
    report["chains"] = chain_summary(algebra, p.N, max_steps)
    gfp = greatest_fixed_subspace(alg, p)
    report["fixed_subspace"] = {
        "chain_dims": [t.dim for t in gfp.chain],
        "gfp_dim": gfp.gfp.dim,
    }
    closure = mult_closure_nilpotent(alg, p)
    report["mult_closure"] = {
        "generator_count": len(closure.generators),
        "closure_dim": len(closure.span_closure),
        "nilpotent": closure.nilpotent,
        "nil_index": closure.nil_index,
    }
    report["certificate"] = certificate_summary(algebra, p.N, None, max_steps)
    return report, status


def certificate_summary(algebra, n: Subspace, gens, max_steps=None) -> dict:
    """Decomposition certificate summary; by default the ideal generators
    are the RREF basis rows of N itself."""
    if gens is None:
        gens = [algebra.element(row) for row in n.rows]
    try:
        cert = decompose_nilpotent_ideal(algebra, n, gens, max_steps)
    except (ValueError, AssertionError, RuntimeError) as exc:
        return {"error": str(exc)}
    return {
        "f_dim": cert.F.dim,
        "m": cert.m,
        "power_inclusions_checked_up_to": cert.eq_checked_up_to,
        "n_equals_f_plus_nm": cert.n_equals_f_plus_nm,
        "n_nilpotent": cert.n_nilpotent,
    }


def emit_report(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"
