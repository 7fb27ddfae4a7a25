"""Analysis reports: plain dicts with a fixed key order, ready for JSON."""

from __future__ import annotations

import random
from typing import Any

from . import characters as ch
from .config import Caps
from .errors import CapExceeded
from .io import SCHEMA_VERSION, green_to_json, module_to_json
from .irreducibles import (
    aggm,
    all_irreducibles,
    direct_sum_kernel,
    free_row_span_test,
    has_aperiodic_distinguished_ideal,
    is_dense_span,
    is_ggm,
    largest_jprime_oracle,
    matrix_rep_of,
    module_corpus,
    spans_full_end,
)
from .lattice import is_distributive
from .modules import (
    apex,
    dualize,
    is_faithful,
    is_minimal,
    is_minimal_by_enumeration,
    is_simple,
    is_simple_by_enumeration,
)
from .semigroup import FiniteSemigroup, GreenStructure, green_structure

# spansFullEnd is only attempted up to this many sji elements (2^(n^2) maps)
FULL_END_RANK = 3


def _guard(fn, *args, **kwargs):
    try:
        return fn(*args, **kwargs)
    except CapExceeded as exc:
        return {"skipped": str(exc)}


def irreducibles_section(S: FiniteSemigroup, G: GreenStructure, caps: Caps, irr=None) -> list[dict[str, Any]]:
    irr = irr if irr is not None else all_irreducibles(S, G, caps)
    out = []
    for j, I in irr.items():
        M = I.module
        A = aggm(S, G, j, caps, I)
        free = free_row_span_test(I.sandwich)
        rank = len(M.carrier.sji)
        rec = {
            "j_class": j,
            "sandwich": I.sandwich.matrix.to_strings(),
            "module_size": len(M),
            "carrier": [M.carrier.label(i) for i in range(len(M))],
            "rank": rank,
            "free": free,
            "faithful": is_faithful(M),
            "apex": apex(M, G),
            "irreducible": is_minimal(M) and is_simple(M),
            "aggm_order": A.semigroup.order,
            "aggm_ggm": is_ggm(A.semigroup),
            "aggm_aperiodic": has_aperiodic_distinguished_ideal(A.semigroup),
            "distributive": is_distributive(M.carrier),
            "dense": _guard(is_dense_span, M, caps.span),
            "spans_full_end": _guard(spans_full_end, M, caps) if rank <= FULL_END_RANK else None,
        }
        out.append(rec)
    return out


def characters_section(S: FiniteSemigroup, G: GreenStructure, caps: Caps, irr=None) -> list[dict[str, Any]]:
    irr = irr if irr is not None else all_irreducibles(S, G, caps)
    out = []
    for j, I in irr.items():
        M = I.module
        rec: dict[str, Any] = {"j_class": j, "module_size": len(M)}
        if M.carrier.is_free():
            rec["chi_matrix"] = list(ch.chi_matrix(matrix_rep_of(M, caps)).values)
        rec["min_character"] = _guard(lambda: list(ch.min_character(M, caps).values))
        rec["sections"] = ch.section_count(M, caps)
        rec["psi_nonzero"] = list(ch.generalized_character(M, range(1, len(M))).values)
        check = ch.schutz_char_theorem_check(S, G, j, caps)
        rec["psi_rows"] = list(check.psi.values)
        rec["schutzenberger"] = list(check.schutzenberger.values)
        rec["schutz_theorem"] = check.ok
        out.append(rec)
    return out


def module_characters(M, caps: Caps) -> dict[str, Any]:
    rec: dict[str, Any] = {"module": module_to_json(M)}
    if M.carrier.is_free():
        rec["chi_matrix"] = list(ch.chi_matrix(matrix_rep_of(M, caps)).values)
        rec["unambiguous"] = ch.is_unambiguous(M)
    rec["min_character"] = list(ch.min_character(M, caps).values)
    rec["sections"] = ch.section_count(M, caps)
    rec["psi_nonzero"] = list(ch.generalized_character(M, range(1, len(M))).values)
    return rec


def duality_section(S: FiniteSemigroup, G: GreenStructure, caps: Caps, max_size: int = 8) -> list[dict[str, Any]]:
    out = []
    for name, M in module_corpus(S, G, caps, max_size):
        D = dualize(M)
        simple = is_simple_by_enumeration(M, caps.congruences)
        minimal = is_minimal_by_enumeration(M, caps.submodules)
        d_simple = is_simple_by_enumeration(D, caps.congruences)
        d_minimal = is_minimal_by_enumeration(D, caps.submodules)
        out.append(
            {
                "module": name,
                "size": len(M),
                "simple": simple,
                "minimal": minimal,
                "dual_simple": d_simple,
                "dual_minimal": d_minimal,
                "ok": simple == d_minimal and minimal == d_simple,
            }
        )
    return out


def jprime_section(S: FiniteSemigroup, G: GreenStructure, caps: Caps, oracle: bool, irr=None) -> dict[str, Any]:
    kernel = direct_sum_kernel(S, G, caps, irr)
    rec: dict[str, Any] = {"direct_sum_kernel": list(kernel)}
    if oracle:
        try:
            best = largest_jprime_oracle(S, G, caps.jprime)
        except CapExceeded as exc:
            rec["oracle"] = {"skipped": str(exc)}
        else:
            rec["oracle"] = {"largest_jprime": list(best), "agrees": tuple(best) == kernel}
    return rec


def oracle_irreducibility(S: FiniteSemigroup, G: GreenStructure, caps: Caps, irr=None) -> list[dict[str, Any]]:
    irr = irr if irr is not None else all_irreducibles(S, G, caps)
    out = []
    for j, I in irr.items():
        M = I.module
        try:
            minimal = is_minimal_by_enumeration(M, caps.submodules)
            simple = is_simple_by_enumeration(M, caps.congruences)
        except CapExceeded as exc:
            out.append({"j_class": j, "skipped": str(exc)})
            continue
        out.append({"j_class": j, "minimal": minimal, "simple": simple, "apex_ok": apex(M, G) == j})
    return out


def relabel_check(S: FiniteSemigroup, G: GreenStructure, seed: int) -> bool:
    """Green partitions commute with a random relabelling of the elements."""
    rng = random.Random(seed)
    perm = list(S.elements)
    rng.shuffle(perm)
    T = S.relabel(perm)
    H = green_structure(T)

    def same(p, q):
        return all((p[a] == p[b]) == (q[perm[a]] == q[perm[b]]) for a in S.elements for b in S.elements)

    return (
        same(G.r_class, H.r_class)
        and same(G.l_class, H.l_class)
        and same(G.j_class, H.j_class)
        and same(G.h_class, H.h_class)
    )


def full_report(S: FiniteSemigroup, caps: Caps, source: str, oracle: bool = False, seed: int = 0) -> dict[str, Any]:
    G = green_structure(S)
    irr = all_irreducibles(S, G, caps)
    report: dict[str, Any] = {
        "schema_version": SCHEMA_VERSION,
        "input": {"source": source, "order": S.order},
        "green": green_to_json(S, G),
        "regular_j_classes": G.regular_j_classes(),
        "irreducibles": irreducibles_section(S, G, caps, irr),
        "characters": characters_section(S, G, caps, irr),
        "jprime": jprime_section(S, G, caps, oracle, irr),
    }
    if oracle:
        report["oracles"] = {
            "irreducibility": oracle_irreducibility(S, G, caps, irr),
            "duality": _guard(duality_section, S, G, caps),
            "relabel_invariant": relabel_check(S, G, seed),
        }
    return report


def verdicts(report: dict[str, Any]) -> dict[str, Any]:
    """Boolean and partition verdicts of a report, for determinism checks."""
    out: dict[str, Any] = {"kernel": tuple(report["jprime"]["direct_sum_kernel"])}
    for rec in report["irreducibles"]:
        for key in ("free", "faithful", "irreducible", "aggm_ggm", "aggm_aperiodic", "dense", "spans_full_end", "apex"):
            out[f"J{rec['j_class']}.{key}"] = rec[key] if not isinstance(rec[key], dict) else "skipped"
    for rec in report["characters"]:
        out[f"J{rec['j_class']}.schutz"] = rec["schutz_theorem"]
        mc = rec["min_character"]
        out[f"J{rec['j_class']}.min_character"] = tuple(mc) if isinstance(mc, list) else "skipped"
    return out
