"""Command-line front end.

Exit codes: 0 success, 1 unreadable or malformed input, 2 an invariant
violation (printed with its witness), 3 an enumeration cap was exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Any

from . import report as rp
from .config import default_caps
from .corpus import corpus_names, load_corpus
from .errors import CapExceeded, InputError, InvariantViolation
from .io import green_to_json, load_semigroup, module_from_json
from .irreducibles import aggm, has_aperiodic_distinguished_ideal, irreducible_module, is_ggm
from .modules import check_module
from .semigroup import FiniteSemigroup, eggbox, green_structure

EXIT_OK, EXIT_PARSE, EXIT_INVARIANT, EXIT_CAP = 0, 1, 2, 3

COMMANDS = ("validate", "green", "irreducibles", "aggm", "characters", "duality-check", "density", "jprime", "report")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("input", nargs="?", help="semigroup JSON file (Cayley table or transformations)")
    common.add_argument("--fixture", help=f"use a bundled semigroup: {', '.join(corpus_names())}")
    common.add_argument("--json", dest="json_path", metavar="PATH", help="also write the JSON result here")
    common.add_argument("--oracle", action="store_true", help="run the brute-force verification paths")
    common.add_argument("--cap", help="cap overrides, e.g. 12 or congruences=12,jprime=8")
    common.add_argument("--seed", type=int, default=0, help="seed for randomised oracle checks")

    parser = argparse.ArgumentParser(prog="boolrep", description="Boolean representation theory of finite semigroups.")
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        p = sub.add_parser(name, parents=[common])
        if name == "aggm":
            p.add_argument("--j", type=int, required=True, help="regular J-class id")
        if name == "characters":
            p.add_argument("--module", default=None,
                           help="j:<id> (irreducible), free:<id> (free module on L-classes) or a module JSON file")
    return parser


def _load(args) -> tuple[FiniteSemigroup, str]:
    if args.fixture:
        return load_corpus(args.fixture), f"fixture:{args.fixture}"
    if not args.input:
        raise InputError("give an input file or --fixture")
    try:
        return load_semigroup(args.input), str(args.input)
    except OSError as exc:
        raise InputError(str(exc)) from exc


def _emit(args, human: str, data: Any) -> None:
    print(human)
    if args.json_path:
        Path(args.json_path).write_text(json.dumps(data, indent=2) + "\n")


def _table(rows: list[dict[str, Any]], keys: list[str]) -> str:
    widths = {k: max(len(k), *(len(str(r.get(k))) for r in rows)) for k in keys} if rows else {}
    lines = ["  ".join(k.ljust(widths[k]) for k in keys)]
    for r in rows:
        lines.append("  ".join(str(r.get(k)).ljust(widths[k]) for k in keys))
    return "\n".join(lines)


def cmd_validate(args, S, source, caps) -> int:
    G = green_structure(S)
    data = {"source": source, "order": S.order, "idempotents": sorted(G.idempotents),
            "j_classes": G.num_j_classes, "regular_j_classes": G.regular_j_classes()}
    lines = [f"ok: {source}: order {S.order}, {len(G.idempotents)} idempotents, "
             f"{G.num_j_classes} J-classes ({len(G.regular_j_classes())} regular)"]
    status = EXIT_OK
    if args.oracle:
        ok = rp.relabel_check(S, G, args.seed)
        data["relabel_invariant"] = ok
        lines.append(f"relabelling invariance (seed {args.seed}): {'ok' if ok else 'FAILED'}")
        status = EXIT_OK if ok else EXIT_INVARIANT
    _emit(args, "\n".join(lines), data)
    return status


def cmd_green(args, S, source, caps) -> int:
    G = green_structure(S)
    data = green_to_json(S, G)
    lines = [f"{source}: order {S.order}"]
    for rec in data["j_classes"]:
        kind = "regular" if rec["regular"] else "non-regular"
        lines.append(f"J{rec['id']} ({kind}, {len(rec['elements'])} elements)")
        lines.append(rec["eggbox"])
    lines.append("J-order (a <= b): " + ", ".join(f"{a}<={b}" for a, b in data["j_order"] if a != b))
    _emit(args, "\n".join(lines), data)
    return EXIT_OK


def cmd_irreducibles(args, S, source, caps) -> int:
    G = green_structure(S)
    rows = rp.irreducibles_section(S, G, caps)
    human = [f"{source}: {len(rows)} irreducible modules"]
    for r in rows:
        human.append(f"J{r['j_class']}: sandwich {' '.join(r['sandwich'])}  |M|={r['module_size']}  "
                     f"free={r['free']} faithful={r['faithful']} apex={r['apex']} "
                     f"AGGM order={r['aggm_order']} GGM={r['aggm_ggm']} aperiodic={r['aggm_aperiodic']} "
                     f"dense={r['dense']} fullEnd={r['spans_full_end']}")
    data: dict[str, Any] = {"source": source, "irreducibles": rows}
    status = EXIT_OK
    if args.oracle:
        orc = rp.oracle_irreducibility(S, G, caps)
        data["oracle"] = orc
        for r in orc:
            human.append(f"oracle J{r['j_class']}: {r}")
            if "skipped" not in r and not (r["minimal"] and r["simple"] and r["apex_ok"]):
                status = EXIT_INVARIANT
    _emit(args, "\n".join(human), data)
    return status


def cmd_aggm(args, S, source, caps) -> int:
    G = green_structure(S)
    if args.j not in G.regular_j_classes():
        raise InputError(f"J-class {args.j} is not a regular J-class id (regular: {G.regular_j_classes()})")
    A = aggm(S, G, args.j, caps)
    T = A.semigroup
    data = {"source": source, "j_class": args.j, "order": T.order, "labels": list(T.labels),
            "table": [list(r) for r in T.table], "quotient_map": list(A.quotient_map),
            "ggm": is_ggm(T), "aperiodic_distinguished_ideal": has_aperiodic_distinguished_ideal(T)}
    lines = [f"AGGM_J{args.j}: order {T.order}; GGM={data['ggm']} aperiodic={data['aperiodic_distinguished_ideal']}",
             "quotient map: " + " ".join(f"{S.label(s)}->{T.label(A.quotient_map[s])}" for s in S.elements)]
    lines += [" ".join(str(v) for v in row) for row in T.table]
    _emit(args, "\n".join(lines), data)
    return EXIT_OK


def _resolve_module(spec: str, S, G, caps):
    kind, _, rest = spec.partition(":")
    if kind in ("j", "free") and rest.isdigit():
        if int(rest) not in G.regular_j_classes():
            raise InputError(f"J-class {rest} is not a regular J-class id")
        I = irreducible_module(S, G, int(rest), caps)
        return I.module if kind == "j" else I.free_module
    path = Path(spec)
    if not path.exists():
        raise InputError(f"bad module spec {spec!r}")
    try:
        return module_from_json(json.loads(path.read_text()), S)
    except json.JSONDecodeError as exc:
        raise InputError(f"{spec}: invalid JSON ({exc})") from exc


def cmd_characters(args, S, source, caps) -> int:
    G = green_structure(S)
    if args.module:
        M = _resolve_module(args.module, S, G, caps)
        chk = check_module(M)
        if not chk.ok:
            raise InvariantViolation(f"module invalid: {chk.violation}", chk.witness)
        rec = rp.module_characters(M, caps)
        data = {"source": source, "module_spec": args.module, **rec}
        lines = [f"{args.module}: |M|={len(M)} sections={rec['sections']}",
                 f"min character: {rec['min_character']}", f"psi (D = M minus 0): {rec['psi_nonzero']}"]
        if "chi_matrix" in rec:
            lines.append(f"matrix character: {rec['chi_matrix']}  unambiguous={rec['unambiguous']}")
        _emit(args, "\n".join(lines), data)
        return EXIT_OK
    rows = rp.characters_section(S, G, caps)
    lines = []
    status = EXIT_OK
    for r in rows:
        lines.append(f"J{r['j_class']}: min={r['min_character']} psi_rows={r['psi_rows']} "
                     f"schutz={r['schutzenberger']} theorem={'ok' if r['schutz_theorem'] else 'FAILED'} "
                     f"sections={r['sections']}")
        if not r["schutz_theorem"]:
            status = EXIT_INVARIANT
    _emit(args, "\n".join(lines), {"source": source, "characters": rows})
    return status


def cmd_duality(args, S, source, caps) -> int:
    G = green_structure(S)
    rows = rp.duality_section(S, G, caps)
    _emit(args, _table(rows, ["module", "size", "simple", "minimal", "dual_simple", "dual_minimal", "ok"]),
          {"source": source, "duality": rows})
    return EXIT_OK if all(r["ok"] for r in rows) else EXIT_INVARIANT


def cmd_density(args, S, source, caps) -> int:
    G = green_structure(S)
    rows = rp.irreducibles_section(S, G, caps)
    keys = ["j_class", "module_size", "rank", "free", "distributive", "dense", "spans_full_end"]
    sel = [{k: r[k] for k in keys} for r in rows]
    _emit(args, _table(sel, keys), {"source": source, "density": sel})
    bad = any(r["dense"] is False or (r["free"] and r["spans_full_end"] is False) for r in sel)
    return EXIT_INVARIANT if bad else EXIT_OK


def cmd_jprime(args, S, source, caps) -> int:
    G = green_structure(S)
    if args.oracle and S.order > caps.jprime:
        raise CapExceeded("semigroup order for congruence enumeration", S.order, caps.jprime)
    rec = rp.jprime_section(S, G, caps, args.oracle)
    lines = [f"direct-sum kernel: {rec['direct_sum_kernel']}"]
    status = EXIT_OK
    if "oracle" in rec:
        lines.append(f"largest J'-congruence (oracle): {rec['oracle']['largest_jprime']} "
                     f"agrees={rec['oracle']['agrees']}")
        if not rec["oracle"]["agrees"]:
            status = EXIT_INVARIANT
    _emit(args, "\n".join(lines), {"source": source, **rec})
    return status


def cmd_report(args, S, source, caps) -> int:
    rep = rp.full_report(S, caps, source, oracle=args.oracle, seed=args.seed)
    G = green_structure(S)
    lines = [f"{source}: order {S.order}, {G.num_j_classes} J-classes, "
             f"{len(rep['regular_j_classes'])} regular"]
    for j in range(G.num_j_classes):
        lines.append(f"J{j}{'' if G.regular[j] else ' (non-regular)'}")
        lines.append(eggbox(S, G, j))
    for r in rep["irreducibles"]:
        lines.append(f"M_J{r['j_class']}: |M|={r['module_size']} free={r['free']} faithful={r['faithful']} "
                     f"GGM={r['aggm_ggm']} aperiodic={r['aggm_aperiodic']} dense={r['dense']}")
    for r in rep["characters"]:
        lines.append(f"chars J{r['j_class']}: min={r['min_character']} schutz_theorem={r['schutz_theorem']}")
    lines.append(f"direct-sum kernel: {rep['jprime']['direct_sum_kernel']}")
    status = EXIT_OK
    if args.oracle:
        orc = rep["jprime"].get("oracle", {})
        lines.append(f"J' oracle: {orc}")
        if orc.get("agrees") is False:
            status = EXIT_INVARIANT
        dual = rep["oracles"]["duality"]
        if isinstance(dual, list):
            lines.append(f"duality: {sum(r['ok'] for r in dual)}/{len(dual)} modules ok")
            if not all(r["ok"] for r in dual):
                status = EXIT_INVARIANT
        for r in rep["oracles"]["irreducibility"]:
            if "skipped" not in r and not (r["minimal"] and r["simple"] and r["apex_ok"]):
                status = EXIT_INVARIANT
    _emit(args, "\n".join(lines), rep)
    return status


HANDLERS = {
    "validate": cmd_validate,
    "green": cmd_green,
    "irreducibles": cmd_irreducibles,
    "aggm": cmd_aggm,
    "characters": cmd_characters,
    "duality-check": cmd_duality,
    "density": cmd_density,
    "jprime": cmd_jprime,
    "report": cmd_report,
}


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        caps = default_caps().with_overrides(args.cap)
        S, source = _load(args)
        return HANDLERS[args.command](args, S, source, caps)
    except (InputError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except InvariantViolation as exc:
        print(f"invariant violation: {exc}; witness={exc.witness}", file=sys.stderr)
        return EXIT_INVARIANT
    except CapExceeded as exc:
        print(f"cap exceeded: {exc}", file=sys.stderr)
        return EXIT_CAP


if __name__ == "__main__":
    sys.exit(main())
