"""Command-line front end.

Subcommands:

    classify N1 N2 N3      full verdict for one triple of branch degrees
    batch                  table over a triples file or an enumerated range
    search rho1|p1xp1|lattice
                           run one elimination argument or lattice search
    presets                list the built-in intersection lattices

Formats: ``--format text`` (default), ``json``, and for classify/batch
``csv``.  Output is deterministic: fixed field order, rows sorted by
triple, no timestamps.  Exit codes: 0 success, 2 invalid input, 3 internal
consistency failure (a cross-check between two routes disagreed, which is
a bug, not a user error).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import re
import sys

from .citations import PROP_INVARIANTS, PROP_LOW_DEGREE, THM_RANK_TWO, canonical_order
from .classify import line_bundle_status, ulrich_complexity
from .construction import CBRecipe, special_rank2_recipe
from .errors import ConsistencyError, DomainError
from .geometry import BranchTriple, invariants, picard_classification, validate_triple
from .lattice import DivisorClass, RationalClass, preset_lattice
from .numerics import (
    FeasibilityVerdict,
    UlrichCandidate,
    check_numerical_ulrich,
    p1xp1_line_search,
    rank1_rho1_search,
)

__all__ = ["main", "build_parser", "query_payload", "enumerate_triples"]

_UNSIGNED = re.compile(r"^[0-9]+$")

CSV_COLUMNS = (
    "n1",
    "n2",
    "n3",
    "parity",
    "k_squared",
    "chi",
    "rho_gt_1",
    "line_bundle",
    "uc_kind",
    "uc_value",
    "recipe_deg_c",
    "recipe_deg_cprime",
    "z_count",
)

EXCLUSION_NOTE = (
    f"rank-two recipe excluded for branch degrees (0,2,2): m = 2 there, and the "
    f"construction needs m >= 3 ({THM_RANK_TWO}); a rank-one bundle exists instead "
    f"({PROP_LOW_DEGREE})"
)


def unsigned_int(text: str) -> int:
    """Degree arguments: digits only, no signs."""
    if not _UNSIGNED.match(text):
        raise argparse.ArgumentTypeError(
            f"expected an unsigned integer (signs are rejected on degrees), got {text!r}"
        )
    return int(text)


def signed_int(text: str) -> int:
    try:
        return int(text, 10)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None


# ---------------------------------------------------------------------------
# query assembly


def query_payload(t) -> dict:
    """Everything the CLI reports about one triple, JSON-ready.

    Integers, strings, booleans and nulls only; field order is fixed so
    identical inputs render byte-identically.
    """
    t = validate_triple(t)
    inv = invariants(t)
    pic = picard_classification(t)
    lb = line_bundle_status(t)
    uc = ulrich_complexity(t)

    recipe = None
    recipe_note = None
    if t.is_even:
        if t.as_tuple() == (0, 2, 2):
            recipe_note = EXCLUSION_NOTE
        else:
            recipe = special_rank2_recipe(t)

    cited = {PROP_INVARIANTS, pic.cite}
    cited.update(w.cite for w in pic.witnesses)
    cited.update(lb.citations)
    cited.update(uc.trail)
    if recipe is not None:
        cited.add(THM_RANK_TWO)

    return {
        "triple": {"n1": t.n1, "n2": t.n2, "n3": t.n3, "parity": t.parity},
        "generic": True,
        "invariants": {
            "k_squared": inv.k_squared,
            "chi": inv.chi,
            "h_squared": inv.h_squared,
            "h_dot_k": inv.h_dot_k,
            "q": inv.q,
            "n": inv.n,
            "m": inv.m,
            "big_m": inv.big_m,
        },
        "picard": {
            "rho_is_one": pic.rho_is_one,
            "family": pic.family,
            "witnesses": [
                {"pair": [w.a, w.b], "rho": w.rho, "cite": w.cite} for w in pic.witnesses
            ],
        },
        "line_bundle": {
            "status": lb.status,
            "reason": lb.reason,
            "citations": list(lb.citations),
        },
        "complexity": {
            "kind": uc.kind,
            "value": uc.value,
            "bounds": None
            if uc.bounds is None
            else {"low": uc.bounds[0], "high": uc.bounds[1]},
            "trail": list(uc.trail),
        },
        "recipe": None if recipe is None else _recipe_payload(recipe),
        "recipe_note": recipe_note,
        "citations": list(canonical_order(cited)),
    }


def _recipe_payload(r: CBRecipe) -> dict:
    return {
        "m": r.m,
        "big_m": r.big_m,
        "residue": r.residue,
        "deg_e1": r.deg_e1,
        "deg_c": r.deg_c,
        "deg_cprime": r.deg_cprime,
        "z_count": r.z_count,
        "tangency_note": r.tangency_note,
    }


def uc_value_text(complexity: dict) -> str:
    if complexity["kind"] == "exact":
        return str(complexity["value"])
    if complexity["kind"] == "upper_bound":
        return f"{complexity['bounds']['low']}..{complexity['bounds']['high']}"
    return f">={complexity['bounds']['low']}"


def csv_row(payload: dict) -> list[str]:
    triple = payload["triple"]
    inv = payload["invariants"]
    recipe = payload["recipe"]
    return [
        str(triple["n1"]),
        str(triple["n2"]),
        str(triple["n3"]),
        triple["parity"],
        str(inv["k_squared"]),
        str(inv["chi"]),
        "false" if payload["picard"]["rho_is_one"] else "true",
        payload["line_bundle"]["status"],
        payload["complexity"]["kind"],
        uc_value_text(payload["complexity"]),
        "" if recipe is None else str(recipe["deg_c"]),
        "" if recipe is None else str(recipe["deg_cprime"]),
        "" if recipe is None else str(recipe["z_count"]),
    ]


def render_query_text(payload: dict) -> str:
    triple = payload["triple"]
    inv = payload["invariants"]
    pic = payload["picard"]
    lb = payload["line_bundle"]
    uc = payload["complexity"]
    out = [
        f"branch degrees ({triple['n1']}, {triple['n2']}, {triple['n3']})  "
        f"[{triple['parity']} cover; generic branch curves]",
        f"invariants: K^2 = {inv['k_squared']}, chi = {inv['chi']}, "
        f"H^2 = {inv['h_squared']}, H.K = {inv['h_dot_k']}, q = {inv['q']}, "
        f"n = {inv['n']}"
        + ("" if inv["m"] is None else f", m = {inv['m']}, M = {inv['big_m']}"),
    ]
    if pic["rho_is_one"]:
        out.append("picard: rho(S) = 1 (every intermediate double plane has rho = 1)")
    else:
        jumps = "; ".join(
            f"pair ({w['pair'][0]}, {w['pair'][1]}) gives rho = {w['rho']} [{w['cite']}]"
            for w in pic["witnesses"]
        )
        out.append(f"picard: rho(S) > 1, family {pic['family']}: {jumps}")
    out.append(f"line bundle: {lb['status']}")
    out.append(f"  {lb['reason']}")
    out.append(
        f"complexity: uc = {uc_value_text(uc)} ({uc['kind']})  "
        f"[{', '.join(uc['trail'])}]"
    )
    recipe = payload["recipe"]
    if recipe is not None:
        out.append(
            f"rank-two recipe: E1 degree {recipe['deg_e1']}, C degree {recipe['deg_c']}, "
            f"C' degree {recipe['deg_cprime']}, #Z = {recipe['z_count']} "
            f"(M mod 4 = {recipe['residue']})"
        )
        if recipe["tangency_note"]:
            out.append(f"  note: {recipe['tangency_note']}")
    elif payload["recipe_note"]:
        out.append(f"recipe: none ({payload['recipe_note']})")
    else:
        out.append("recipe: none (odd cover)")
    out.append(f"citations: {', '.join(payload['citations'])}")
    return "\n".join(out)


# ---------------------------------------------------------------------------
# input handling


def enumerate_triples(max_degree: int) -> list[BranchTriple]:
    """All admissible sorted triples with n3 <= max_degree, in lex order."""
    out = []
    for n1 in range(max_degree + 1):
        for n2 in range(n1, max_degree + 1):
            for n3 in range(n2, max_degree + 1):
                try:
                    out.append(BranchTriple(n1, n2, n3))
                except DomainError:
                    continue
    return out


def parse_triples_file(stream) -> tuple[list[BranchTriple], list[str]]:
    """Whitespace-separated degrees, three per line; '#' starts a comment.

    Returns the valid triples (sorted canonically, duplicates collapsed)
    and one diagnostic string per skipped line.
    """
    triples = []
    diagnostics = []
    for lineno, raw in enumerate(stream, start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if len(tokens) != 3:
            diagnostics.append(
                f"line {lineno}: expected three degrees, got {len(tokens)}: {line!r}"
            )
            continue
        if not all(_UNSIGNED.match(tok) for tok in tokens):
            diagnostics.append(
                f"line {lineno}: degrees must be unsigned integers: {line!r}"
            )
            continue
        try:
            triples.append(validate_triple(tuple(int(tok) for tok in tokens)))
        except DomainError as exc:
            diagnostics.append(f"line {lineno}: {exc}")
    seen = set()
    unique = []
    for t in sorted(triples, key=lambda t: t.as_tuple()):
        if t.as_tuple() not in seen:
            seen.add(t.as_tuple())
            unique.append(t)
    return unique, diagnostics


# ---------------------------------------------------------------------------
# subcommand implementations


def cmd_classify(args) -> int:
    t = validate_triple((args.n1, args.n2, args.n3))
    payload = query_payload(t)
    if args.format == "json":
        print(json.dumps(payload, indent=2))
    elif args.format == "csv":
        print(_csv_text([payload]), end="")
    else:
        print(render_query_text(payload))
    return 0


def _csv_text(payloads: list[dict]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for payload in payloads:
        writer.writerow(csv_row(payload))
    return buffer.getvalue()


def _batch_table_text(payloads: list[dict]) -> str:
    rows = [list(CSV_COLUMNS)] + [csv_row(p) for p in payloads]
    widths = [max(len(row[i]) for row in rows) for i in range(len(CSV_COLUMNS))]
    lines = [
        "  ".join(cell.ljust(widths[i]) for i, cell in enumerate(row)).rstrip()
        for row in rows
    ]
    return "\n".join(lines)


def cmd_batch(args) -> int:
    diagnostics: list[str] = []
    if args.input is not None:
        try:
            with open(args.input, "r", encoding="utf-8") as stream:
                triples, diagnostics = parse_triples_file(stream)
        except OSError as exc:
            print(f"error: cannot read {args.input}: {exc}", file=sys.stderr)
            return 2
    else:
        triples = enumerate_triples(args.max_degree)
    payloads = [query_payload(t) for t in triples]
    if args.format == "json":
        print(json.dumps(payloads, indent=2))
    elif args.format == "csv":
        print(_csv_text(payloads), end="")
    else:
        print(_batch_table_text(payloads))
    for diagnostic in diagnostics:
        print(f"skipped {diagnostic}", file=sys.stderr)
    return 2 if diagnostics else 0


def _candidate_payload(cand: UlrichCandidate) -> dict:
    if isinstance(cand.c1, RationalClass):
        c1 = {
            "numerator": list(cand.c1.numerator.coords),
            "denominator": cand.c1.denominator,
        }
    else:
        c1 = list(cand.c1.coords)
    return {"c1": c1, "c2": cand.c2, "rank": cand.rank}


def _verdict_payload(verdict: FeasibilityVerdict) -> dict:
    return {
        "status": verdict.status,
        "trace": [{"step": s.step, "cite": s.cite} for s in verdict.trace],
        "candidates": [_candidate_payload(c) for c in verdict.candidates],
    }


def _print_verdict(verdict: FeasibilityVerdict, header: dict, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(header | {"verdict": _verdict_payload(verdict)}, indent=2))
    else:
        for key, value in header.items():
            print(f"{key}: {value}")
        print(verdict.render())


def cmd_search_rho1(args) -> int:
    t = validate_triple(tuple(args.triple))
    verdict = rank1_rho1_search(t)
    _print_verdict(
        verdict,
        {"search": "rho1", "triple": list(t.as_tuple())},
        args.format,
    )
    return 0


def cmd_search_p1xp1(args) -> int:
    verdict = p1xp1_line_search(args.n, bound=args.bound)
    bound = args.bound if args.bound is not None else 10 * (args.n + 1)
    _print_verdict(
        verdict,
        {"search": "p1xp1", "n": args.n, "bound": bound},
        args.format,
    )
    return 0


def cmd_search_lattice(args) -> int:
    from .lattice import brute_force_search  # local import keeps startup light

    if args.preset == "rank1_bidouble":
        if args.triple is None:
            raise DomainError("preset rank1_bidouble needs --triple N1 N2 N3")
        lat = preset_lattice("rank1_bidouble", tuple(args.triple))
    else:
        if args.triple is not None:
            raise DomainError(f"--triple only applies to rank1_bidouble, not {args.preset}")
        lat = preset_lattice(args.preset)
    bound = args.bound if args.bound is not None else 10 * (abs(args.degree) + 1)
    hits = brute_force_search(lat, bound, args.degree, args.selfint)
    described = []
    for d in hits:
        genus = lat.genus(d)
        entry = {
            "coords": list(d.coords),
            "degree": lat.pair(d, lat.h),
            "selfint": lat.pair(d, d),
            "genus": int(genus) if genus.denominator == 1 else str(genus),
        }
        if lat.chi is not None:
            entry["rank1_ulrich"] = check_numerical_ulrich(lat, UlrichCandidate(d, 0, 1))
        described.append(entry)
    if args.format == "json":
        print(
            json.dumps(
                {
                    "search": "lattice",
                    "preset": lat.describe(),
                    "bound": bound,
                    "degree": args.degree,
                    "selfint": args.selfint,
                    "hits": described,
                },
                indent=2,
            )
        )
    else:
        print(
            f"lattice search on {lat.describe()}: box bound {bound}, "
            f"degree {args.degree}, self-intersection {args.selfint}"
        )
        print(f"{len(described)} hit(s)")
        for entry in described:
            extras = f", genus {entry['genus']}"
            if "rank1_ulrich" in entry:
                extras += f", rank-1 Ulrich equalities: {entry['rank1_ulrich']}"
            print(f"  {tuple(entry['coords'])}{extras}")
    return 0


_PRESET_SPECS = (
    ("k3_024", (), "the K3-type cover with branch degrees (0, 2, 4)"),
    ("p1xp1", (), "the smooth quadric (two rulings)"),
    ("delpezzo", (4,), "del Pezzo of given degree 1..9; shown for degree 4"),
    (
        "rank1_bidouble",
        ((2, 2, 2),),
        "Z*H for an even bidouble plane; shown for degrees (2, 2, 2)",
    ),
)


def cmd_presets(args) -> int:
    entries = []
    for name, params, note in _PRESET_SPECS:
        lat = preset_lattice(name, *params)
        entries.append(
            {
                "name": name,
                "note": note,
                "rank": lat.rank,
                "basis": list(lat.basis_labels),
                "gram": [list(row) for row in lat.gram],
                "h": list(lat.h.coords),
                "k": list(lat.k.coords),
                "chi": lat.chi,
            }
        )
    if args.format == "json":
        print(json.dumps(entries, indent=2))
        return 0
    blocks = []
    for entry in entries:
        lines = [
            f"{entry['name']}  (rank {entry['rank']}, chi = {entry['chi']})",
            f"  {entry['note']}",
            f"  basis: {' '.join(entry['basis'])}",
            "  gram:",
        ]
        width = max(
            len(str(v)) for row in entry["gram"] for v in row
        )
        for row in entry["gram"]:
            lines.append("    [" + " ".join(str(v).rjust(width) for v in row) + "]")
        lines.append(f"  H = {tuple(entry['h'])}   K = {tuple(entry['k'])}")
        blocks.append("\n".join(lines))
    print("\n\n".join(blocks))
    return 0


# ---------------------------------------------------------------------------
# parser


def _add_format(parser, choices=("text", "json", "csv")) -> None:
    parser.add_argument(
        "--format",
        choices=list(choices),
        default="text",
        help="output format (default: text)",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bidouble",
        description="Exact classification of Ulrich bundle data on bidouble planes.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_classify = sub.add_parser(
        "classify", help="full verdict for one triple of branch degrees"
    )
    p_classify.add_argument("n1", type=unsigned_int)
    p_classify.add_argument("n2", type=unsigned_int)
    p_classify.add_argument("n3", type=unsigned_int)
    _add_format(p_classify)
    p_classify.set_defaults(func=cmd_classify)

    p_batch = sub.add_parser("batch", help="classification table over many triples")
    source = p_batch.add_mutually_exclusive_group(required=True)
    source.add_argument(
        "--input", help="file of whitespace-separated triples, '#' comments allowed"
    )
    source.add_argument(
        "--max-degree",
        type=unsigned_int,
        help="enumerate all admissible sorted triples with n3 <= N",
    )
    _add_format(p_batch)
    p_batch.set_defaults(func=cmd_batch)

    p_search = sub.add_parser("search", help="run one elimination argument or search")
    search_sub = p_search.add_subparsers(dest="search_command", required=True)

    p_rho1 = search_sub.add_parser(
        "rho1", help="rank-1 elimination on an even Picard-number-one cover"
    )
    p_rho1.add_argument("--triple", type=unsigned_int, nargs=3, required=True)
    _add_format(p_rho1, choices=("text", "json"))
    p_rho1.set_defaults(func=cmd_search_rho1)

    p_quadric = search_sub.add_parser(
        "p1xp1", help="quadric discriminant route for (0,2,2n) covers"
    )
    p_quadric.add_argument("--n", type=unsigned_int, required=True)
    p_quadric.add_argument(
        "--bound", type=unsigned_int, help="box bound for the cross-check (default 10(n+1))"
    )
    _add_format(p_quadric, choices=("text", "json"))
    p_quadric.set_defaults(func=cmd_search_p1xp1)

    p_lattice = search_sub.add_parser(
        "lattice", help="brute-force class search on a preset lattice"
    )
    p_lattice.add_argument(
        "--preset", required=True, help="p1xp1, k3_024, delpezzoN, or rank1_bidouble"
    )
    p_lattice.add_argument(
        "--triple", type=unsigned_int, nargs=3, help="branch degrees for rank1_bidouble"
    )
    p_lattice.add_argument("--degree", type=unsigned_int, required=True)
    p_lattice.add_argument("--selfint", type=signed_int, required=True)
    p_lattice.add_argument(
        "--bound",
        type=unsigned_int,
        help="coordinate box bound (default 10(degree+1))",
    )
    _add_format(p_lattice, choices=("text", "json"))
    p_lattice.set_defaults(func=cmd_search_lattice)

    p_presets = sub.add_parser("presets", help="list built-in lattices with Gram matrices")
    _add_format(p_presets, choices=("text", "json"))
    p_presets.set_defaults(func=cmd_presets)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ConsistencyError as exc:
        print(f"internal consistency failure: {exc}", file=sys.stderr)
        return 3
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
