"""Command-line front end.

Subcommands: classify, subgroups, codes, decide, witness, verify, graph,
catalogue.  Single decisions print one JSON object; batch outputs are
JSON lines; ``catalogue`` prints a plain-text pass/fail table.  Exit code
0 means success (or a positive verdict), 1 a negative verdict, 2 an
error, in which case a JSON error object goes to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from .catalogue import catalogue_groups
from .cayley import build_cayley, export_dot, group_ring_product_check, is_perfect_code_graph
from .classify import decide, enumerate_codes, is_code_perfect
from .construct import search_transversal
from .errors import PerfcodeError, SpecSemanticError, SpecSyntaxError
from .groups import FiniteGroup, build_group, has_element_of_order_4
from .specparse import parse_spec
from .subgroups import all_subgroups, generated_subgroup


@dataclass(frozen=True)
class Command:
    kind: str
    spec_text: str | None = None
    subgroup: str | None = None
    connection: str | None = None
    code: str | None = None
    highlight: str | None = None
    out_path: str | None = None
    max_order: int = 32
    strict: bool = False


def build_command(argv) -> Command:
    parser = argparse.ArgumentParser(
        prog="perfcode",
        description="Decide and construct subgroup perfect codes in Cayley graphs.",
    )
    parser.add_argument("--strict", action="store_true",
                        help="force the full cubic associativity check")
    sub = parser.add_subparsers(dest="kind", required=True)

    p = sub.add_parser("classify", help="is every subgroup a perfect code?")
    p.add_argument("spec")
    p = sub.add_parser("subgroups", help="list all subgroups as JSON lines")
    p.add_argument("spec")
    p = sub.add_parser("codes", help="decide every subgroup, one JSON line each")
    p.add_argument("spec")
    for name in ("decide", "witness"):
        p = sub.add_parser(name, help="decide one subgroup (witness included)")
        p.add_argument("spec")
        p.add_argument("--subgroup", required=True,
                       help="generators: labels like x^4,y or element ids")
    p = sub.add_parser("verify",
                       help="check a (connection set, code) pair two independent ways")
    p.add_argument("spec")
    p.add_argument("--s", required=True, dest="connection",
                   help="connection set: labels or element ids")
    p.add_argument("--code", required=True, help="code elements: labels or ids")
    p = sub.add_parser("graph", help="write the Cayley graph as DOT")
    p.add_argument("spec")
    p.add_argument("--s", required=True, dest="connection")
    p.add_argument("--highlight", default=None)
    p.add_argument("--out", required=True, dest="out_path")
    p = sub.add_parser("catalogue",
                       help="run the oracle-agreement suite over the catalogue")
    p.add_argument("--max-order", type=int, default=32, dest="max_order")

    ns = parser.parse_args(argv)
    return Command(
        kind=ns.kind,
        spec_text=getattr(ns, "spec", None),
        subgroup=getattr(ns, "subgroup", None),
        connection=getattr(ns, "connection", None),
        code=getattr(ns, "code", None),
        highlight=getattr(ns, "highlight", None),
        out_path=getattr(ns, "out_path", None),
        max_order=getattr(ns, "max_order", 32),
        strict=ns.strict,
    )


def _split_tokens(text: str) -> list[str]:
    """Split on commas that are not inside parentheses."""
    out = []
    depth = 0
    cur = []
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == "," and depth == 0:
            out.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    out.append("".join(cur))
    return [t for t in (t.strip() for t in out) if t]


def resolve_elements(G: FiniteGroup, text: str) -> tuple[int, ...]:
    """Resolve comma-separated element ids or label expressions."""
    norm = {lab.replace("*", "").replace(" ", ""): i
            for i, lab in enumerate(G.labels)}
    out = []
    for tok in _split_tokens(text):
        if tok.lstrip("-").isdigit():
            v = int(tok)
            if not 0 <= v < G.order:
                raise ValueError(f"element id {v} out of range")
            out.append(v)
            continue
        key = tok.replace("*", "").replace(" ", "")
        if key in norm:
            out.append(norm[key])
            continue
        raise ValueError(f"cannot resolve element {tok!r} against group labels")
    return tuple(out)


def _emit(obj) -> None:
    sys.stdout.write(json.dumps(obj) + "\n")


def run_command(cmd: Command) -> int:
    handler = {
        "classify": _cmd_classify,
        "subgroups": _cmd_subgroups,
        "codes": _cmd_codes,
        "decide": _cmd_decide,
        "witness": _cmd_decide,
        "verify": _cmd_verify,
        "graph": _cmd_graph,
        "catalogue": _cmd_catalogue,
    }[cmd.kind]
    return handler(cmd)


def _group(cmd: Command) -> FiniteGroup:
    return build_group(parse_spec(cmd.spec_text), strict=cmd.strict)


def _cmd_classify(cmd: Command) -> int:
    G = _group(cmd)
    decision = is_code_perfect(G, "fast")
    if decision.verdict:
        reason = "no elements of order 4"
    else:
        sub = decision.negative_witness.subgroup
        bad = sub[1] if len(sub) > 1 else 0
        reason = (f"has elements of order 4; the subgroup generated by "
                  f"{G.labels[bad]} is not a perfect code")
    _emit({"code_perfect": decision.verdict, "reason": reason})
    return 0 if decision.verdict else 1


def _cmd_subgroups(cmd: Command) -> int:
    G = _group(cmd)
    for H in all_subgroups(G):
        _emit({"order": H.order, "elements": list(H.elements)})
    return 0


def _cmd_codes(cmd: Command) -> int:
    G = _group(cmd)
    for H, decision in enumerate_codes(G):
        line = {"subgroup": list(H.elements), "order": H.order}
        line.update(decision.to_json())
        _emit(line)
    return 0


def _cmd_decide(cmd: Command) -> int:
    G = _group(cmd)
    gens = resolve_elements(G, cmd.subgroup)
    H = generated_subgroup(G, gens)
    decision = decide(G, H)
    out = {"subgroup": list(H.elements)}
    out.update(decision.to_json())
    _emit(out)
    return 0 if decision.verdict else 1


def _cmd_verify(cmd: Command) -> int:
    G = _group(cmd)
    graph = build_cayley(G, resolve_elements(G, cmd.connection))
    code = resolve_elements(G, cmd.code)
    mult = group_ring_product_check(G, graph.connection, code)
    dominated = is_perfect_code_graph(graph, code)
    assert dominated == mult.is_all_ones(), (
        "graph-domination and group-ring criteria disagree")
    _emit({
        "multiplicity": mult.to_json(),
        "graph_domination": dominated,
        "agreement": True,
        "perfect_code": dominated,
    })
    return 0 if dominated else 1


def _cmd_graph(cmd: Command) -> int:
    G = _group(cmd)
    graph = build_cayley(G, resolve_elements(G, cmd.connection))
    highlight = resolve_elements(G, cmd.highlight) if cmd.highlight else ()
    text = export_dot(graph, highlight)
    with open(cmd.out_path, "w", encoding="utf-8") as fh:
        fh.write(text)
    _emit({
        "out": cmd.out_path,
        "nodes": G.order,
        "edges": graph.edge_count(),
        "highlighted": len(highlight),
    })
    return 0


def _cmd_catalogue(cmd: Command) -> int:
    all_ok = True
    print(f"{'group':<28} {'order':>5} {'subs':>5} {'codes':>5}  status")
    for name, G in catalogue_groups(cmd.max_order):
        subs = all_subgroups(G)
        ok = True
        n_codes = 0
        for H, decision in enumerate_codes(G):
            oracle = search_transversal(G, H).is_witness
            if decision.verdict != oracle:
                ok = False
            n_codes += decision.verdict
        all_ok &= ok
        print(f"{name:<28} {G.order:>5} {len(subs):>5} {n_codes:>5}  "
              f"{'ok' if ok else 'FAIL'}")
    print("catalogue:", "all groups agree with the search oracle"
          if all_ok else "DISAGREEMENT FOUND")
    return 0 if all_ok else 1


def main(argv=None) -> int:
    try:
        cmd = build_command(argv if argv is not None else sys.argv[1:])
    except SystemExit as exc:  # argparse reports its own errors
        return int(exc.code or 0)
    try:
        return run_command(cmd)
    except SpecSyntaxError as exc:
        _error({"error": "SpecSyntaxError", "message": str(exc),
                "offset": exc.offset, "expected": list(exc.expected)})
    except SpecSemanticError as exc:
        _error({"error": "SpecSemanticError", "message": str(exc),
                "offset": exc.offset})
    except PerfcodeError as exc:
        _error({"error": type(exc).__name__, "message": str(exc)})
    except (ValueError, OSError) as exc:
        _error({"error": type(exc).__name__, "message": str(exc)})
    return 2


def _error(obj) -> None:
    sys.stderr.write(json.dumps(obj) + "\n")


if __name__ == "__main__":
    raise SystemExit(main())
