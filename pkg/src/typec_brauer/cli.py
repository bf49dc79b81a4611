"""Command-line front end.

Every computation is exposed as a subcommand with deterministic JSON
output (or a plain-text table derived from it).  Exit status: 0 on
success, 1 when an enumeration bound is exceeded, 2 for usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from importlib import resources
from math import factorial

from .algebra import evaluate_word, relation_report_json, verify_relations
from .diagrams import enumerate_symmetric_diagrams
from .errors import ResourceLimitError, TypeCBrauerError
from .hyperoctahedral import enumerate_group
from .inflation import (
    SymmetricDangle,
    check_stratification,
    enumerate_dangles,
    phi,
    psi,
)
from .representations import (
    bipartitions_of,
    decomposition_matrix,
    gram_report,
    h_cell_dimension,
    qh_verdict,
)
from .scalars import FieldSpec


def schema_for(subcommand: str):
    """Parsed JSON schema shipped for one subcommand's output."""
    path = resources.files("typec_brauer") / "schemas" / f"{subcommand}.schema.json"
    return json.loads(path.read_text())


def _field_spec(args) -> FieldSpec:
    return FieldSpec.parse(args.delta, args.char)


def _cmd_relations(args):
    return relation_report_json(verify_relations(args.n))


def _cmd_mult(args):
    return evaluate_word(args.word, args.n).to_json()


def _cmd_dims(args):
    layers = []
    total = 0
    for a in range(args.n + 1):
        m = args.n - a
        dangles = len(enumerate_dangles(args.n, a))
        order = 2**m * factorial(m)
        total += dangles * dangles * order
        cells = []
        for b in bipartitions_of(m):
            hdim = h_cell_dimension(b)
            cells.append(
                {
                    "bipartition": b.to_json(),
                    "h_dim": hdim,
                    "cell_dim": dangles * hdim,
                }
            )
        layers.append(
            {"a": a, "dangles": dangles, "group_order": order, "cells": cells}
        )
    return {"n": args.n, "total_dimension": total, "layers": layers}


def _cmd_dangles(args):
    found = enumerate_dangles(args.n, args.arcs)
    return {
        "n": args.n,
        "a": args.arcs,
        "count": len(found),
        "dangles": [d.to_json() for d in found],
    }


def _cmd_psi(args):
    element = evaluate_word(args.word, args.n)
    if len(element.terms) != 1:
        raise TypeCBrauerError(
            "psi needs a word evaluating to a single diagram term"
        )
    ((diagram, coeff),) = element.terms.items()
    return {"coefficient": coeff.to_json(), "triple": psi(diagram).to_json()}


def _parse_arcs(text: str):
    data = json.loads(text)
    return [tuple(p) for p in data]


def _cmd_phi(args):
    f = SymmetricDangle(args.n, _parse_arcs(args.f))
    g = SymmetricDangle(args.n, _parse_arcs(args.g))
    return phi(f, g).to_json()


def _cmd_stratify(args):
    return check_stratification(args.n, _field_spec(args)).to_json()


def _cmd_gram(args):
    return gram_report(args.n, _field_spec(args))


def _cmd_decomp(args):
    return decomposition_matrix(args.n, _field_spec(args)).to_json()


def _cmd_enumerate(args):
    if args.what == "diagrams":
        items = enumerate_symmetric_diagrams(args.n, args.bound)
        return {
            "kind": "diagrams",
            "n": args.n,
            "count": len(items),
            "items": [d.to_json() for d in items],
        }
    items = enumerate_group(args.n, args.bound)
    return {
        "kind": "group",
        "m": args.n,
        "count": len(items),
        "items": [w.to_json() for w in items],
    }


def _cmd_qh(args):
    return qh_verdict(args.n, _field_spec(args)).to_json()


def _render_table(payload, indent=0):
    pad = "  " * indent
    lines = []
    if isinstance(payload, dict):
        for key, value in payload.items():
            if isinstance(value, (dict, list)):
                lines.append(f"{pad}{key}:")
                lines.extend(_render_table(value, indent + 1))
            else:
                lines.append(f"{pad}{key}: {value}")
    elif isinstance(payload, list):
        for item in payload:
            if isinstance(item, (dict, list)):
                lines.append(f"{pad}-")
                lines.extend(_render_table(item, indent + 1))
            else:
                lines.append(f"{pad}- {item}")
    else:
        lines.append(f"{pad}{payload}")
    return lines


def _add_common(parser, *, field=False, word=False, arcs=False, what=False):
    parser.add_argument("--n", type=int, required=True, help="rank")
    parser.add_argument("--format", choices=["json", "table"], default="json")
    parser.add_argument("--seed", type=int, default=0,
                        help="reserved; all subcommands are deterministic")
    parser.add_argument("--bound", type=int, default=None,
                        help="enumeration bound override")
    if field:
        parser.add_argument("--delta", default="generic",
                            help="loop parameter: generic, an integer, or p/q")
        parser.add_argument("--char", type=int, default=0,
                            help="field characteristic (0 or a prime)")
    if word:
        parser.add_argument("--word", required=True,
                            help="whitespace-separated tokens r<i> e<i> f<k> 1")
    if arcs:
        parser.add_argument("--f", required=True, help="arc list, e.g. [[1,2]]")
        parser.add_argument("--g", required=True, help="arc list, e.g. [[1,2]]")
    if what:
        parser.add_argument("--what", choices=["diagrams", "group"],
                            default="diagrams")


_DISPATCH = {
    "relations": _cmd_relations,
    "mult": _cmd_mult,
    "dims": _cmd_dims,
    "dangles": _cmd_dangles,
    "psi": _cmd_psi,
    "phi": _cmd_phi,
    "stratify": _cmd_stratify,
    "gram": _cmd_gram,
    "decomp": _cmd_decomp,
    "enumerate": _cmd_enumerate,
    "qh": _cmd_qh,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="typecbrauer",
        description="Exact computations in the type C Brauer algebra",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    _add_common(sub.add_parser("relations", help="verify the relation families"))
    _add_common(sub.add_parser("mult", help="evaluate a word"), word=True)
    _add_common(sub.add_parser("dims", help="layer and cell dimensions"))
    p = sub.add_parser("dangles", help="enumerate symmetric dangles")
    _add_common(p)
    p.add_argument("--arcs", type=int, required=True, help="arc count")
    _add_common(sub.add_parser("psi", help="layer datum of a diagram"), word=True)
    _add_common(sub.add_parser("phi", help="dangle form value"), arcs=True)
    _add_common(sub.add_parser("stratify", help="layer structure checks"), field=True)
    _add_common(sub.add_parser("gram", help="cell Gram ranks"), field=True)
    _add_common(sub.add_parser("decomp", help="decomposition matrices"), field=True)
    _add_common(sub.add_parser("enumerate", help="diagrams or group elements"),
                what=True)
    _add_common(sub.add_parser("qh", help="quasi-heredity verdict"), field=True)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        payload = _DISPATCH[args.command](args)
    except ResourceLimitError as exc:
        print(f"resource limit: {exc}", file=sys.stderr)
        return 1
    except (TypeCBrauerError, ValueError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.format == "json":
        sys.stdout.write(json.dumps(payload, indent=2) + "\n")
    else:
        sys.stdout.write("\n".join(_render_table(payload)) + "\n")
    return 0


if __name__ == "__main__":
    sys.exit(main())
