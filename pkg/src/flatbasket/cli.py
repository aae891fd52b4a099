"""Command-line front end.

Subcommands: encode, decode, invariants, enumerate, search, render,
verify. Data goes to stdout, diagnostics to stderr; every subcommand is
deterministic (identical argv and stdin produce identical stdout bytes).
Exit status: 0 on success, 1 on domain errors, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys

from . import enumeration
from .basket import FlatBasketCode, link_of_code, trace_components, validate_code
from .braid import (
    BraidWord,
    closure_component_count,
    free_reduce,
    parse_braid,
    to_tw_form,
    tw_prefix,
)
from .coder import encode_word, intermediate_code, letter_labels
from .errors import FlatBasketError
from .invariants import (
    Fingerprint,
    LaurentPolynomial,
    alexander,
    fingerprint,
    seifert_matrix,
)
from .render import RenderSpec, render_svg


def _parse_code_text(text: str) -> tuple[int, ...]:
    tokens = [t for t in re.split(r"[,\s]+", text.strip()) if t]
    values = []
    for k, token in enumerate(tokens):
        try:
            values.append(int(token))
        except ValueError:
            raise FlatBasketError(
                f"code entry {k + 1}: {token!r} is not an integer"
            ) from None
    return tuple(values)


def _code_arg(args) -> FlatBasketCode:
    return validate_code(_parse_code_text(args.code), strict=not args.lenient)


def _print_code(code: FlatBasketCode) -> None:
    print(",".join(str(x) for x in code.word))


def _fingerprint_from_json(text: str) -> Fingerprint:
    record = json.loads(text)
    coeffs = {int(e): int(c) for e, c in record.get("alexander_coeffs", [])}
    if "alexander_coeffs" not in record:
        raise FlatBasketError(
            'expected fingerprint JSON with an "alexander_coeffs" list; '
            'use e.g. `flatbasket invariants CODE --emit json` output'
        )
    return Fingerprint(
        components=int(record["components"]),
        alexander=LaurentPolynomial.from_dict(coeffs),
        determinant=int(record["det"]),
        signature=int(record["signature"]),
        linking_abs=tuple(sorted(int(x) for x in record["lk"])),
    )


def _fingerprint_json(fp: Fingerprint) -> dict:
    record = fp.as_dict()
    record["alexander_coeffs"] = [list(t) for t in fp.alexander.terms]
    return record


def _budgets() -> tuple[int, int]:
    env = os.environ.get("FLATBASKET_BUDGET")
    if env is not None:
        try:
            value = int(env)
        except ValueError:
            raise FlatBasketError(f"FLATBASKET_BUDGET={env!r} is not an integer")
        return value, value
    return enumeration.DEFAULT_CLASSIFY_BUDGET, enumeration.DEFAULT_STREAM_BUDGET


def _cmd_encode(args) -> int:
    braid = parse_braid(args.braid, args.strands)
    if args.no_tw_prefix:
        letters = free_reduce(braid.letters) if args.reduce else braid.letters
        w = BraidWord(braid.strands, letters)
    else:
        w = to_tw_form(braid, reduce=args.reduce)
    labeling = letter_labels(w)
    c1 = intermediate_code(w, labeling)
    code = encode_word(w)
    if args.emit == "labels":
        print(",".join(str(x) for x in labeling.labels))
    elif args.emit == "c1":
        print(",".join(str(x) for x in c1.word))
    elif args.emit == "json":
        print(
            json.dumps(
                {
                    "braid": braid.as_dict(),
                    "w": w.as_dict(),
                    "m": len(w.letters),
                    "s": w.positive_count,
                    "labels": list(labeling.labels),
                    "c1": list(c1.word),
                    "code": list(code.word),
                    "bands": code.n,
                }
            )
        )
    else:
        _print_code(code)
    return 0


def _cmd_decode(args) -> int:
    code = _code_arg(args)
    if args.emit == "components":
        print(trace_components(code).count)
        return 0
    link = link_of_code(code)
    if args.emit == "gauss":
        for visits in link.gauss_visits:
            tokens = [
                f"{role}{cid}{'+' if sign > 0 else '-'}" for cid, role, sign in visits
            ]
            print(" ".join(tokens) if tokens else "-")
    elif args.emit == "pd":
        for quad in link.pd_code:
            print("X({},{},{},{})".format(*quad))
    else:
        print(
            json.dumps(
                {
                    "code": list(code.word),
                    "bands": link.bands,
                    "components": link.component_count,
                    "crossings": [
                        {
                            "over": list(c.over),
                            "under": list(c.under),
                            "sign": c.sign,
                            "over_component": oc,
                            "under_component": uc,
                        }
                        for c, (oc, uc) in zip(
                            link.crossings, link.crossing_components
                        )
                    ],
                    "pd": [list(q) for q in link.pd_code],
                    "gauss": [
                        [[cid, role, sign] for cid, role, sign in visits]
                        for visits in link.gauss_visits
                    ],
                    "interleaving": [list(p) for p in link.interleaving],
                }
            )
        )
    return 0


def _cmd_invariants(args) -> int:
    code = _code_arg(args)
    if args.emit == "matrix":
        for row in seifert_matrix(code).rows:
            print(" ".join(str(x) for x in row))
    elif args.emit == "alexander":
        print(alexander(seifert_matrix(code)))
    elif args.emit == "json":
        record = {"code": list(code.word)}
        record.update(_fingerprint_json(fingerprint(code)))
        record["seifert_matrix"] = [list(r) for r in seifert_matrix(code).rows]
        print(json.dumps(record))
    else:
        fp = fingerprint(code)
        print(f"components: {fp.components}")
        print(f"alexander: {fp.alexander}")
        print(f"det: {fp.determinant}")
        print(f"signature: {fp.signature}")
        print("lk: {}".format(" ".join(str(x) for x in fp.linking_abs) or "-"))
    return 0


def _cmd_enumerate(args) -> int:
    classify_budget, stream_budget = _budgets()
    if args.raw:
        if args.report_dir:
            print("error: --report-dir requires classification mode", file=sys.stderr)
            return 2
        if args.n > stream_budget:
            raise FlatBasketError(
                f"enumeration of {args.n} bands exceeds the budget {stream_budget}"
            )
        for code in enumeration.enumerate_codes(args.n):
            print(json.dumps({"code": list(code.word)}))
        return 0
    records = [
        rec.as_dict()
        for rec in enumeration.classify(args.n, budget=classify_budget, jobs=args.jobs)
    ]
    for record in records:
        print(json.dumps(record))
    if args.report_dir:
        from .report import write_report

        for path in write_report(records, args.report_dir):
            print(f"wrote {path}", file=sys.stderr)
    return 0


def _cmd_search(args) -> int:
    classify_budget, _ = _budgets()
    if args.like is None and args.target is None:
        print("error: search needs --like CODE or --target JSON", file=sys.stderr)
        return 2
    if args.like is not None:
        target = fingerprint(validate_code(_parse_code_text(args.like), strict=False))
    else:
        target = _fingerprint_from_json(args.target)
    max_n = args.max_n if args.max_n is not None else classify_budget
    result = enumeration.search_min_code(target, max_n, budget=classify_budget)
    if args.emit == "json":
        payload = {"target": _fingerprint_json(target), "max_n": max_n}
        payload.update(result.as_dict() if result else {"code": None})
        print(json.dumps(payload))
    elif result is None:
        print(f"no match with at most {max_n} bands", file=sys.stderr)
    else:
        _print_code(result.code)
        print(f"# {result.bands} bands, {result.scanned} codes scanned; {result.note}")
    return 0


def _cmd_render(args) -> int:
    code = _code_arg(args)
    spec = RenderSpec(
        code=code,
        width=args.width,
        height=args.height,
        show_labels=not args.no_labels,
        show_shading=not args.no_shading,
    )
    text = render_svg(spec)
    if args.out:
        with open(args.out, "w") as handle:
            handle.write(text)
        print(f"wrote {args.out}", file=sys.stderr)
    else:
        sys.stdout.write(text)
    return 0


def _cmd_verify(args) -> int:
    braid = parse_braid(args.braid, args.strands)
    w = to_tw_form(braid, reduce=args.reduce)
    full = BraidWord(braid.strands, tw_prefix(braid.strands) + w.letters)
    code = encode_word(w)
    closure = closure_component_count(full)
    decoded = trace_components(code).count
    consistent = closure == decoded
    fp = fingerprint(code)
    expected = _fingerprint_from_json(args.expect) if args.expect else None
    fp_match = fp.matches(expected) if expected is not None else None
    if args.emit == "json":
        print(
            json.dumps(
                {
                    "braid": braid.as_dict(),
                    "code": list(code.word),
                    "closure_components": closure,
                    "decoded_components": decoded,
                    "consistent": consistent,
                    "fingerprint": _fingerprint_json(fp),
                    "expected": _fingerprint_json(expected) if expected else None,
                    "fingerprint_match": fp_match,
                }
            )
        )
    else:
        print(f"code: {code}")
        print(f"closure components: {closure}")
        print(f"decoded components: {decoded}")
        print(f"consistent: {'yes' if consistent else 'no'}")
        if expected is not None:
            print(f"fingerprint match: {'yes' if fp_match else 'no'}")
    ok = consistent and fp_match is not False
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="flatbasket",
        description="Encode braid closures as flat basket codes; decode, "
        "classify, and render them.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    encode = sub.add_parser("encode", help="braid word to flat basket code")
    encode.add_argument("braid", help='whitespace-separated letters, e.g. "-2 -1 3"')
    encode.add_argument("--strands", type=int, default=None)
    encode.add_argument("--reduce", action="store_true", help="freely reduce W first")
    encode.add_argument(
        "--no-tw-prefix",
        action="store_true",
        help="treat the input as W itself instead of prepending the inverse prefix",
    )
    encode.add_argument(
        "--emit", choices=("code", "c1", "labels", "json"), default="code"
    )
    encode.set_defaults(func=_cmd_encode)

    decode = sub.add_parser("decode", help="flat basket code to link diagram")
    decode.add_argument("code", help='comma-separated labels, e.g. "1,2,4,3,1,2,4,3"')
    decode.add_argument("--lenient", action="store_true", help="renumber labels first")
    decode.add_argument(
        "--emit", choices=("components", "gauss", "pd", "json"), default="components"
    )
    decode.set_defaults(func=_cmd_decode)

    inv = sub.add_parser("invariants", help="invariants of a decoded code")
    inv.add_argument("code")
    inv.add_argument("--lenient", action="store_true")
    inv.add_argument(
        "--emit",
        choices=("fingerprint", "matrix", "alexander", "json"),
        default="fingerprint",
    )
    inv.set_defaults(func=_cmd_invariants)

    enum = sub.add_parser("enumerate", help="atlas of canonical classes")
    enum.add_argument("n", type=int, help="band count")
    enum.add_argument(
        "--raw",
        action="store_true",
        help="stream all lenient-normal codes instead of classifying",
    )
    enum.add_argument("--jobs", type=int, default=1)
    enum.add_argument(
        "--report-dir",
        default=None,
        help="also write atlas files and figures into this directory",
    )
    enum.set_defaults(func=_cmd_enumerate)

    search = sub.add_parser("search", help="minimal code matching a fingerprint")
    search.add_argument("--like", default=None, help="take the target from this code")
    search.add_argument(
        "--target", default=None, help="fingerprint record as JSON text"
    )
    search.add_argument("--max-n", type=int, default=None)
    search.add_argument("--emit", choices=("code", "json"), default="code")
    search.set_defaults(func=_cmd_search)

    render = sub.add_parser("render", help="SVG chord diagram of a code")
    render.add_argument("code")
    render.add_argument("--lenient", action="store_true")
    render.add_argument("--out", default=None, help="write to a file instead of stdout")
    render.add_argument("--width", type=int, default=400)
    render.add_argument("--height", type=int, default=400)
    render.add_argument("--no-labels", action="store_true")
    render.add_argument("--no-shading", action="store_true")
    render.set_defaults(func=_cmd_render)

    verify = sub.add_parser(
        "verify", help="encode a braid, decode the code, compare component counts"
    )
    verify.add_argument("braid")
    verify.add_argument("--strands", type=int, default=None)
    verify.add_argument("--reduce", action="store_true")
    verify.add_argument(
        "--expect", default=None, help="expected fingerprint record as JSON text"
    )
    verify.add_argument("--emit", choices=("text", "json"), default="text")
    verify.set_defaults(func=_cmd_verify)

    return parser


def run(argv: list[str] | None = None) -> int:
    """Parse argv and dispatch; returns the process exit status."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse exits 2 on usage errors, 0 on --help
        return int(exc.code or 0)
    try:
        return args.func(args)
    except FlatBasketError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
