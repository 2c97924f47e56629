"""Command-line front end.

Subcommands: classify, mandatory, links, collapse, homology,
realize-verify, goodcover, generate.  Analysis commands read a code or
complex file (see :mod:`convexcodes.fileformat` for the format), print a
human report or, with --json, a versioned machine report.  Exit status is
0 unless --strict is given, in which case a No verdict exits 1 and an
Unknown exits 2; usage errors exit 64 and unreadable input exits 65.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from .analysis import (
    classify,
    cone_minus_apex,
    contractibility_status,
    mandatory_codewords,
)
from .collapse import (
    Budget,
    CollapseOutcome,
    DEFAULT_NODE_BUDGET,
    ENGINES,
    is_collapsible,
    kernel_name,
)
from .complexes import (
    Code,
    SimplicialComplex,
    closure,
    face_label,
    face_members,
    link,
    _face_sort_key,
)
from .errors import ConvexCodesError, ParseError
from .fileformat import emit_code, emit_complex, parse_code, parse_complex, parse_face
from .homology import DEFAULT_PRIMES, BettiVector, reduced_betti
from .instances import (
    c_n,
    connected_not_goodcover_code,
    counterexample_code,
    dunce_hat,
    intro_code,
    rp2,
)
from .realization import good_cover_check, realized_code_from_U
from .verdicts import TriStatus, Verdict

SCHEMA_VERSION = "1"

EXIT_OK = 0
EXIT_NO = 1
EXIT_UNKNOWN = 2
EXIT_USAGE = 64
EXIT_DATA = 65


class _Parser(argparse.ArgumentParser):
    # argparse exits 2 on bad usage; the contract here reserves 2 for
    # Unknown-under-strict, so remap.
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _read_text(path: str) -> str:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise ConvexCodesError(f"cannot read {path}: {exc}") from exc


def _read_code(path: str) -> Code:
    return parse_code(_read_text(path))


def _read_complex(path: str) -> SimplicialComplex:
    return parse_complex(_read_text(path))


def _face_json(mask: int) -> list[int]:
    return list(face_members(mask))


def _faces_json(masks) -> list[list[int]]:
    return [_face_json(m) for m in sorted(masks, key=_face_sort_key)]


def _cert_json(cert):
    if cert is None:
        return None
    if isinstance(cert, BettiVector):
        return {
            "kind": "betti",
            "field": cert.field_characteristic,
            "betti": list(cert.betti),
        }
    if isinstance(cert, int):
        return {"kind": "face", "face": _face_json(cert)}
    if isinstance(cert, dict):
        return {"kind": "summary", **{k: cert[k] for k in sorted(cert)}}
    if isinstance(cert, (tuple, list)):
        return {
            "kind": "collapse-steps",
            "steps": [
                {"sigma": _face_json(s.sigma), "tau": _face_json(s.tau)} for s in cert
            ],
        }
    return {"kind": "opaque", "text": str(cert)}


def _tri_json(st: TriStatus) -> dict:
    return {
        "value": st.value.value,
        "reason": st.reason,
        "witness": None if st.witness is None else _face_json(st.witness),
        "certificate": _cert_json(st.certificate),
    }


def _cert_text(cert) -> str:
    if cert is None:
        return ""
    if isinstance(cert, BettiVector):
        return f"reduced betti {cert.betti} over F_{cert.field_characteristic}"
    if isinstance(cert, int):
        return f"apex {face_label(cert)}"
    if isinstance(cert, dict):
        return " ".join(f"{k}={cert[k]}" for k in sorted(cert))
    if isinstance(cert, (tuple, list)):
        if not cert:
            return "already a point"
        return "steps " + " ".join(str(s) for s in cert)
    return str(cert)


def _tri_text(st: TriStatus) -> str:
    out = f"{st.value.value} [{st.reason}]"
    if st.witness is not None:
        out += f" witness {face_label(st.witness)}"
    detail = _cert_text(st.certificate)
    if detail:
        out += f"; {detail}"
    return out


def _strict_exit(args, *verdicts: Verdict) -> int:
    if not args.strict:
        return EXIT_OK
    if any(v is Verdict.NO for v in verdicts):
        return EXIT_NO
    if any(v is Verdict.UNKNOWN for v in verdicts):
        return EXIT_UNKNOWN
    return EXIT_OK


def _emit_json(obj) -> None:
    print(json.dumps(obj, indent=2, sort_keys=True))


def _budget(args) -> Budget:
    return Budget(nodes=args.budget, seed=args.seed)


def _primes(args) -> tuple[int, ...]:
    return tuple(int(p) for p in args.primes.split(","))


def _input_json(code: Code) -> dict:
    return {
        "ambient_n": code.ambient_n,
        "word_count": len(code.words),
        "has_empty_word": code.has_empty_word,
        "words": _faces_json(code.words),
    }


def _timings(args, seconds: float):
    if args.deterministic:
        return None
    return {"total_s": round(seconds, 6)}


def _cmd_classify(args) -> int:
    code = _read_code(args.path)
    t0 = time.perf_counter()
    report = classify(code, _budget(args), _primes(args))
    dt = time.perf_counter() - t0
    if args.json:
        _emit_json(
            {
                "schema_version": SCHEMA_VERSION,
                "input": _input_json(code),
                "sparsity": report.sparsity,
                "max_intersection_complete": report.max_intersection_complete,
                "locally_good": _tri_json(report.locally_good),
                "locally_great": _tri_json(report.locally_great),
                "mandatory": {
                    "found": _faces_json(report.mandatory_found),
                    "unknown": _faces_json(report.mandatory_unknown),
                },
                "timings": _timings(args, dt),
            }
        )
    else:
        n = code.ambient_n
        print(f"code: {len(code.words)} words on {n} labels")
        print(f"sparsity: {report.sparsity}")
        print(f"max_intersection_complete: {str(report.max_intersection_complete).lower()}")
        print(f"locally_good: {_tri_text(report.locally_good)}")
        print(f"locally_great: {_tri_text(report.locally_great)}")
        found = " ".join(face_label(f) for f in sorted(report.mandatory_found, key=_face_sort_key))
        unknown = " ".join(face_label(f) for f in sorted(report.mandatory_unknown, key=_face_sort_key))
        print(f"mandatory found: {found or '(none)'}")
        print(f"mandatory unknown: {unknown or '(none)'}")
        print(f"note: {report.implication_notes}")
    return _strict_exit(args, report.locally_good.value, report.locally_great.value)


def _cmd_mandatory(args) -> int:
    code = _read_code(args.path)
    found, unknown = mandatory_codewords(code, _budget(args), primes=_primes(args))
    if args.json:
        _emit_json(
            {
                "schema_version": SCHEMA_VERSION,
                "input": _input_json(code),
                "mandatory": {
                    "found": _faces_json(found),
                    "unknown": _faces_json(unknown),
                },
            }
        )
    else:
        for f in sorted(found, key=_face_sort_key):
            marker = "present" if f in code.words else "MISSING"
            print(f"mandatory {face_label(f)} [{marker}]")
        for f in sorted(unknown, key=_face_sort_key):
            print(f"undecided {face_label(f)}")
        if not found and not unknown:
            print("no mandatory codewords found")
    missing = [f for f in found if f not in code.words]
    verdict = Verdict.NO if missing else (Verdict.UNKNOWN if unknown else Verdict.YES)
    return _strict_exit(args, verdict)


def _cmd_links(args) -> int:
    code = _read_code(args.path)
    cx = closure(code)
    try:
        sigma = parse_face(args.face, code.ambient_n)
    except ConvexCodesError as exc:
        print(f"bad face: {exc}", file=sys.stderr)
        return EXIT_DATA
    if sigma == 0 or sigma not in cx:
        print(f"{args.face} is not a nonempty face of the code's complex", file=sys.stderr)
        return EXIT_DATA
    lk = link(cx, sigma)
    st = contractibility_status(lk, _budget(args), primes=_primes(args))
    if args.json:
        _emit_json(
            {
                "schema_version": SCHEMA_VERSION,
                "input": _input_json(code),
                "face": _face_json(sigma),
                "in_code": sigma in code.words,
                "link_facets": _faces_json(lk.facets),
                "contractible": _tri_json(st),
            }
        )
    else:
        facets = " ".join(face_label(f) for f in lk.facets)
        print(f"link of {face_label(sigma)}: facets {facets or '(empty face only)'}")
        print(f"contractible: {_tri_text(st)}")
    return _strict_exit(args, st.value)


def _outcome_json(out: CollapseOutcome) -> dict:
    steps = None
    if out.certificate is not None:
        steps = [
            {"sigma": _face_json(s.sigma), "tau": _face_json(s.tau)}
            for s in out.certificate
        ]
    return {
        "status": out.status.value,
        "certificate": steps,
        "nodes_explored": out.nodes_explored,
        "budget_exhausted": out.budget_exhausted,
    }


def _cmd_collapse(args) -> int:
    cx = _read_complex(args.path)
    out = is_collapsible(cx, args.engine, _budget(args))
    if args.json:
        _emit_json(
            {
                "schema_version": SCHEMA_VERSION,
                "engine": args.engine,
                "kernel": kernel_name(),
                "facets": _faces_json(cx.facets),
                "outcome": _outcome_json(out),
            }
        )
    else:
        print(f"collapsible: {out.status.value} (engine {args.engine}, "
              f"{out.nodes_explored} nodes)")
        if out.certificate is not None:
            print(f"certificate: {_cert_text(out.certificate)}")
        if out.budget_exhausted:
            print("budget exhausted; raise --budget for a decision")
    return _strict_exit(args, out.status)


def _cmd_homology(args) -> int:
    cx = _read_complex(args.path)
    vectors = {p: reduced_betti(cx, p) for p in _primes(args)}
    if args.json:
        _emit_json(
            {
                "schema_version": SCHEMA_VERSION,
                "facets": _faces_json(cx.facets),
                "betti": {str(p): list(v.betti) for p, v in vectors.items()},
            }
        )
    else:
        for p, v in vectors.items():
            print(f"F_{p}: reduced betti {v.betti}")
    return EXIT_OK


def _cmd_realize_verify(args) -> int:
    code = _read_code(args.path)
    realized = realized_code_from_U(code)
    expected = code.nonempty_words()
    match = realized.words == expected
    if args.json:
        _emit_json(
            {
                "schema_version": SCHEMA_VERSION,
                "input": _input_json(code),
                "match": match,
                "realized": _faces_json(realized.words),
                "missing": _faces_json(expected - realized.words),
                "extra": _faces_json(realized.words - expected),
            }
        )
    else:
        if match:
            print(f"match: realization reproduces all {len(expected)} nonempty words")
        else:
            missing = " ".join(face_label(f) for f in sorted(expected - realized.words, key=_face_sort_key))
            extra = " ".join(face_label(f) for f in sorted(realized.words - expected, key=_face_sort_key))
            print(f"mismatch: missing [{missing}] extra [{extra}]")
    return _strict_exit(args, Verdict.YES if match else Verdict.NO)


def _cmd_goodcover(args) -> int:
    code = _read_code(args.path)
    st = good_cover_check(code, _budget(args), primes=_primes(args))
    if args.json:
        _emit_json(
            {
                "schema_version": SCHEMA_VERSION,
                "input": _input_json(code),
                "good_cover": _tri_json(st),
            }
        )
    else:
        print(f"good_cover: {_tri_text(st)}")
    return _strict_exit(args, st.value)


def _cmd_generate(args) -> int:
    name = args.name
    try:
        if name == "intro-code":
            text = emit_code(intro_code())
        elif name == "counterexample":
            text = emit_code(counterexample_code())
        elif name == "connected-not-goodcover":
            text = emit_code(connected_not_goodcover_code())
        elif name == "c-n":
            if args.arg is None:
                raise ValueError("c-n needs a label count, e.g. generate c-n 4")
            text = emit_code(c_n(int(args.arg)))
        elif name == "cone-minus-apex":
            if args.arg is None:
                raise ValueError("cone-minus-apex needs a complex file argument")
            text = emit_code(cone_minus_apex(_read_complex(args.arg)))
        elif name == "dunce-hat":
            text = emit_complex(dunce_hat())
        elif name == "rp2":
            text = emit_complex(rp2())
        else:
            raise ValueError(f"unknown instance {name!r}")
    except ValueError as exc:
        print(f"generate: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def _add_common(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--budget", type=int, default=DEFAULT_NODE_BUDGET,
                     help="collapse search node limit")
    sub.add_argument("--primes", default=",".join(str(p) for p in DEFAULT_PRIMES),
                     help="comma-separated homology field characteristics")
    sub.add_argument("--seed", type=int, default=0, help="seed for greedy restarts")
    sub.add_argument("--deterministic", action="store_true",
                     help="suppress wall-clock fields for reproducible output")
    sub.add_argument("--json", action="store_true", help="machine-readable report")
    sub.add_argument("--strict", action="store_true",
                     help="exit 1 on a No verdict, 2 on Unknown")


def build_parser() -> argparse.ArgumentParser:
    top = _Parser(prog="convexcodes",
                  description="local obstructions to convexity for neural codes")
    subs = top.add_subparsers(dest="command", required=True, parser_class=_Parser)

    for cmd, fn, what in (
        ("classify", _cmd_classify, "full obstruction report for a code file"),
        ("mandatory", _cmd_mandatory, "mandatory codewords of a code file"),
        ("goodcover", _cmd_goodcover, "good-cover verdict for a code file"),
        ("realize-verify", _cmd_realize_verify,
         "check the open realization reproduces the code"),
    ):
        sub = subs.add_parser(cmd, help=what)
        sub.add_argument("path", help="code file")
        _add_common(sub)
        sub.set_defaults(func=fn)

    sub = subs.add_parser("links", help="link of one face and its contractibility")
    sub.add_argument("path", help="code file")
    sub.add_argument("--face", required=True, help="face, e.g. 23 or '2 3'")
    _add_common(sub)
    sub.set_defaults(func=_cmd_links)

    sub = subs.add_parser("collapse", help="collapsibility of a complex file")
    sub.add_argument("path", help="complex file (one facet per line)")
    sub.add_argument("--engine", choices=list(ENGINES), default="strict")
    _add_common(sub)
    sub.set_defaults(func=_cmd_collapse)

    sub = subs.add_parser("homology", help="reduced betti numbers of a complex file")
    sub.add_argument("path", help="complex file (one facet per line)")
    _add_common(sub)
    sub.set_defaults(func=_cmd_homology)

    sub = subs.add_parser("generate", help="write a built-in example instance")
    sub.add_argument("name", choices=[
        "intro-code", "counterexample", "c-n", "cone-minus-apex",
        "dunce-hat", "rp2", "connected-not-goodcover",
    ])
    sub.add_argument("arg", nargs="?", default=None,
                     help="label count for c-n, complex file for cone-minus-apex")
    sub.add_argument("-o", "--output", default=None, help="write here instead of stdout")
    sub.set_defaults(func=_cmd_generate)
    return top


def run(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_DATA
    except ConvexCodesError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DATA


def entry() -> None:
    raise SystemExit(run())


if __name__ == "__main__":
    entry()
