"""Command-line interface.

Exit codes: 0 = success (classify: principally generated), 1 = input
error, 2 = internal inconsistency / cross-validation failure,
3 = infinitely generated (classify only).
"""

from __future__ import annotations

import argparse
import json
import sys

from . import cartier as cl
from . import complexes as cxm
from . import fileio
from . import homology as hom
from . import monomials as mono
from .cartier import InconsistencyError, Verdict

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_INTERNAL = 2
EXIT_INFGEN = 3


class InputError(Exception):
    pass


def _face_str(vertices) -> str:
    return "{%s}" % ",".join(map(str, vertices))


def _mask_str(mask: int) -> str:
    return _face_str(cxm.mask_vertices(mask))


def _read(path: str) -> str:
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc


def _detect_format(path: str, override: str | None) -> str:
    if override:
        return override
    if path.endswith(".facets"):
        return "facets"
    if path.endswith(".ideal"):
        return "ideal"
    raise InputError(
        f"cannot infer format of {path!r}; use --format facets|ideal")


def _load_complex(args) -> cxm.SimplicialComplex:
    fmt = _detect_format(args.input, args.format)
    text = _read(args.input)
    try:
        if fmt == "facets":
            return fileio.parse_facet_file(text, args.n)
        return cl.complex_of_ideal(fileio.parse_ideal_file(text, args.n))
    except (ValueError, OverflowError) as exc:
        raise InputError(str(exc)) from exc


def _load_ideal(args) -> mono.MonomialIdeal:
    fmt = _detect_format(args.input, args.format)
    text = _read(args.input)
    try:
        if fmt == "ideal":
            return fileio.parse_ideal_file(text, args.n)
        return cl.ideal_of_complex(fileio.parse_facet_file(text, args.n))
    except (ValueError, OverflowError) as exc:
        raise InputError(str(exc)) from exc


def _emit(args, json_obj, text_lines):
    if args.json:
        print(json.dumps(json_obj, indent=2))
    else:
        for line in text_lines:
            print(line)


def _check_field(args) -> int:
    if not hom.is_prime(args.field):
        raise InputError(f"--field {args.field} is not prime")
    return args.field


def cmd_classify(args) -> int:
    cx = _load_complex(args)
    report = cl.classify(cx, mode="both", q=args.q)
    d = report.to_json_dict()
    lines = [
        f"verdict: {'principally generated' if report.verdict is Verdict.PRINCIPALLY_GENERATED else 'infinitely generated'}",
        f"n: {report.n}",
        f"V: {_face_str(report.support_v)}",
        f"core facets: {' '.join(_face_str(f) for f in report.core_facets)}",
    ]
    if report.free_face_witness:
        ff, facet = report.free_face_witness
        lines.append(f"free face: {_face_str(ff)} in facet {_face_str(facet)}")
        lines.append(f"witness monomial (core coordinates): {report.monomial_witness}")
    if report.colon_lhs or report.colon_rhs:
        lines.append(f"colon lhs: {', '.join(report.colon_lhs)}")
        lines.append(f"colon rhs: {', '.join(report.colon_rhs)}")
    _emit(args, d, lines)
    return EXIT_OK if report.verdict is Verdict.PRINCIPALLY_GENERATED else EXIT_INFGEN


def cmd_free_faces(args) -> int:
    cx = _load_complex(args)
    pairs = cxm.free_faces(cx)
    obj = [{"free_face": list(cxm.mask_vertices(p.free_face)),
            "facet": list(cxm.mask_vertices(p.facet))} for p in pairs]
    lines = [f"{_mask_str(p.free_face)} -> {_mask_str(p.facet)}" for p in pairs]
    _emit(args, obj, lines or ["no free faces"])
    return EXIT_OK


def cmd_collapse(args) -> int:
    cx = _load_complex(args)
    final, seq = cxm.collapse_greedy(cx)
    obj = {
        "final_facets": [list(v) for v in final.facet_vertex_lists()],
        "steps": [{"free_face": list(cxm.mask_vertices(p.free_face)),
                   "facet": list(cxm.mask_vertices(p.facet))} for p in seq],
    }
    lines = [f"step {i + 1}: remove {_mask_str(p.free_face)} and {_mask_str(p.facet)}"
             for i, p in enumerate(seq)]
    lines.append("final facets: " + " ".join(_face_str(v) for v in final.facet_vertex_lists()))
    _emit(args, obj, lines)
    return EXIT_OK


def cmd_core(args) -> int:
    cx = _load_complex(args)
    core_cx, vmap = cxm.core(cx)
    obj = {
        "n": core_cx.n,
        "facets": [list(v) for v in core_cx.facet_vertex_lists()],
        "vertex_map": list(vmap),
    }
    lines = [
        f"core on {core_cx.n} vertices: "
        + " ".join(_face_str(v) for v in core_cx.facet_vertex_lists()),
        "vertex map (new -> original): "
        + ", ".join(f"{i + 1}->{v}" for i, v in enumerate(vmap)),
    ]
    _emit(args, obj, lines)
    return EXIT_OK


def cmd_nonfaces(args) -> int:
    cx = _load_complex(args)
    nfs = cxm.minimal_nonfaces(cx)
    obj = [list(cxm.mask_vertices(m)) for m in nfs]
    _emit(args, obj, [_mask_str(m) for m in nfs] or ["none (full simplex)"])
    return EXIT_OK


def cmd_colon(args) -> int:
    ideal = _load_ideal(args)
    if ideal.is_zero():
        _emit(args, {"zero_ideal": True, "verdict": "pg"},
              ["zero ideal: the ring is regular; principally generated"])
        return EXIT_OK
    if args.q < 2:
        raise InputError(f"--q {args.q} must be >= 2")
    frob = mono.frobenius_power(ideal, args.q)
    lhs = mono.colon(frob, ideal)
    full = mono.add(frob, mono.principal(
        tuple(args.q - 1 if any(g[i] for g in ideal.gens) else 0
              for i in range(ideal.n))))
    offending = [mono.format_monomial(g) for g in lhs.sorted_gens()
                 if not mono.contains(full, g)]
    obj = {
        "q": args.q,
        "lhs": lhs.gens_strings(),
        "rhs": full.gens_strings(),
        "equal": lhs == full,
        "offending": offending,
    }
    lines = [
        f"lhs I^[{args.q}]:I = ({', '.join(obj['lhs'])})",
        f"rhs I^[{args.q}] + (xV^{args.q - 1}) = ({', '.join(obj['rhs'])})",
        "equal: " + ("yes" if obj["equal"] else "no"),
    ]
    if offending:
        lines.append("offending generators: " + ", ".join(offending))
    _emit(args, obj, lines)
    return EXIT_OK


def cmd_homology(args) -> int:
    cx = _load_complex(args)
    p = _check_field(args)
    betti = hom.reduced_betti(cx, p)
    obj = [{"degree": k, "dim": v} for k, v in sorted(betti.items())]
    _emit(args, obj, [f"H~_{k} dim {v}" for k, v in sorted(betti.items())])
    return EXIT_OK


def _cmd_predicate(args, fn, name: str) -> int:
    cx = _load_complex(args)
    p = _check_field(args)
    result = fn(cx, p)
    _emit(args, {name: result, "field": p}, [f"{name} over GF({p}): {str(result).lower()}"])
    return EXIT_OK


def cmd_bstar_refute(args) -> int:
    cx = _load_complex(args)
    p = _check_field(args)
    cert = hom.buchsbaum_star_refutation(cx, p)
    if cert is None:
        _emit(args, {"certificate": None},
              ["no refutation certificate found (not a proof of Buchsbaum*-ness)"])
        return EXIT_OK
    if cert.kind == "cone":
        obj = {"certificate": {"kind": "cone", "vertex": cert.vertex}}
        lines = [f"not Buchsbaum*: cone over vertex {cert.vertex}"]
    else:
        obj = {"certificate": {
            "kind": "free_face",
            "free_face": list(cxm.mask_vertices(cert.pair.free_face)),
            "facet": list(cxm.mask_vertices(cert.pair.facet)),
            "rank": cert.rank,
            "target_dim": cert.target_dim,
        }}
        lines = [
            "not Buchsbaum*: free face "
            f"{_mask_str(cert.pair.free_face)} in {_mask_str(cert.pair.facet)}; "
            f"induced map rank {cert.rank} < target dim {cert.target_dim}"
        ]
    _emit(args, obj, lines)
    return EXIT_OK


def cmd_cross_validate(args) -> int:
    q_sweep = tuple(int(q) for q in args.q_sweep.split(",")) if args.q_sweep else None
    if args.single_n is not None:
        if args.exhaustive:
            exhaustive, rand = (args.single_n,), ()
        else:
            exhaustive, rand = (), (args.single_n,)
    else:
        exhaustive, rand = (1, 2, 3, 4, 5), (6, 7, 8)
    report = cl.cross_validate(
        exhaustive_ns=exhaustive,
        random_ns=rand,
        trials_per_n=args.trials,
        seed=args.seed,
        q_sweep=q_sweep,
    )
    obj = report.to_json_dict()
    lines = [
        f"complexes checked: {report.total} (pg {report.pg}, infgen {report.infgen})",
        f"mismatches: {len(report.mismatches)}",
        f"witness contracts checked: {report.witness_checked}, violations: {len(report.witness_violations)}",
    ]
    if q_sweep:
        lines.append(
            f"q-sweep {list(q_sweep)} checked: {report.q_sweep_checked}, "
            f"mismatches: {len(report.q_sweep_mismatches)}")
    if not report.ok:
        for m in report.mismatches + report.witness_violations + report.q_sweep_mismatches:
            lines.append(f"FAIL: {m}")
    _emit(args, obj, lines)
    return EXIT_OK if report.ok else EXIT_INTERNAL


def _add_io_flags(p: argparse.ArgumentParser, with_input: bool = True):
    if with_input:
        p.add_argument("input", help="facet (.facets) or ideal (.ideal) file")
        p.add_argument("--format", choices=["facets", "ideal"],
                       help="override format auto-detection")
        p.add_argument("--n", type=int, default=None, help="override ground-set size")
    p.add_argument("--json", action="store_true", help="emit JSON")


def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="srcartier",
        description="Classify Cartier algebras of Stanley-Reisner rings and "
                    "inspect the underlying simplicial/ideal structure.",
    )
    sub = top.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="run both criteria and report the verdict")
    _add_io_flags(p)
    p.add_argument("--q", type=int, default=2, help="Frobenius power (default 2)")
    p.set_defaults(fn=cmd_classify)

    for name, fn, hlp in [
        ("free-faces", cmd_free_faces, "list all free-face pairs"),
        ("collapse", cmd_collapse, "greedy elementary collapse sequence"),
        ("core", cmd_core, "core complex and vertex map"),
        ("nonfaces", cmd_nonfaces, "minimal non-faces"),
    ]:
        p = sub.add_parser(name, help=hlp)
        _add_io_flags(p)
        p.set_defaults(fn=fn)

    p = sub.add_parser("colon", help="both sides of the colon-ideal identity")
    _add_io_flags(p)
    p.add_argument("--q", type=int, default=2)
    p.set_defaults(fn=cmd_colon)

    for name, fn, hlp in [
        ("homology", None, "reduced Betti numbers over GF(p)"),
        ("cm", hom.is_cohen_macaulay, "Cohen-Macaulay test (Reisner)"),
        ("2cm", hom.is_doubly_cohen_macaulay, "doubly Cohen-Macaulay test"),
        ("gorenstein-star", hom.is_gorenstein_star, "Gorenstein* test"),
        ("bstar-refute", None, "Buchsbaum* refutation certificate"),
    ]:
        p = sub.add_parser(name, help=hlp)
        _add_io_flags(p)
        p.add_argument("--field", type=int, default=2, help="prime p for GF(p)")
        if name == "homology":
            p.set_defaults(fn=cmd_homology)
        elif name == "bstar-refute":
            p.set_defaults(fn=cmd_bstar_refute)
        else:
            key = {"cm": "cohen_macaulay", "2cm": "doubly_cohen_macaulay",
                   "gorenstein-star": "gorenstein_star"}[name]
            p.set_defaults(fn=lambda a, f=fn, k=key: _cmd_predicate(a, f, k))

    p = sub.add_parser("cross-validate", help="agreement harness for both criteria")
    _add_io_flags(p, with_input=False)
    p.add_argument("--n", dest="single_n", type=int, default=None,
                   help="restrict to a single ground-set size")
    p.add_argument("--exhaustive", action="store_true",
                   help="with --n: enumerate instead of sampling")
    p.add_argument("--trials", type=int, default=1000,
                   help="random trials per n (default 1000)")
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--q-sweep", dest="q_sweep", default=None,
                   help="comma-separated Frobenius powers to compare, e.g. 2,3,4,8")
    p.set_defaults(fn=cmd_cross_validate)

    return top


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except InconsistencyError as exc:
        print(f"internal inconsistency: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
