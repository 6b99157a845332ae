"""Batch command line: parse a file (or stdin), run one operation, print.

Exit codes: 0 on success, 1 on a domain error (for example desingularizing a
nonsingular matrix), 2 on malformed input.  Output is deterministic: the same
input and flags produce byte-identical bytes.  ``--json`` switches the
serialization; scalars always appear in the shared text grammar.
"""

from __future__ import annotations

import argparse
import json
import random
import sys

from .errors import EltError, ParseError
from . import grammar
from .inner import bessel_check, cauchy_schwarz_check, extend_orthogonal, gram
from .layers import ring_by_name
from .matrices import det, invert_matrix, submatrix_rank
from .oracles import dependence_oracle, lift_rank_oracle, surpass_oracle
from .puiseux import eltrop_matrix, lift_dependent_matrix
from .purify import desingularize_pure, purify_dependent_rows
from .sampling import random_matrix, random_scalar, random_vector
from .scalars import NEG_INF
from .tropical import elt_rank_tropical
from .witness import find_dependence_witness, rank_report


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _ring_override(args):
    return ring_by_name(args.ring) if args.ring else None


def _load_matrix(args):
    return grammar.parse_matrix(_read(args.input), _ring_override(args))


def _scalar(x, ring):
    return grammar.format_scalar(x, ring)


def _matrix_json(M):
    return [[_scalar(x, M.ring) for x in row] for row in M.entries]


def _witness_json(w, ring):
    if w is None:
        return None
    return {
        "support": list(w.support),
        "coefficients": [_scalar(c, ring) for c in w.coefficients],
    }


def _emit(args, payload: dict, text: str) -> str:
    if args.json:
        return json.dumps(payload, indent=2) + "\n"
    return text


def cmd_det(args):
    M = _load_matrix(args)
    d = det(M, max_size=args.max_size)
    return _emit(
        args,
        {"det": _scalar(d, M.ring), "singular": d.is_zero_layer},
        f"{_scalar(d, M.ring)}\n",
    )


def cmd_rank(args):
    M = _load_matrix(args)
    rep = rank_report(M, max_vectors=args.max_size, max_dim=args.max_size)
    payload = {
        "row_rank": rep.row_rank,
        "column_rank": rep.column_rank,
        "submatrix_rank": rep.submatrix_rank,
        "nonsingular_rows": list(rep.nonsingular_rows) if rep.nonsingular_rows else None,
        "nonsingular_cols": list(rep.nonsingular_cols) if rep.nonsingular_cols else None,
        "row_dependence": _witness_json(rep.row_dependence, M.ring),
        "column_dependence": _witness_json(rep.column_dependence, M.ring),
    }
    text = (
        f"row_rank {rep.row_rank}\n"
        f"column_rank {rep.column_rank}\n"
        f"submatrix_rank {rep.submatrix_rank}\n"
    )
    return _emit(args, payload, text)


def cmd_dependent(args):
    M = _load_matrix(args)
    w = find_dependence_witness(M.rows, M.ring, max_vectors=args.max_size, max_dim=args.max_size)
    payload = {"dependent": w is not None, "witness": _witness_json(w, M.ring)}
    if w is None:
        return _emit(args, payload, "independent\n")
    pairs = " ".join(
        f"{i}:{_scalar(c, M.ring)}" for i, c in zip(w.support, w.coefficients)
    )
    return _emit(args, payload, f"dependent {pairs}\n")


def cmd_desingularize(args):
    M = _load_matrix(args)
    B, trace = desingularize_pure(M, max_size=args.max_size)
    payload = {
        "matrix": _matrix_json(B),
        "trace": {
            "case": trace.case,
            "variable_positions": [list(p) for p in trace.variable_positions],
            "beta": _scalar(trace.beta, M.ring) if trace.beta is not None else None,
            "delta": str(trace.delta) if trace.delta is not None else None,
        },
    }
    return _emit(args, payload, grammar.format_matrix(B))


def cmd_purify(args):
    M = _load_matrix(args)
    w = find_dependence_witness(M.rows, M.ring, max_vectors=args.max_size, max_dim=args.max_size)
    if w is None:
        raise EltError("rows are independent; nothing to purify")
    B = purify_dependent_rows(M, w)
    payload = {"witness": _witness_json(w, M.ring), "matrix": _matrix_json(B)}
    return _emit(args, payload, grammar.format_matrix(B))


def cmd_lift(args):
    M = _load_matrix(args)
    w = find_dependence_witness(M.rows, M.ring, max_vectors=args.max_size, max_dim=args.max_size)
    if w is None:
        raise EltError("rows are independent; no dependent lift exists")
    L = lift_dependent_matrix(M, w)
    payload = {
        "witness": _witness_json(w, M.ring),
        "matrix": [[grammar.format_series(x, M.ring) for x in row] for row in L.entries],
    }
    return _emit(args, payload, grammar.format_series_matrix(L))


def cmd_eltrop(args):
    M = grammar.parse_series_matrix(_read(args.input), _ring_override(args))
    E = eltrop_matrix(M)
    return _emit(args, {"matrix": _matrix_json(E)}, grammar.format_matrix(E))


def cmd_elt_rank(args):
    T = grammar.parse_tropical_matrix(_read(args.input))
    res = elt_rank_tropical(T, max_size=args.max_size)
    payload = {
        "lower": res.lower,
        "upper": res.upper,
        "exact": res.exact,
        "method": res.method,
        "witness": _matrix_json(res.witness) if res.witness is not None else None,
    }
    text = f"{res.lower}\n" if res.exact else f"range {res.lower} {res.upper}\n"
    return _emit(args, payload, text)


def cmd_invert(args):
    M = _load_matrix(args)
    inv = invert_matrix(M)
    payload = {
        "invertible": inv is not None,
        "inverse": _matrix_json(inv) if inv is not None else None,
    }
    text = grammar.format_matrix(inv) if inv is not None else "not invertible\n"
    return _emit(args, payload, text)


def cmd_gram(args):
    M = _load_matrix(args)
    G = gram(M.rows, M.ring)
    return _emit(args, {"matrix": _matrix_json(G)}, grammar.format_matrix(G))


def cmd_cs_check(args):
    M = _load_matrix(args)
    if M.nrows != 2:
        raise EltError("cs-check expects exactly two rows")
    rep = cauchy_schwarz_check(M.row(0), M.row(1), M.ring)
    payload = {
        "lhs": _scalar(rep.lhs, M.ring),
        "rhs": _scalar(rep.rhs, M.ring),
        "t_equal": rep.t_equal,
        "common_argmax": list(rep.common_argmax),
        "s_u": [M.ring.format(x) for x in rep.s_u],
        "s_v": [M.ring.format(x) for x in rep.s_v],
        "full_equal": rep.full_equal,
    }
    text = (
        f"lhs {_scalar(rep.lhs, M.ring)}\n"
        f"rhs {_scalar(rep.rhs, M.ring)}\n"
        f"t_equal {str(rep.t_equal).lower()}\n"
        f"full_equal {str(rep.full_equal).lower()}\n"
    )
    return _emit(args, payload, text)


def cmd_bessel(args):
    M = _load_matrix(args)
    if M.nrows < 2:
        raise EltError("bessel expects the orthonormal rows followed by the vector")
    rep = bessel_check(list(M.rows[:-1]), M.row(M.nrows - 1), M.ring)
    fmt_t = lambda t: "-inf" if t is None else str(t)
    payload = {
        "projection": [_scalar(x, M.ring) for x in rep.projection],
        "projection_norm_t": fmt_t(rep.projection_norm_t),
        "vector_norm_t": fmt_t(rep.vector_norm_t),
        "equality": rep.equality,
        "criterion_holds": rep.criterion_holds,
    }
    text = (
        f"projection {grammar.format_vector(rep.projection, M.ring)}\n"
        f"projection_norm_t {fmt_t(rep.projection_norm_t)}\n"
        f"vector_norm_t {fmt_t(rep.vector_norm_t)}\n"
        f"equality {str(rep.equality).lower()}\n"
    )
    return _emit(args, payload, text)


def cmd_orthogonalize(args):
    M = _load_matrix(args)
    new = extend_orthogonal(list(M.rows), M.ring, max_vectors=args.max_size, max_dim=args.max_size)
    payload = {"vector": [_scalar(x, M.ring) for x in new]}
    return _emit(args, payload, grammar.format_vector(new, M.ring) + "\n")


def cmd_verify(args):
    ring = ring_by_name(args.ring) if args.ring else ring_by_name("Q")
    rng = random.Random(args.seed)
    samples = args.samples

    surpass_ok = 0
    for _ in range(samples):
        x = random_scalar(rng, ring)
        y = random_scalar(rng, ring)
        if x.surpasses(y) == surpass_oracle(x, y):
            surpass_ok += 1

    dependence_ok = 0
    dep_trials = max(1, samples // 10)
    for _ in range(dep_trials):
        m = rng.randint(1, 4)
        n = rng.randint(1, 4)
        vectors = [random_vector(rng, n, ring) for _ in range(m)]
        direct = find_dependence_witness(vectors, ring) is not None
        if direct == dependence_oracle(vectors, ring):
            dependence_ok += 1

    lift_ok = 0
    lift_trials = max(1, samples // 20)
    for _ in range(lift_trials):
        n = rng.randint(1, 3)
        M = random_matrix(rng, n, n, ring, pure=True)
        if lift_rank_oracle(M) >= submatrix_rank(M):
            lift_ok += 1

    payload = {
        "seed": args.seed,
        "samples": samples,
        "surpass_agreements": f"{surpass_ok}/{samples}",
        "dependence_agreements": f"{dependence_ok}/{dep_trials}",
        "lift_rank_bounds_ok": f"{lift_ok}/{lift_trials}",
        "all_pass": surpass_ok == samples and dependence_ok == dep_trials and lift_ok == lift_trials,
    }
    return json.dumps(payload, indent=2) + "\n"


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="elt",
        description="Exact layered-tropical linear algebra on matrix files.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, help_text, needs_input=True):
        p = sub.add_parser(name, help=help_text)
        if needs_input:
            p.add_argument("input", help="input file, or - for stdin")
        p.add_argument("--json", action="store_true", help="emit JSON")
        p.add_argument("--ring", choices=["Z", "Q", "Qi"], help="override the layer ring")
        p.add_argument("--max-size", type=int, default=8 if name not in (
            "rank", "dependent", "purify", "lift", "orthogonalize") else 6,
            help="size bound override")
        p.set_defaults(func=fn)
        return p

    add("det", cmd_det, "determinant of a square matrix")
    add("rank", cmd_rank, "row, column and submatrix rank")
    add("dependent", cmd_dependent, "dependence witness for the rows")
    add("desingularize", cmd_desingularize, "pure singular matrix under a singular one")
    add("purify", cmd_purify, "pure dependent-rows matrix under a dependent one")
    add("lift", cmd_lift, "Puiseux lift with exactly dependent rows")
    add("eltrop", cmd_eltrop, "tropicalize a Puiseux matrix")
    add("elt-rank", cmd_elt_rank, "ELT rank of a tropical matrix")
    add("invert", cmd_invert, "inverse of a generalized permutation matrix")
    add("gram", cmd_gram, "Gram matrix of the rows")
    add("cs-check", cmd_cs_check, "Cauchy-Schwarz report for two rows")
    add("bessel", cmd_bessel, "Bessel report: orthonormal rows then the vector")
    add("orthogonalize", cmd_orthogonalize, "extend an orthogonal family by one vector")

    v = sub.add_parser("verify", help="oracle agreement report (JSON)")
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--samples", type=int, default=200)
    v.add_argument("--ring", choices=["Z", "Q", "Qi"])
    v.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        out = args.func(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 2
    except EltError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    sys.stdout.write(out)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
