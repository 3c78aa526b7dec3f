"""Command-line front end.

    stmat <analyze|power|charpoly|eigen|jordan|stability|ghost|cores> FILE
          [--m N] [--m-max N] [--k-max N] [--max-n N] [--json]

Matrix files are JSON: {"n": k, "entries": [[token, ...], ...]} with exact
element tokens ("p/q", "p/qv", "-inf").  Exit codes: 0 ok, 2 parse error,
3 precondition or size-cap violation, 4 search bound exhausted.  The env
var STMAT_MAX_N overrides the default enumeration cap.
"""

import argparse
import json
import os
import sys

from .eigen import eigendecomposition, eigenvalues, eigenvector_for
from .errors import (BoundExhaustedError, ParseError, PreconditionError,
                     SizeCapError, StmatError)
from .graph import cores, cycle_report, leading_data, scc_block_form
from .matrix import Matrix
from .stability import ghostpotence, jordan_decompose, stability_index, verify_corepower

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_PRECONDITION = 3
EXIT_BOUND = 4


def load_matrix(path):
    try:
        with open(path) as fh:
            data = json.load(fh)
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path} is not valid JSON: {exc}") from exc
    return Matrix.from_json_dict(data)


# -- payload builders (shared by --json and the human printer) -------------


def charpoly_payload(A, max_n=None):
    f = A.char_poly(max_n)
    es = f.essential_part()
    return {
        "text": f.to_text(),
        "coefficients": f.to_tokens(),
        "essential_text": es.to_text(),
        "essential_coefficients": es.to_tokens(),
        "classes": list(f.monomial_classes()),
        "roots": [{"value": "-inf" if v is None else str(v), "multiplicity": m}
                  for v, m in f.corner_roots()] if f.degree >= 1 else [],
    }


def cores_payload(A, max_n=None):
    data = leading_data(A, max_n)
    cd = cores(A, data, max_n)
    return {
        "mu": data.mu,
        "omega": str(data.omega),
        "mu_tilde": data.mu_tilde,
        "dominant_lengths": sorted(data.dominant_lengths),
        "counts_by_length": {str(k): v for k, v in sorted(data.counts_by_length.items())},
        "depths": {str(v): d for v, d in sorted(data.depths.items())},
        "cycles": cycle_report(A, max_n),
        "core_vertices": sorted(cd.core_vertices),
        "tcore_vertices": sorted(cd.tcore_vertices),
        "anti_tcore_vertices": sorted(cd.anti_tcore_vertices),
    }


def block_form_payload(A):
    form = scc_block_form(A)
    return {
        "eta": form.eta,
        "permutation": [p + 1 for p in form.perm],
        "blocks": [{"vertices": list(form.block_vertices(i)),
                    "entries": form.block(i).to_tokens()}
                   for i in range(form.eta)],
    }


def stability_payload(A, m_max):
    m, report = stability_index(A, m_max)
    form = report.form
    return {
        "index": m,
        "eta": form.eta,
        "permutation": [p + 1 for p in form.perm],
        "betas": [str(b) for b in report.betas],
        "cross": [{"i": i + 1, "j": j + 1, "beta": None if b is None else str(b)}
                  for (i, j), b in sorted(report.cross.items())],
        "tangibly_stable": report.tangibly_stable,
    }


def ghost_payload(A, max_n=None):
    verdict = ghostpotence(A, max_n)
    return {
        "ghostpotent": verdict.ghostpotent,
        "ghost_index": verdict.ghost_index,
        "index_bound": verdict.index_bound,
        "bound_respected": verdict.bound_respected,
        "blocks": [{"vertices": list(b.vertices), "has_cycles": b.has_cycles,
                    "tcore_empty": b.tcore_empty, "ghost_index": b.ghost_index}
                   for b in verdict.blocks],
    }


def jordan_payload(A, k_max, max_n=None):
    pair = jordan_decompose(A, k_max, max_n)
    return {
        "strategy": pair.strategy,
        "S": pair.S.to_tokens(),
        "N": pair.N.to_tokens(),
        "semisimple": {"k": pair.semisimple.k,
                       "diagonal": [str(pair.semisimple.D.entry(i, i))
                                    for i in range(pair.S.n)]},
        "ghost": {
            "ghostpotent": pair.ghost.ghostpotent,
            "ghost_index": pair.ghost.ghost_index,
            "index_bound": pair.ghost.index_bound,
            "bound_respected": pair.ghost.bound_respected,
            "blocks": [{"vertices": list(b.vertices), "has_cycles": b.has_cycles,
                        "tcore_empty": b.tcore_empty, "ghost_index": b.ghost_index}
                       for b in pair.ghost.blocks],
        },
    }


def eigen_payload(A, max_n=None, decomposition=False, m_max=64):
    values = eigenvalues(A, max_n)
    pairs = []
    for beta, _ in values:
        for p in eigenvector_for(A, beta, max_n):
            pairs.append({"beta": str(p.beta), "vector": p.vector.to_tokens(),
                          "kind": p.kind})
    payload = {
        "eigenvalues": [{"value": str(b), "multiplicity": m} for b, m in values],
        "pairs": pairs,
    }
    if decomposition:
        try:
            dec = eigendecomposition(A, m_max, max_n)
            payload["decomposition"] = {
                "power": dec.power,
                "block_eigenvalues": [str(b) for b in dec.block_eigenvalues],
                "pairs": [{"block": p.block, "column": p.column, "beta": str(p.beta),
                           "beta_root": str(p.beta_root),
                           "vector": p.vector.to_tokens(), "kind": p.kind,
                           "verified": p.verified} for p in dec.pairs],
                "annihilators": [{"block": a.block, "vector": a.vector.to_tokens()}
                                 for a in dec.annihilators],
                "rank": dec.rank,
                "rank_target": dec.rank_target,
                "rank_ok": dec.rank_ok,
                "all_verified": dec.all_verified,
                "diagnostics": list(dec.diagnostics),
            }
        except BoundExhaustedError as exc:
            payload["decomposition"] = None
            payload["decomposition_error"] = str(exc)
    return payload


def analyze_payload(A, m_max, k_max, max_n=None):
    warnings = []
    payload = {
        "command": "analyze",
        "n": A.n,
        "determinant": None,
        "trace": str(A.trace()),
        "charpoly": None,
        "cores": None,
        "block_form": block_form_payload(A),
        "stability": None,
        "ghost": None,
        "jordan": None,
        "eigen": None,
        "corepower": None,
        "warnings": warnings,
    }

    def section(name, thunk):
        try:
            payload[name] = thunk()
        except (PreconditionError, SizeCapError) as exc:
            warnings.append(f"{name}: {exc}")
        except BoundExhaustedError as exc:
            warnings.append(f"{name}: bound exhausted: {exc}")

    section("determinant", lambda: str(A.permanent(max_n)))
    section("charpoly", lambda: charpoly_payload(A, max_n))
    section("cores", lambda: cores_payload(A, max_n))
    section("stability", lambda: stability_payload(A, m_max))
    section("ghost", lambda: ghost_payload(A, max_n))
    section("jordan", lambda: jordan_payload(A, k_max, max_n))
    section("eigen", lambda: eigen_payload(A, max_n, decomposition=True, m_max=m_max))

    def corepower_section():
        rep = verify_corepower(A, max_n=max_n)
        return {"m": rep.m, "mu_tilde": rep.mu_tilde,
                "omega_power": None if rep.omega_power is None else str(rep.omega_power),
                "core_checked": rep.core_checked, "tcore_checked": rep.tcore_checked,
                "cyclicity_applicable": rep.cyclicity_applicable,
                "cyclicity_nu_ok": rep.cyclicity_nu_ok,
                "cyclicity_exact_ok": rep.cyclicity_exact_ok}
    section("corepower", corepower_section)
    return payload


# -- printing ----------------------------------------------------------------


def _emit(payload, as_json, out):
    if as_json:
        json.dump(payload, out, indent=2)
        out.write("\n")
    else:
        _emit_human(payload, out)


def _emit_human(value, out, indent=0):
    pad = "  " * indent
    if isinstance(value, dict):
        for key, item in value.items():
            if isinstance(item, (dict, list)) and item:
                out.write(f"{pad}{key}:\n")
                _emit_human(item, out, indent + 1)
            else:
                out.write(f"{pad}{key}: {_scalar(item)}\n")
    elif isinstance(value, list):
        for item in value:
            if isinstance(item, (dict, list)):
                out.write(f"{pad}-\n")
                _emit_human(item, out, indent + 1)
            else:
                out.write(f"{pad}- {_scalar(item)}\n")
    else:
        out.write(f"{pad}{_scalar(value)}\n")


def _scalar(item):
    if item is None:
        return "none"
    if isinstance(item, bool):
        return "true" if item else "false"
    return str(item)


def build_parser():
    parser = argparse.ArgumentParser(prog="stmat",
                                     description="supertropical matrix analyzer")
    parser.add_argument("command",
                        choices=["analyze", "power", "charpoly", "eigen",
                                 "jordan", "stability", "ghost", "cores"])
    parser.add_argument("file", help="matrix JSON file")
    parser.add_argument("--m", type=int, default=2, help="power for the power command")
    parser.add_argument("--m-max", type=int, default=64, dest="m_max",
                        help="stability search bound")
    parser.add_argument("--k-max", type=int, default=16, dest="k_max",
                        help="semisimplicity search bound")
    parser.add_argument("--max-n", type=int, default=None, dest="max_n",
                        help="size cap for enumeration-based operations")
    parser.add_argument("--json", action="store_true", help="emit JSON")
    return parser


def main(argv=None, out=None):
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    max_n = args.max_n
    if max_n is None and os.environ.get("STMAT_MAX_N"):
        try:
            max_n = int(os.environ["STMAT_MAX_N"])
        except ValueError:
            print("STMAT_MAX_N must be an integer", file=sys.stderr)
            return EXIT_PARSE
    if args.m < 0 or args.m_max < 1 or args.k_max < 1 or (max_n is not None and max_n < 1):
        print("flags must be positive", file=sys.stderr)
        return EXIT_PARSE

    try:
        A = load_matrix(args.file)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE

    try:
        if args.command == "analyze":
            payload = analyze_payload(A, args.m_max, args.k_max, max_n)
        elif args.command == "power":
            payload = {"command": "power", "m": args.m,
                       "matrix": (A ** args.m).to_json_dict()}
        elif args.command == "charpoly":
            payload = {"command": "charpoly", "charpoly": charpoly_payload(A, max_n)}
        elif args.command == "eigen":
            payload = {"command": "eigen",
                       "eigen": eigen_payload(A, max_n, decomposition=True,
                                              m_max=args.m_max)}
        elif args.command == "jordan":
            payload = {"command": "jordan", "jordan": jordan_payload(A, args.k_max, max_n)}
        elif args.command == "stability":
            payload = {"command": "stability", "stability": stability_payload(A, args.m_max)}
        elif args.command == "ghost":
            payload = {"command": "ghost", "ghost": ghost_payload(A, max_n)}
        else:
            payload = {"command": "cores", "cores": cores_payload(A, max_n)}
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (PreconditionError, SizeCapError) as exc:
        print(f"precondition failed: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except BoundExhaustedError as exc:
        detail = getattr(exc, "diagnostics", None)
        print(f"bound exhausted: {exc}", file=sys.stderr)
        if detail:
            print(json.dumps(detail, indent=2), file=sys.stderr)
        return EXIT_BOUND
    except StmatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION

    _emit(payload, args.json, out)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
