"""Command-line surface: emits the coefficient tables, sector probability
tables, and GHZ residual-spectrum data as JSON/CSV artifacts.

Exit codes: 0 success, 1 internal inconsistency (oracle mismatch),
2 bad input.  Worker count for the verify suite comes from WKRON_WORKERS.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from fractions import Fraction

from . import covariants, ghz, kronstate, probw, protocol
from .partitions import kron_coeff, parse_partition_tuple, w_admissible
from .wstates import parse_w_state, w_normal_form


def _write(text: str, out: str | None):
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _parse_state(spec: str, parties: int):
    if spec in ("W", "w"):
        return w_normal_form(parties)
    if spec.startswith("ghz:"):
        return protocol.GHZState(Fraction(spec[4:]), parties)
    return parse_w_state(spec)


def cmd_kron(args) -> int:
    lams = parse_partition_tuple(args.lam)
    if args.parties is not None and args.parties != lams.num_parties:
        print(
            f"--parties {args.parties} inconsistent with {lams.num_parties}-party lambda",
            file=sys.stderr,
        )
        return 2
    if not w_admissible(lams):
        print(f"inadmissible partition tuple {lams}", file=sys.stderr)
        return 2
    n = lams.n
    kv = kronstate.khat(lams.num_parties, n, lams)
    if kv.is_zero:
        print(f"sector {lams} carries no Kronecker support", file=sys.stderr)
        return 2
    table = kronstate.to_table_json(kronstate.normalized(kv))
    table["eta"] = kronstate.eta(kv).to_json()
    table["p_w"] = str(probw.p_w(lams))
    table["kron_coeff"] = kron_coeff(lams)
    text = json.dumps(table, indent=1 if args.format == "json" else None) + "\n"
    _write(text, args.out)
    return 0


def cmd_prob(args) -> int:
    state = _parse_state(args.state, args.parties)
    n = args.copies
    if isinstance(state, protocol.GHZState):
        # probabilities from the dense oracle; the counting route is W-only
        dense = protocol.tensor_power(state, n, mode=args.mode)
        sectors = protocol.multilocal_schur(dense)
        rows = sorted(
            ((lams, Fraction(b.norm_sq()) if b.mode == "exact" else b.norm_sq())
             for lams, b in sectors.items()),
            key=lambda t: str(t[0]),
        )
        source = "dense-oracle"
    else:
        rows = sorted(
            ((lams, probw.p_psi(state, lams))
             for lams in protocol.all_partition_tuples(state.num_parties, n)),
            key=lambda t: str(t[0]),
        )
        rows = [(lams, p) for lams, p in rows if p > 0]
        source = "closed-form"
    buf = io.StringIO()
    writer = csv.writer(buf)
    writer.writerow(["lambda", "p", "p_float", "cumulative", "source"])
    acc = Fraction(0)
    for lams, p in rows:
        acc += p
        writer.writerow([str(lams), str(p), float(p), str(acc), source])
    _write(buf.getvalue(), args.out)
    return 0


def cmd_ghz_spectrum(args) -> int:
    alpha = Fraction(args.alpha)
    ns = [int(tok) for tok in args.copies_list.split(",")]
    rows = ghz.spectrum_rows(ns, alpha)
    buf = io.StringIO()
    writer = csv.writer(buf)
    writer.writerow(["n", "lambda", "rank_index", "gamma"])
    for row in rows:
        writer.writerow(row)
    _write(buf.getvalue(), args.out)
    return 0


def cmd_covariant(args) -> int:
    state = _parse_state(args.state, args.parties)
    nu = tuple(int(tok) for tok in args.nu.split(","))
    poly = covariants.theorem2_form(state, args.copies, nu)
    if poly is None:
        _write("vanishes\n", args.out)
    else:
        _write(covariants.format_poly(poly) + "\n", args.out)
    return 0


def cmd_sample(args) -> int:
    state = _parse_state(args.state, args.parties)
    outs = protocol.sample_outcomes(state, args.copies, args.seed, args.runs)
    buf = io.StringIO()
    writer = csv.writer(buf)
    writer.writerow(["run", "lambda"])
    for i, lams in enumerate(outs):
        writer.writerow([i, str(lams)])
    _write(buf.getvalue(), args.out)
    return 0


def cmd_verify(args) -> int:
    cases = ((3, args.nmax3), (4, args.nmax4))
    workers = int(os.environ.get("WKRON_WORKERS", "1"))
    if workers > 1:
        import multiprocessing as mp

        with mp.Pool(workers) as pool:
            report = protocol.verify_report(cases, pool_map=pool.map)
    else:
        report = protocol.verify_report(cases)
    _write(json.dumps(report, indent=1) + "\n", args.out)
    return 0 if report["ok"] else 1


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="wkron",
        description="Exact W-class entanglement-concentration toolkit",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p, state=False, seed=False):
        p.add_argument("--parties", type=int, default=3)
        p.add_argument("--format", choices=("json", "csv"), default=None)
        p.add_argument("--out", default=None)
        p.add_argument("--mode", choices=("exact", "float"), default=None)
        if state:
            p.add_argument("--state", default="W", help="W | ghz:ALPHA | c0,c1,...,cN")
        if seed:
            p.add_argument("--seed", type=int, default=0)

    p = sub.add_parser("kron", help="Kronecker-state coefficient table (JSON)")
    common(p)
    p.add_argument("--lambda", dest="lam", required=True, help='partition tuple "a,b;a,b;..."')
    p.set_defaults(func=cmd_kron, format="json", parties=None)

    p = sub.add_parser("prob", help="sector probability table (CSV)")
    common(p, state=True, seed=True)
    p.add_argument("--copies", type=int, required=True)
    p.set_defaults(func=cmd_prob, format="csv")

    p = sub.add_parser("ghz-spectrum", help="GHZ residual Schmidt spectra (CSV)")
    common(p)
    p.add_argument("--copies", dest="copies_list", required=True, help="comma list of n")
    p.add_argument("--alpha", default="1/3")
    p.set_defaults(func=cmd_ghz_spectrum, format="csv")

    p = sub.add_parser("covariant", help="closed-form W-class covariant, pretty-printed")
    common(p, state=True)
    p.add_argument("--copies", type=int, required=True)
    p.add_argument("--nu", required=True, help="comma list of per-party x-degrees")
    p.set_defaults(func=cmd_covariant)

    p = sub.add_parser("sample", help="sample measurement outcomes (CSV)")
    common(p, state=True, seed=True)
    p.add_argument("--copies", type=int, required=True)
    p.add_argument("--runs", type=int, default=1)
    p.set_defaults(func=cmd_sample, format="csv")

    p = sub.add_parser("verify", help="oracle-vs-recurrence master suite (JSON report)")
    common(p)
    p.add_argument("--nmax3", type=int, default=5, help="max copies for N=3")
    p.add_argument("--nmax4", type=int, default=4, help="max copies for N=4")
    p.set_defaults(func=cmd_verify)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except protocol.InconsistencyError as exc:
        print(f"internal inconsistency: {exc}", file=sys.stderr)
        return 1
    except (ValueError, protocol.SizeCapError) as exc:
        print(f"bad input: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
