"""Command-line surface.

Exit codes: 0 success, 2 parse/validation error, 3 guard violation,
4 formula-vs-oracle mismatch, 5 classification route disagreement.
Env var RC_SEED overrides the RNG seed for sampling commands.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys

import numpy as np

from . import bounds as bounds_mod
from . import classify as classify_mod
from . import primes as primes_mod
from .cayley import (
    NormalSubsetSpec,
    make_interval_subset,
    make_normal_subset,
    random_dihedral_subset,
    subset_from_hex,
    enumerate_normal_subsets,
)
from .errors import (
    ConvergenceError,
    FormulaMismatchError,
    GuardError,
    RouteDisagreementError,
    ValidationError,
)
from .groups import DIHEDRAL, build_group
from .oracle import oracle_spectrum
from .spectra import (
    dihedral_spectrum,
    frobenius_spectrum,
    spectrum_record,
    verdict,
)

EXIT_PARSE = 2
EXIT_GUARD = 3
EXIT_MISMATCH = 4
EXIT_ROUTES = 5

ORACLE_TOL = 1e-6


def _seed(args) -> int:
    env = os.environ.get("RC_SEED")
    if env is not None:
        return int(env)
    return args.seed


def _parse_subset(G, spec: str):
    """Returns (kind, payload): ("normal", NormalSubsetSpec) or ("subset", CayleySubset)."""
    kind, _, body = spec.partition(":")
    if kind == "normal":
        fields = {"X": (), "Y": ()}
        for part in body.split(";"):
            name, _, vals = part.partition("=")
            name = name.strip().upper()
            if name not in fields:
                raise ValidationError(f"bad subset field {name!r} in {spec!r}")
            fields[name] = tuple(int(v) for v in vals.split(",") if v.strip())
        return "normal", NormalSubsetSpec.make(fields["X"], fields["Y"])
    if kind == "interval":
        params = dict(
            p.split("=") for p in body.split(",") if "=" in p
        )
        return "subset", make_interval_subset(
            G, int(params["l1"]), int(params["l2"])
        )
    if kind == "mask":
        return "subset", subset_from_hex(G, body)
    raise ValidationError(f"unknown subset grammar {spec!r}")


def _emit(obj, fmt: str):
    if fmt == "pretty":
        for key, val in obj.items():
            print(f"{key}: {val}")
    else:
        print(json.dumps(obj, indent=2, sort_keys=True))


def cmd_spectrum(args) -> int:
    G = build_group(args.group)
    kind, payload = _parse_subset(G, args.subset)
    if kind == "normal":
        spec = frobenius_spectrum(G, payload)
        subset = make_normal_subset(G, payload)
    else:
        subset = payload
        if G.family == DIHEDRAL:
            spec = dihedral_spectrum(G, subset)
        else:
            spec = oracle_spectrum(subset)  # no closed form for non-normal F_{p,q}
    v = verdict(spec)
    record = spectrum_record(G, args.subset, spec, v)
    record["mask"] = subset.mask_hex()
    if args.oracle:
        osp = oracle_spectrum(subset)
        delta = float(
            np.abs(spec.values_sorted() - osp.values_sorted()).max()
        )
        record["oracle_max_delta"] = delta
        if delta > ORACLE_TOL:
            _emit(record, args.format)
            raise FormulaMismatchError(
                f"formula vs oracle max delta {delta:.3e} exceeds {ORACLE_TOL}"
            )
    _emit(record, args.format)
    return 0


def cmd_bounds(args) -> int:
    G = build_group(args.group)
    if args.exhaustive:
        report = bounds_mod.verify_l_hat(G)
    else:
        report = bounds_mod.compute_l_hat(G)
    _emit(report.to_json(), args.format)
    return 0


def cmd_classify(args) -> int:
    _emit(classify_mod.classify_prime(args.p).to_json(), args.format)
    return 0


def cmd_scan(args) -> int:
    results = classify_mod.scan_primes(args.p_from, args.p_to, jobs=args.jobs)
    if args.families:
        grouped: dict[str, list[int]] = {}
        for rec in results:
            if rec.verdict == classify_mod.EXCEPTIONAL:
                grouped.setdefault(f"J_{rec.r},{rec.c}", []).append(rec.p)
        _emit({"schema": 1, "families": grouped}, "json")
        return 0
    if args.format == "csv":
        writer = csv.writer(sys.stdout)
        writer.writerow(["p", "parity", "r", "k", "c", "verdict", "mu1", "rb"])
        for rec in results:
            writer.writerow(rec.csv_row())
    else:
        _emit({"schema": 1, "results": [rec.to_json() for rec in results]}, "json")
    return 0


def cmd_hl(args) -> int:
    fam = primes_mod.QuadraticFamily(args.r, args.c)
    est = primes_mod.hl_constant(fam, int(float(args.cutoff)))
    _emit(
        {
            "schema": 1,
            "r": fam.r,
            "c": fam.c,
            "reduced_c": est.reduced_c,
            "cutoff": est.cutoff,
            "half_constant": est.partial,
        },
        args.format,
    )
    return 0


def cmd_families(args) -> int:
    rows = []
    for fam in primes_mod.ALL_FAMILIES:
        for k, value, prime in primes_mod.enumerate_family(fam.r, fam.c, args.kmax):
            rows.append([fam.r, fam.c, k, value, prime])
    if args.csv:
        writer = csv.writer(sys.stdout)
        writer.writerow(["r", "c", "k", "f_k", "is_prime"])
        writer.writerows(rows)
    else:
        _emit(
            {
                "schema": 1,
                "entries": [
                    {"r": r, "c": c, "k": k, "value": v, "is_prime": pr}
                    for r, c, k, v, pr in rows
                ],
            },
            "json",
        )
    return 0


def cmd_avoid(args) -> int:
    rep = primes_mod.residue_avoidance(args.a)
    _emit(
        {
            "schema": 1,
            "modulus": rep.modulus,
            "hit_residues": sorted(rep.hit),
            "witness": rep.witness,
        },
        args.format,
    )
    return 0


def cmd_tilde(args) -> int:
    rep = classify_mod.tilde_l_exhaustive(args.p)
    _emit(
        {
            "schema": 1,
            "p": rep.p,
            "tilde_l": rep.tilde_l,
            "witness_mask": rep.witness_mask_hex,
            "subsets_checked": rep.checked,
        },
        args.format,
    )
    return 0


def cmd_verify(args) -> int:
    """Oracle-equivalence and sweep consistency checks; nonzero exit on any failure."""
    rng = np.random.default_rng(_seed(args))
    failures = []

    def check(name, ok, detail=""):
        status = "ok" if ok else "FAIL"
        print(f"[{status}] {name}{(': ' + detail) if detail else ''}")
        if not ok:
            failures.append(name)

    for gspec in ("d2p:11", "fpq:7,3"):
        G = build_group(gspec)
        worst = 0.0
        for spec in enumerate_normal_subsets(G):
            subset = make_normal_subset(G, spec)
            delta = float(
                np.abs(
                    frobenius_spectrum(G, spec).values_sorted()
                    - oracle_spectrum(subset).values_sorted()
                ).max()
            )
            worst = max(worst, delta)
        check(f"normal-vs-oracle {gspec}", worst < 1e-8, f"max delta {worst:.2e}")

    G = build_group("d2p:13")
    worst = 0.0
    for _ in range(args.samples):
        subset = random_dihedral_subset(G, rng)
        delta = float(
            np.abs(
                dihedral_spectrum(G, subset).values_sorted()
                - oracle_spectrum(subset).values_sorted()
            ).max()
        )
        worst = max(worst, delta)
    check(
        f"zw-vs-oracle d2p:13 x{args.samples}", worst < 1e-8, f"max delta {worst:.2e}"
    )

    for gspec in ("d2p:11", "d2p:23", "fpq:13,3"):
        G = build_group(gspec)
        fast = bounds_mod.compute_l_hat(G)
        slow = bounds_mod.verify_l_hat(G)
        check(
            f"l_hat fast-vs-exhaustive {gspec}",
            fast.l_hat == slow.l_hat,
            f"{fast.l_hat} vs {slow.l_hat}",
        )
    if failures:
        print(f"{len(failures)} check(s) failed", file=sys.stderr)
        return 1
    print("all checks passed")
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="rcayley",
        description="Spectra and Ramanujan bounds of Cayley graphs of "
        "dihedral and F_{p,q} Frobenius groups.",
    )
    ap.add_argument("--format", choices=["json", "pretty"], default="json")
    sub = ap.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("spectrum", help="eigenvalues of one Cayley graph")
    sp.add_argument("--group", required=True, help='"d2p:<p>" or "fpq:<p>,<q>"')
    sp.add_argument(
        "--subset",
        required=True,
        help='"normal:X=..;Y=..", "interval:l1=..,l2=..", or "mask:<hex>"',
    )
    sp.add_argument("--oracle", action="store_true", help="cross-check with Jacobi")
    sp.set_defaults(func=cmd_spectrum)

    bp = sub.add_parser("bounds", help="l0 and l_hat for a group")
    bp.add_argument("--group", required=True)
    bp.add_argument("--exhaustive", action="store_true")
    bp.set_defaults(func=cmd_bounds)

    cp = sub.add_parser("classify", help="exceptional/ordinary verdict for a prime")
    cp.add_argument("--p", type=int, required=True)
    cp.set_defaults(func=cmd_classify)

    scp = sub.add_parser("scan", help="classify a range of primes")
    scp.add_argument("--from", dest="p_from", type=int, required=True)
    scp.add_argument("--to", dest="p_to", type=int, required=True)
    scp.add_argument("--jobs", type=int, default=1)
    scp.add_argument("--families", action="store_true", help="group exceptional primes")
    scp.add_argument(
        "--format", choices=["json", "csv"], default="csv",
        help="csv columns: p,parity,r,k,c,verdict,mu1,rb",
    )
    scp.set_defaults(func=cmd_scan)

    hp = sub.add_parser("hl", help="truncated Hardy-Littlewood constant")
    hp.add_argument("--r", type=int, required=True)
    hp.add_argument("--c", type=int, required=True)
    hp.add_argument("--cutoff", default="1e7")
    hp.set_defaults(func=cmd_hl)

    fp = sub.add_parser("families", help="enumerate the six quadratic families")
    fp.add_argument("--kmax", type=int, required=True)
    fp.add_argument("--csv", action="store_true")
    fp.set_defaults(func=cmd_families)

    avp = sub.add_parser("avoid", help="residues mod a hit by the families")
    avp.add_argument("--a", type=int, required=True)
    avp.set_defaults(func=cmd_avoid)

    tp = sub.add_parser("tilde", help="exhaustive tilde-l for small p")
    tp.add_argument("--p", type=int, required=True)
    tp.set_defaults(func=cmd_tilde)

    vp = sub.add_parser("verify", help="oracle-equivalence and sweep checks")
    vp.add_argument("--samples", type=int, default=200)
    vp.add_argument("--seed", type=int, default=0)
    vp.set_defaults(func=cmd_verify)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ValidationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except GuardError as exc:
        print(f"guard: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except (FormulaMismatchError, ConvergenceError) as exc:
        print(f"mismatch: {exc}", file=sys.stderr)
        return EXIT_MISMATCH
    except RouteDisagreementError as exc:
        print(f"route disagreement: {exc}", file=sys.stderr)
        return EXIT_ROUTES


if __name__ == "__main__":
    sys.exit(main())
