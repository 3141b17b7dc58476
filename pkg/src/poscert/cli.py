"""Command-line entry point.

Subcommands: analyze, verify, enumerate, paper-suite.  Exit codes are a
stable contract: 0 success, 1 verification or witness failure, 2 input
error.  All output is deterministic given the flags.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .catalog import counts_table, enumerate_posets
from .certificates import (
    CofibrantCertificate,
    deserialize,
    serialize,
    verify,
    verify_cofibrant,
)
from .errors import InvalidCertificate, ParseError, PoscertError
from .formats import parse_poset_file, write_poset_file
from .poset import CANONICAL_BOUND, canonical_form, is_connected
from .recognize import classify, is_chain, is_join_semilattice, \
    is_meet_semilattice, is_tree_poset, is_zigzag
from .smallcat import small_poset_witness
from .suite import run_all, theorem_matrix
from .witnesses import (
    WitnessReport,
    chain_witness,
    semilattice_witness,
    tree_witness,
    zigzag_witness,
)

EXIT_OK = 0
EXIT_VERIFY = 1
EXIT_INPUT = 2


def _route_witness(p) -> WitnessReport:
    from .catalog import _coproduct_witness
    from .certificates import ax_iso, initial_cofibrant
    from .errors import NoWitnessRoute
    from .poset import connected_components, identity

    if p.n == 0:
        # the empty poset is the initial object; nothing to include
        cert = initial_cofibrant(p, ax_iso(identity(p)))
        return WitnessReport("initial", "trivial", p, cert, {})
    if p.n <= 5 and is_connected(p):
        return small_poset_witness(p)
    if is_chain(p):
        return chain_witness(p)
    if is_join_semilattice(p) or is_meet_semilattice(p):
        return semilattice_witness(p)
    if is_zigzag(p):
        return zigzag_witness(p)
    if is_tree_poset(p):
        return tree_witness(p)
    if not is_connected(p):
        return _coproduct_witness(p, witness_fn=_route_witness)
    raise NoWitnessRoute("no witness route for this poset")


def cmd_analyze(args) -> int:
    try:
        text = Path(args.file).read_text()
        name, p = parse_poset_file(text)
    except (OSError, ParseError) as e:
        print(f"input error: {e}", file=sys.stderr)
        return EXIT_INPUT
    cls = classify(p)
    print(f"poset {name}: {p.n} elements, tags: {', '.join(sorted(cls.tags))}")
    try:
        report = _route_witness(p)
    except PoscertError as e:
        print(f"no witness route: {e}")
        return EXIT_VERIFY
    cof = verify_cofibrant(report.certificate)
    case = f"({report.case})" if report.case else ""
    print(f"route: {report.theorem}{case}; cofibrant: "
          f"{'VERIFIED' if cof.ok else 'FAILED'}")
    mins = sorted(report.minimum_certificates)
    good = 0
    for mu in mins:
        rep = verify(report.minimum_certificates[mu])
        good += rep.ok
    print(f"minima: {good}/{len(mins)} VERIFIED")
    if report.uses_sd_mono():
        print("note: depends on the single-subdivision axiom AX_SD_MONO")
    if args.emit:
        Path(args.emit).write_bytes(serialize(report.certificate))
        written = [args.emit]
        for mu in mins:
            side = f"{args.emit}.min{mu}"
            Path(side).write_bytes(serialize(report.minimum_certificates[mu]))
            written.append(side)
        print(f"certificates written to {', '.join(written)}")
    return EXIT_OK if cof.ok and good == len(mins) else EXIT_VERIFY


def cmd_verify(args) -> int:
    try:
        cert_data = Path(args.certificate).read_bytes()
        poset_text = Path(args.poset).read_text()
    except OSError as e:
        print(f"input error: {e}", file=sys.stderr)
        return EXIT_INPUT
    try:
        _, p = parse_poset_file(poset_text)
    except ParseError as e:
        print(f"input error: {e}", file=sys.stderr)
        return EXIT_INPUT
    try:
        cert = deserialize(cert_data)
    except ParseError as e:
        print(f"input error: {e}", file=sys.stderr)
        return EXIT_INPUT
    except InvalidCertificate as e:
        print(f"FAILED: {e}")
        return EXIT_VERIFY
    if isinstance(cert, CofibrantCertificate):
        target = cert.object
        report = verify_cofibrant(cert)
    else:
        target = cert.conclusion.target
        report = verify(cert)
    if target.n != p.n or (
            target.n <= CANONICAL_BOUND
            and canonical_form(target) != canonical_form(p)):
        print("FAILED: ObjectMismatch: certificate does not target the poset")
        return EXIT_VERIFY
    print(report.summary())
    return EXIT_OK if report.ok else EXIT_VERIFY


def cmd_enumerate(args) -> int:
    if not 1 <= args.n <= 6:
        print("input error: n must be between 1 and 6", file=sys.stderr)
        return EXIT_INPUT
    for row in counts_table(args.n):
        print("n={n}: total={total} connected={connected} "
              "semilattices={semilattices} chains={chains} zigzags={zigzags} "
              "trees={trees} glueable={glueable}".format(**row))
    if args.dump:
        outdir = Path(args.dump)
        outdir.mkdir(parents=True, exist_ok=True)
        count = 0
        for entry in enumerate_posets(args.n):
            fname = f"n{args.n}_{count:03d}.poset"
            (outdir / fname).write_text(
                write_poset_file(f"n{args.n}_{count:03d}", entry.representative))
            count += 1
        print(f"{count} poset files written to {outdir}")
    return EXIT_OK


def cmd_paper_suite(args) -> int:
    results = run_all(seed=args.seed)
    all_ok = True
    print("== acceptance criteria ==")
    for r in results:
        mark = "PASS" if r.ok else "FAIL"
        flag = ""
        if r.uses_sd_mono:
            flag = " [CONDITIONAL on AX_SD_MONO]" if args.strict_axioms else \
                " [uses AX_SD_MONO]"
        print(f"  {mark} {r.name}{flag}")
        if not r.ok:
            print(f"       {r.detail}")
            all_ok = False
    print("== theorem traceability ==")
    for theorem, status, detail in theorem_matrix(seed=args.seed,
                                                  strict_axioms=args.strict_axioms):
        print(f"  {theorem:10s} {status:12s} {detail}")
        if status == "FAIL":
            all_ok = False
    print("== verdict:", "ALL PASS" if all_ok else "FAILURES", "==")
    return EXIT_OK if all_ok else EXIT_VERIFY


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="poscert",
        description="cofibrancy certificates for finite posets")
    sub = parser.add_subparsers(dest="command", required=True)

    a = sub.add_parser("analyze", help="classify a poset file and build its witness")
    a.add_argument("file")
    a.add_argument("--emit", metavar="PATH", help="write the certificate file")
    a.set_defaults(fn=cmd_analyze)

    v = sub.add_parser("verify", help="re-verify a certificate against a poset file")
    v.add_argument("certificate")
    v.add_argument("poset")
    v.set_defaults(fn=cmd_verify)

    e = sub.add_parser("enumerate", help="catalog counts, optionally dumping classes")
    e.add_argument("n", type=int)
    e.add_argument("--dump", metavar="DIR")
    e.set_defaults(fn=cmd_enumerate)

    s = sub.add_parser("paper-suite", help="run every acceptance criterion")
    s.add_argument("--strict-axioms", action="store_true",
                   help="report AX_SD_MONO-dependent results as CONDITIONAL")
    s.add_argument("--seed", type=int, default=0,
                   help="seed for the property-test randomness")
    s.set_defaults(fn=cmd_paper_suite)

    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except PoscertError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
