"""The hombox command line.

Exit codes: 0 all requested checks pass, 1 a check failed (the report is
on standard output), 2 usage or input errors.
"""

from __future__ import annotations

import argparse
import sys

from . import braiding, codouble, fileio, products, zoo
from .constructions import dual_hopf, opposite
from .errors import HomboxError, LawViolation, BuiltinValidationError
from .hom_core import check_structure
from .products import canonical_action_coaction, check_condition_set

_CONSTRUCTS = ("dual", "op", "smash-right", "bicross-right", "bicross-left",
               "canonical-bicross", "codouble", "codouble-hat", "heisenberg",
               "heisenberg-dual", "twist-left", "twist-right")
_VERIFIES = ("conditions-2.3-2.7", "thm1.2-conditions", "matched-copair",
             "cqt", "cocycle-left", "cocycle-right", "thm510", "thm510-hat",
             "cor511")

_BUILTIN_BASIS = {
    "k": ["1"],
    "group-c2": ["1", "g"],
    "group-c3": ["1", "g", "g2"],
    "group-c3-inv": ["1", "g", "g2"],
    "sweedler4": ["1", "g", "x", "gx"],
    "classical-sweedler4": ["1", "g", "x", "gx"],
}


def _basis_for(name):
    if name.startswith("dual-of:"):
        inner = _basis_for(name[8:])
        return [b + "*" for b in inner] if inner else None
    return _BUILTIN_BASIS.get(name)


def build_parser():
    p = argparse.ArgumentParser(
        prog="hombox",
        description="exact structure-constant calculus for monoidal "
                    "Hom-Hopf algebras")
    sub = p.add_subparsers(dest="command", required=True)

    b = sub.add_parser("builtin", help="emit a validated builtin to a file")
    b.add_argument("name")
    b.add_argument("--lambda", dest="lam", default="2",
                   help="automorphism parameter for sweedler4 (rational, "
                        "nonzero)")
    b.add_argument("--field", default="Q", help='"Q" or "Fp:<prime>"')
    b.add_argument("--out", required=True)

    c = sub.add_parser("check", help="run a law suite on an algebra file")
    c.add_argument("file")
    c.add_argument("--suite", required=True,
                   choices=("algebra", "coalgebra", "bialgebra", "hopf"))
    c.add_argument("--all-witnesses", action="store_true")
    c.add_argument("--save", action="store_true",
                   help="embed the report into the file's metadata")

    k = sub.add_parser("construct", help="derive a new structure from a file")
    k.add_argument("kind", choices=_CONSTRUCTS)
    k.add_argument("--in", dest="infile", required=True)
    k.add_argument("--in2", dest="infile2")
    k.add_argument("--n", type=int, default=0)
    k.add_argument("--side", choices=("left", "right"), default="right")
    k.add_argument("--force", action="store_true",
                   help="skip precondition suites; output is flagged "
                        "unverified")
    k.add_argument("--derived-antipode", action="store_true",
                   help="attach S^-1 to an opposite algebra")
    k.add_argument("--out", required=True)

    v = sub.add_parser("verify", help="verify a theorem or condition set")
    v.add_argument("kind", choices=_VERIFIES)
    v.add_argument("--in", dest="infile", required=True)
    v.add_argument("--n", type=int, default=0)
    v.add_argument("--n-range", dest="n_range",
                   help="inclusive sweep A..B overriding --n")
    v.add_argument("--all-witnesses", action="store_true")

    r = sub.add_parser("report", help="pretty-print an embedded report")
    r.add_argument("--in", dest="infile", required=True)
    return p


# ----------------------------------------------------------------------


def _cmd_builtin(args):
    obj = zoo.builtin(args.name, args.lam, fileio.field_from_tag(args.field))
    meta = {"builtin": args.name}
    if args.name.split(":")[-1] == "sweedler4" or args.name == "sweedler4":
        meta["lambda"] = args.lam
    fileio.save_algebra(obj, args.out, args.name, _basis_for(args.name), meta)
    print(f"wrote {args.out}")
    return 0


def _cmd_check(args):
    obj, doc = fileio.load_document(args.file)
    report = check_structure(obj, args.suite, args.all_witnesses)
    print(report.format())
    if args.save:
        meta = doc.get("metadata", {})
        meta["last_report"] = fileio.report_to_json(report)
        fileio.save_algebra(obj, args.file, doc["name"], doc["basis"], meta)
    return 0 if report.passed else 1


def _cmd_construct(args):
    if args.infile2:
        raise HomboxError(
            "construct subcommands derive everything from one base file; "
            "--in2 is not used")
    H, doc = fileio.load_document(args.infile)
    name = doc["name"]
    n, kind = args.n, args.kind
    meta = {"construction": kind, "inputs": [name], "n": n}
    basis = None
    if kind == "dual":
        out = dual_hopf(H)
        outname = f"dual({name})"
        basis = [b + "*" for b in doc["basis"]]
        meta.pop("n")
    elif kind == "op":
        out = opposite(H, derive_antipode=args.derived_antipode)
        outname = f"op({name})"
        basis = doc["basis"]
        meta.pop("n")
        if args.derived_antipode:
            meta["derived_antipode"] = True
    elif kind == "smash-right":
        act, _ = canonical_action_coaction(H, n, "right", check=not args.force)
        out = products.smash_product_right(H, opposite(H, True).algebra, act,
                                           check=not args.force)
        outname = f"smash({name},{name}^op,n={n})"
        meta["factors"] = [name, f"{name}^op"]
    elif kind in ("bicross-right", "bicross-left", "canonical-bicross"):
        side = {"bicross-right": "right", "bicross-left": "left"}.get(
            kind, args.side)
        out = products.canonical_bicross(H, n, side, force=args.force)
        outname = f"bicross-{side}({name},n={n})"
        meta["side"] = side
        meta["factors"] = ([name, f"{name}^op"] if side == "right"
                           else [f"{name}^op", name])
    elif kind in ("codouble", "codouble-hat"):
        variant = "T" if kind == "codouble" else "That"
        out = codouble.drinfeld_codouble(H, n, variant, force=args.force)
        outname = f"{variant}({name},n={n})"
        meta["variant"] = variant
        meta["factors"] = ([f"{name}^op", f"{name}*"] if variant == "T"
                           else [f"{name}*", f"{name}^op"])
    elif kind in ("heisenberg", "heisenberg-dual"):
        variant = "H" if kind == "heisenberg" else "Hdual"
        out = braiding.heisenberg_double(H, n, variant)
        outname = f"heisenberg{'' if variant == 'H' else '-dual'}({name},n={n})"
        meta["variant"] = variant
        meta["factors"] = ([name, f"{name}*"] if variant == "H"
                           else [f"{name}*", name])
    elif kind in ("twist-left", "twist-right"):
        side = kind.split("-")[1]
        variant = "T" if side == "left" else "That"
        TH = codouble.drinfeld_codouble(H, n, variant, force=args.force)
        sigma = (braiding.eq57_cocycle(H, n) if side == "left"
                 else braiding.eq58_cocycle(H, n))
        out = braiding.twist(TH, sigma, side, check=not args.force)
        outname = f"twist-{side}({variant}({name}),n={n})"
        meta["variant"] = variant
        meta["cocycle"] = "flip-of-zeta" if side == "left" else "zeta"
    else:  # pragma: no cover
        raise HomboxError(f"unhandled construct {kind!r}")
    if args.force:
        meta["unverified"] = True
    if hasattr(out, "dim") and out.dim != H.dim:
        meta["factor_dims"] = [H.dim, out.dim // H.dim]
    fileio.save_algebra(out, args.out, outname, basis, meta)
    print(f"wrote {args.out}")
    return 0


def _verify_reports(kind, H, n, aw):
    Hop = opposite(H, derive_antipode=True)
    if kind == "conditions-2.3-2.7":
        act, coact = canonical_action_coaction(H, n, "right", check=False)
        return [check_condition_set(
            "bicross_right", {"A": H, "H": Hop, "act": act, "coact": coact},
            aw)]
    if kind == "thm1.2-conditions":
        act, coact = canonical_action_coaction(H, n, "left", check=False)
        return [check_condition_set(
            "bicross_left", {"A": Hop, "H": H, "act": act, "coact": coact},
            aw)]
    if kind == "matched-copair":
        out = []
        for variant in ("T", "That"):
            rho_a, rho_h = codouble.codouble_coactions(H, n, variant)
            A, Hf = codouble.codouble_factors(H, n, variant)
            out.append(check_condition_set(
                "matched_copair",
                {"A": A, "H": Hf, "rhoA": rho_a, "rhoH": rho_h}, aw))
        return out
    if kind == "cqt":
        out = []
        for variant in ("T", "That"):
            TH = codouble.drinfeld_codouble(H, n, variant)
            z, zi = braiding.codouble_cqt_matrices(TH, H, n, variant)
            out.append(check_condition_set(
                "cqt", {"H": TH, "zeta": z, "zeta_inv": zi}, aw))
        return out
    if kind in ("cocycle-left", "cocycle-right"):
        variant = "T" if kind == "cocycle-left" else "That"
        TH = codouble.drinfeld_codouble(H, n, variant)
        sigma = (braiding.eq57_cocycle(H, n) if variant == "T"
                 else braiding.eq58_cocycle(H, n))
        cname = "cocycle_left" if variant == "T" else "cocycle_right"
        return [check_condition_set(cname, {"H": TH, "sigma": sigma}, aw)]
    if kind in ("thm510", "thm510-hat"):
        variant = "T" if kind == "thm510" else "That"
        return [braiding.verify_thm510(H, n, variant)]
    if kind == "cor511":
        out = []
        T = codouble.drinfeld_codouble(H, n, "T")
        tw = braiding.twist(T, braiding.eq57_cocycle(H, n), "left")
        out.append(braiding.comodule_algebra_from_twist(tw, T, "right"))
        That = codouble.drinfeld_codouble(H, n, "That")
        twr = braiding.twist(That, braiding.eq58_cocycle(H, n), "right")
        out.append(braiding.comodule_algebra_from_twist(twr, That, "left"))
        return out
    raise HomboxError(f"unhandled verify kind {kind!r}")  # pragma: no cover


def _cmd_verify(args):
    H = fileio.load_algebra(args.infile)
    if not hasattr(H, "antipode"):
        raise HomboxError("verify needs a Hopf-level file (with antipode)")
    if args.n_range:
        try:
            lo, hi = args.n_range.split("..")
            ns = list(range(int(lo), int(hi) + 1))
        except ValueError:
            raise HomboxError(f"bad --n-range {args.n_range!r}, want A..B") \
                from None
    else:
        ns = [args.n]
    ok = True
    for n in ns:
        for rep in _verify_reports(args.kind, H, n, args.all_witnesses):
            print(f"# n = {n}")
            print(rep.format())
            ok = ok and rep.passed
    return 0 if ok else 1


def _cmd_report(args):
    _, doc = fileio.load_document(args.infile)
    embedded = doc.get("metadata", {}).get("last_report")
    if not embedded:
        raise HomboxError(f"{args.infile} has no embedded report")
    print(fileio.report_from_json(embedded).format())
    return 0


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handlers = {
        "builtin": _cmd_builtin,
        "check": _cmd_check,
        "construct": _cmd_construct,
        "verify": _cmd_verify,
        "report": _cmd_report,
    }
    try:
        return handlers[args.command](args)
    except BuiltinValidationError as exc:
        print(exc.report.format())
        return 1
    except LawViolation as exc:
        print(exc.report.format())
        return 1
    except HomboxError as exc:
        print(f"hombox: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
