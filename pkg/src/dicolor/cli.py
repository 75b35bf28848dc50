"""Command-line surface.

Subcommands: ``color`` (run an algorithm with internal verification and
a machine-readable run report), ``oracle`` (exact small-instance
values), ``verify`` (check a coloring file against a graph file),
``gen`` (seeded instance factories) and ``audit`` (the product subset
audit).  Exit codes: 0 success, 1 verification/bound failure, 2 input
error, 3 size-guard refusal.
"""

from __future__ import annotations

import argparse
import sys
import time
from dataclasses import dataclass

from .graphs import underlying_and_predicates
from .oracles import (
    InstanceTooLargeError,
    chromatic_number,
    dichromatic_number,
    independence_number_digraph,
    max_acyclic_set,
    maximum_independent_set,
    verify_dicoloring,
)
from .approx import (
    NotColorableCertificate,
    dicolor_ell,
    dicolor_two,
    ell_color_bound,
    two_color_bound,
    within_ell_bound,
)
from .decompose import PaletteTooSmallError
from .dense import (
    IndependencePromiseError,
    NotTwoDicolorableError,
    OddHeavySplitCertificate,
    dense_bound,
    dicolor_two_dense,
)
from .c3free import c3free_bound, dicolor_c3free, saturate_c3free
from .products import (
    ProductSpec,
    ProductVertexMap,
    eta_audit,
    k_fold_product,
    random_lex_product,
)
from .generators import gen_c3free_blowup, gen_planted
from . import formats

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_INPUT = 2
EXIT_TOO_LARGE = 3

PALETTE_CAP = 1 << 24  # refuse palettes too large to be meaningful at desk scale


@dataclass
class RunReport:
    """Machine-readable outcome of one ``color`` run."""

    algorithm: str
    n: int
    colors: int
    bound: float
    verified: bool
    elapsed: float
    seed: int = -1

    def lines(self) -> list[str]:
        bound = int(self.bound) if float(self.bound).is_integer() else self.bound
        return [
            f"algorithm={self.algorithm}",
            f"n={self.n}",
            f"colors={self.colors}",
            f"bound={bound}",
            f"verified={int(self.verified)}",
            f"elapsed={self.elapsed:.3f}",
            f"seed={self.seed}",
        ]


def _fail(message: str, code: int) -> int:
    print(f"error: {message}", file=sys.stderr)
    return code


def _read(path: str) -> str:
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _write(path: str, text: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text)


def _build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(prog="dicolor")
    top.add_argument("--threads", type=int, default=1,
                     help="worker bound for inner parallelism (advisory)")
    sub = top.add_subparsers(dest="command", required=True)

    color = sub.add_parser("color", help="run a coloring algorithm")
    color.add_argument("--algo", required=True,
                       choices=["two", "ell", "dense2", "c3free"])
    color.add_argument("--in", dest="infile", required=True)
    color.add_argument("--ell", type=int)
    color.add_argument("--alpha", type=int)
    color.add_argument("--out")
    color.add_argument("--promise", action="store_true",
                       help="treat a bound violation as a hard error")

    oracle = sub.add_parser("oracle", help="exact small-instance values")
    oracle.add_argument("--what", required=True,
                        choices=["dichromatic", "maxacyclic", "alpha", "chromatic"])
    oracle.add_argument("--in", dest="infile", required=True)

    verify = sub.add_parser("verify", help="check a coloring against a digraph")
    verify.add_argument("--graph", required=True)
    verify.add_argument("--coloring", required=True)

    gen = sub.add_parser("gen", help="seeded instance factories")
    gensub = gen.add_subparsers(dest="family", required=True)
    planted = gensub.add_parser("planted")
    planted.add_argument("--n", type=int, required=True)
    planted.add_argument("--ell", type=int, required=True)
    planted.add_argument("--p", type=float, default=0.5)
    planted.add_argument("--seed", type=int, required=True)
    planted.add_argument("--out", required=True)
    planted.add_argument("--coloring-out")
    product = gensub.add_parser("product")
    product.add_argument("--skeleton", required=True)
    product.add_argument("--sigma", help="comma-separated skeleton order")
    product.add_argument("--inner", help="inner digraph file (single layer)")
    product.add_argument("--fold", type=int, help="k-fold mode")
    product.add_argument("--seed", type=int, required=True)
    product.add_argument("--out", required=True)
    blowup = gensub.add_parser("c3blowup")
    blowup.add_argument("--depth", type=int, required=True)
    blowup.add_argument("--inner-size", type=int, default=2)
    blowup.add_argument("--seed", type=int, required=True)
    blowup.add_argument("--out", required=True)

    audit = sub.add_parser("audit", help="product consistency audit")
    auditsub = audit.add_subparsers(dest="check", required=True)
    eta = auditsub.add_parser("eta")
    eta.add_argument("--in", dest="infile", required=True)
    eta.add_argument("--skeleton", required=True)
    eta.add_argument("--eta", type=float, required=True)
    eta.add_argument("--mode", choices=["exact", "sample"], default="exact")
    eta.add_argument("--budget", type=int, default=1_000_000)
    eta.add_argument("--seed", type=int, default=0)
    return top


def run_command(argv: list[str]) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if args.threads < 1:
        return _fail("--threads must be positive", EXIT_INPUT)
    try:
        if args.command == "color":
            return _cmd_color(args)
        if args.command == "oracle":
            return _cmd_oracle(args)
        if args.command == "verify":
            return _cmd_verify(args)
        if args.command == "gen":
            return _cmd_gen(args)
        if args.command == "audit":
            return _cmd_audit(args)
    except FileNotFoundError as exc:
        return _fail(f"cannot read {exc.filename}", EXIT_INPUT)
    except formats.FormatError as exc:
        return _fail(str(exc), EXIT_INPUT)
    except InstanceTooLargeError as exc:
        return _fail(str(exc), EXIT_TOO_LARGE)
    except ValueError as exc:
        return _fail(str(exc), EXIT_INPUT)
    raise AssertionError("unhandled command")


def _cmd_color(args) -> int:
    D = formats.parse_digraph(_read(args.infile))
    n = D.n
    started = time.perf_counter()
    certificate = None
    try:
        if args.algo == "two":
            bound = two_color_bound(n)
            result = dicolor_two(D)
        elif args.algo == "ell":
            if args.ell is None or args.ell < 2:
                return _fail("--algo ell needs --ell >= 2", EXIT_INPUT)
            bound = ell_color_bound(args.ell, n)
            result = dicolor_ell(D, args.ell)
        elif args.algo == "dense2":
            if args.alpha is None or args.alpha < 1:
                return _fail("--algo dense2 needs --alpha >= 1", EXIT_INPUT)
            if dense_bound(args.alpha) > PALETTE_CAP:
                return _fail(
                    f"palette for alpha={args.alpha} exceeds the desk-scale cap",
                    EXIT_TOO_LARGE,
                )
            bound = dense_bound(args.alpha)
            result = dicolor_two_dense(D, args.alpha)
        else:  # c3free
            if args.alpha is None or args.alpha < 1:
                return _fail("--algo c3free needs --alpha >= 1", EXIT_INPUT)
            if c3free_bound(args.alpha) > PALETTE_CAP:
                return _fail(
                    f"palette for alpha={args.alpha} exceeds the desk-scale cap",
                    EXIT_TOO_LARGE,
                )
            bound = c3free_bound(args.alpha)
            sat = saturate_c3free(D)
            result = dicolor_c3free(sat, args.alpha, range(bound))
    except (NotTwoDicolorableError, IndependencePromiseError,
            PaletteTooSmallError) as exc:
        return _fail(f"promise violated: {exc}", EXIT_FAIL)
    elapsed = time.perf_counter() - started

    if isinstance(result, NotColorableCertificate):
        certificate = (
            f"not-{result.level}-dicolorable\n"
            f"subgraph {' '.join(str(v + 1) for v in sorted(result.vertices))}\n"
        )
    elif isinstance(result, OddHeavySplitCertificate):
        certificate = (
            "odd-heavy-cycle\n"
            f"cycle {' '.join(str(v + 1) for v in result.vertices)}\n"
        )
    if certificate is not None:
        cert_path = (args.out or args.infile) + ".cert"
        _write(cert_path, certificate)
        print(f"certificate={cert_path}")
        return _fail("algorithm returned a certificate instead of a coloring",
                     EXIT_FAIL)

    bad = verify_dicoloring(D, result)
    verified = bad is None
    colors = result.num_colors
    report = RunReport(
        algorithm=args.algo, n=n, colors=colors, bound=bound,
        verified=verified, elapsed=elapsed,
    )
    print("\n".join(report.lines()))
    if not verified:
        return _fail(f"internal verification failed: {bad}", EXIT_FAIL)
    if args.out:
        _write(args.out, formats.write_coloring(result.normalized()))
    if args.algo == "ell":
        ok = within_ell_bound(colors, args.ell, n)
    else:
        ok = colors <= bound
    if args.promise and not ok:
        return _fail(f"bound violated: {colors} colors > {bound}", EXIT_FAIL)
    return EXIT_OK


def _cmd_oracle(args) -> int:
    text = _read(args.infile)
    kind = formats.sniff_kind(text)
    if args.what == "dichromatic":
        if kind != "digraph":
            return _fail("dichromatic oracle needs a digraph file", EXIT_INPUT)
        value, _ = dichromatic_number(formats.parse_digraph(text))
        print(f"dichromatic={value}")
    elif args.what == "maxacyclic":
        if kind != "digraph":
            return _fail("maxacyclic oracle needs a digraph file", EXIT_INPUT)
        witness = max_acyclic_set(formats.parse_digraph(text))
        print(f"maxacyclic={witness.size}")
        print("witness=" + ",".join(str(v + 1) for v in sorted(witness.vertices)))
    elif args.what == "alpha":
        if kind == "digraph":
            value = independence_number_digraph(formats.parse_digraph(text))
        else:
            value = len(maximum_independent_set(formats.parse_graph(text)))
        print(f"alpha={value}")
    else:  # chromatic
        if kind == "digraph":
            G, _, _ = underlying_and_predicates(formats.parse_digraph(text))
        else:
            G = formats.parse_graph(text)
        value, _ = chromatic_number(G)
        print(f"chromatic={value}")
    return EXIT_OK


def _cmd_verify(args) -> int:
    D = formats.parse_digraph(_read(args.graph))
    coloring = formats.parse_coloring(_read(args.coloring))
    if len(coloring.colors) != D.n:
        return _fail("coloring size does not match the graph", EXIT_INPUT)
    bad = verify_dicoloring(D, coloring)
    if bad is None:
        print("verified=1")
        return EXIT_OK
    color, cycle = bad
    print("verified=0")
    print(f"color={color + 1}")
    print("cycle=" + ",".join(str(v + 1) for v in cycle.vertices))
    return EXIT_FAIL


def _cmd_gen(args) -> int:
    if args.family == "planted":
        D, planted = gen_planted(args.n, args.ell, args.p, args.seed)
        _write(args.out, formats.write_digraph(
            D, comment=f"planted ell={args.ell} p={args.p} seed={args.seed}"))
        if args.coloring_out:
            _write(args.coloring_out, formats.write_coloring(planted.normalized()))
        print(f"n={D.n}")
        print(f"m={D.arc_count}")
        return EXIT_OK
    if args.family == "product":
        G = formats.parse_graph(_read(args.skeleton))
        if args.sigma:
            sigma = tuple(int(tok) for tok in args.sigma.split(","))
        else:
            sigma = tuple(range(G.n))
        if (args.inner is None) == (args.fold is None):
            return _fail("product needs exactly one of --inner or --fold",
                         EXIT_INPUT)
        if args.fold is not None:
            spec = ProductSpec(skeleton=G, sigma=sigma, seed=args.seed, k=args.fold)
            try:
                D, _ = k_fold_product(spec)
            except ValueError as exc:
                if "over the cap" in str(exc):
                    return _fail(str(exc), EXIT_TOO_LARGE)
                raise
        else:
            H = formats.parse_digraph(_read(args.inner))
            try:
                D, _ = random_lex_product(G, sigma, H, args.seed)
            except ValueError as exc:
                if "over the cap" in str(exc):
                    return _fail(str(exc), EXIT_TOO_LARGE)
                raise
        _write(args.out, formats.write_digraph(D, comment=f"seed={args.seed}"))
        print(f"n={D.n}")
        print(f"m={D.arc_count}")
        return EXIT_OK
    # c3blowup
    try:
        D = gen_c3free_blowup(args.depth, args.seed, inner_size=args.inner_size)
    except ValueError as exc:
        if "over the cap" in str(exc):
            return _fail(str(exc), EXIT_TOO_LARGE)
        raise
    _write(args.out, formats.write_digraph(
        D, comment=f"c3blowup depth={args.depth} seed={args.seed}"))
    print(f"n={D.n}")
    print(f"m={D.arc_count}")
    return EXIT_OK


def _cmd_audit(args) -> int:
    product = formats.parse_digraph(_read(args.infile))
    G = formats.parse_graph(_read(args.skeleton))
    if G.n == 0 or product.n % G.n != 0:
        return _fail("product size is not a multiple of the skeleton size",
                     EXIT_INPUT)
    vmap = ProductVertexMap(n_skeleton=G.n, n_inner=product.n // G.n)
    mode = "sampled" if args.mode == "sample" else "exact"
    try:
        report = eta_audit(product, vmap, G, args.eta, mode=mode,
                           budget=args.budget, seed=args.seed)
    except ValueError as exc:
        if "over the budget" in str(exc):
            return _fail(str(exc), EXIT_TOO_LARGE)
        raise
    print(f"eta={report.eta}")
    print(f"mode={report.mode}")
    print(f"subset_size={report.subset_size}")
    print(f"checked={report.samples_checked}")
    print(f"violations={len(report.violations)}")
    print(f"certified={int(report.certifies_goodness)}")
    for (u, v), au, av in report.violations[:20]:
        au_s = ",".join(str(x + 1) for x in sorted(au))
        av_s = ",".join(str(x + 1) for x in sorted(av))
        print(f"violation edge={u + 1},{v + 1} au={au_s} av={av_s}")
    return EXIT_OK


def main() -> None:
    sys.exit(run_command(sys.argv[1:]))


if __name__ == "__main__":
    main()
