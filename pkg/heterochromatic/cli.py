"""
    Command-line front end

    Exit codes: 0 on success, 2 when an input is rejected, 3 when a
    verification suite reports a counterexample that brute force confirms,
    4 when a check failed but brute force disagrees with the failure.
"""

import argparse
import json
import sys
from typing import Any, Dict, List, Optional

import matplotlib.pyplot as plt

from .algorithms.partition_search import heterochromatic_number_exact
from .algorithms.transversal import double_transversal_search
from .geometry import PointSet
from .hypergraph import Hypergraph
from .matroid import GraphicMatroid
from .model_io import InstanceIO, dump_points
from .plane_trees import (
    WrongInteriorCount,
    conjecture_scan,
    enumerate_plane_spanning_trees,
    plane_tree_hypergraph,
)
from .plotting import plot_basis, plot_tree
from .rainbow import rainbow_basis, rainbow_tree_convex, rainbow_tree_one_interior
from .random_instances import KINDS, random_point_set
from .utils import HC_CAP, InstanceError, binomial2, bits, popcount
from .verification import SUITES, Verification

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_COUNTEREXAMPLE = 3
EXIT_UNCONFIRMED = 4


def parse_sizes(text: str) -> List[int]:
    """
        ``"3..6"`` or ``"3,5,7"``

        Examples
        --------
        >>> parse_sizes("3..6")
        [3, 4, 5, 6]
    """
    try:
        if ".." in text:
            low, high = text.split("..")
            return list(range(int(low), int(high) + 1))
        return [int(part) for part in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"Invalid sizes {text!r}; use 3..6 or 3,5,7")


def _emit(args: argparse.Namespace, document: Dict[str, Any], lines: List[str]) -> None:
    if args.json:
        print(json.dumps(document, indent=2))
    else:
        print("\n".join(lines))


def _predicted_hc(point_set: PointSet) -> Optional[int]:
    if point_set.interior_count > 1:
        return None
    return binomial2(point_set.n) - (point_set.n + point_set.interior_count) + 2


def _analyze_hypergraph(args: argparse.Namespace, hypergraph: Hypergraph) -> int:
    mask, exact = double_transversal_search(hypergraph, args.budget)
    tau = popcount(mask)
    hc = heterochromatic_number_exact(hypergraph, args.cap_nu) if hypergraph.nu <= args.cap_nu else None
    document = {
        "nu": hypergraph.nu,
        "hyperedges": len(hypergraph),
        "tau": tau,
        "tau_exact": exact,
        "transversal": list(bits(mask)),
        "bound": hypergraph.nu - tau + 2,
        "hc": hc,
    }
    _emit(args, document, [f"{key}: {value}" for key, value in document.items()])
    return EXIT_OK


def cmd_analyze(args: argparse.Namespace) -> int:
    instance = InstanceIO(args.points, "InstanceFile")
    if instance.kind == "hypergraph":
        return _analyze_hypergraph(args, instance.hypergraph())
    point_set = instance.point_set()
    trees = enumerate_plane_spanning_trees(point_set)
    hypergraph = plane_tree_hypergraph(point_set)
    mask, exact = double_transversal_search(hypergraph, args.budget)
    nu = point_set.edge_count
    hc = heterochromatic_number_exact(hypergraph, args.cap_nu) if nu <= args.cap_nu else None
    document = {
        "n": point_set.n,
        "hull": list(point_set.hull),
        "interior": point_set.interior_count,
        "plane_trees": len(trees),
        "tau": popcount(mask),
        "tau_exact": exact,
        "transversal": [list(point_set.edges[e]) for e in bits(mask)],
        "predicted_hc": _predicted_hc(point_set),
        "hc": hc,
    }
    lines = [f"{key}: {value}" for key, value in document.items()]
    if args.svg:
        fig, _ = plot_tree(point_set, path=args.svg)
        plt.close(fig)
    _emit(args, document, lines)
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    verification = Verification(cap_nu=args.cap_nu)
    report = verification.run(
        args.suite,
        sizes=args.sizes,
        instances=args.instances,
        trials=args.trials,
        seed=args.seed,
        n_procs=args.procs,
        debug=args.procs == 1,
        matroids=args.matroid,
        graphs=args.graph,
        exhaustive=args.exhaustive,
    )
    lines = [
        f"{record.descriptor}: {record.passed}/{record.attempted} ({record.wall_time:.2f} s)"
        for record in report
    ]
    lines.append(f"{report.suite}: {report.passed}/{report.attempted} checks passed")
    if report.confirmed:
        lines.append(f"{len(report.confirmed)} counterexample(s) confirmed by brute force")
    if report.unconfirmed:
        lines.append(f"{len(report.unconfirmed)} failed check(s) rejected by brute force")
    _emit(args, report.to_dict(), lines)
    if report.confirmed:
        return EXIT_COUNTEREXAMPLE
    return EXIT_OK if report.ok else EXIT_UNCONFIRMED


def cmd_find(args: argparse.Namespace) -> int:
    colouring = InstanceIO(args.colouring, "InstanceFile").colouring()
    instance = InstanceIO(args.instance, "InstanceFile")
    if args.target == "tree":
        point_set = instance.point_set()
        if point_set.interior_count == 0:
            tree = rainbow_tree_convex(point_set, colouring)
        elif point_set.interior_count == 1:
            tree = rainbow_tree_one_interior(point_set, colouring)
        else:
            raise WrongInteriorCount(1, point_set.interior_count)
        witness = [
            {"edge": list(point_set.edges[e]), "colour": colouring[e]} for e in tree.edge_ids()
        ]
        if args.svg:
            fig, _ = plot_tree(point_set, tree.edges, colouring, path=args.svg)
            plt.close(fig)
    else:
        matroid = instance.matroid()
        basis = rainbow_basis(matroid, colouring)
        witness = [{"element": e, "colour": colouring[e]} for e in bits(basis)]
        if args.svg and isinstance(matroid, GraphicMatroid):
            fig, _ = plot_basis(matroid, basis, colouring, path=args.svg)
            plt.close(fig)
    lines = [
        f"{item.get('edge', item.get('element'))} colour {item['colour']}" for item in witness
    ]
    _emit(args, {"target": args.target, "witness": witness}, lines)
    return EXIT_OK


def cmd_random(args: argparse.Namespace) -> int:
    point_set = random_point_set(args.kind, args.n, args.seed)
    text = dump_points(point_set)
    if args.output:
        with open(args.output, "w") as handle:
            handle.write(text + "\n")
    else:
        print(text)
    if args.svg:
        fig, _ = plot_tree(point_set, path=args.svg)
        plt.close(fig)
    return EXIT_OK


def cmd_conjecture_scan(args: argparse.Namespace) -> int:
    point_set = InstanceIO(args.points, "InstanceFile").point_set()
    report = conjecture_scan(point_set, budget=args.budget, cap_nu=args.cap_nu)
    document = report._asdict()
    document["witness"] = [list(point_set.edges[e]) for e in report.witness]
    lines = [f"{key}: {value}" for key, value in document.items()]
    _emit(args, document, lines)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="heterochromatic",
        description="Rainbow plane spanning trees, rainbow matroid bases and double transversals",
    )
    parser.add_argument("--seed", type=int, default=0, help="seed for every random choice")
    parser.add_argument(
        "--cap-nu", type=int, default=HC_CAP, help="largest hypergraph for exact h_c"
    )
    parser.add_argument("--svg", type=str, default=None, help="write a figure to this path")
    parser.add_argument("--json", action="store_true", help="print one JSON document")
    commands = parser.add_subparsers(dest="command", required=True)

    analyze = commands.add_parser("analyze", help="summarise a point set or a hypergraph")
    analyze.add_argument("points", help="points or hypergraph file")
    analyze.add_argument("--budget", type=int, default=None, help="transversal search node budget")
    analyze.set_defaults(handler=cmd_analyze)

    verify = commands.add_parser("verify", help="run a verification suite")
    verify.add_argument("suite", choices=SUITES)
    verify.add_argument("--sizes", "--n", type=parse_sizes, default=None)
    verify.add_argument("--instances", type=int, default=5, help="random instances per size")
    verify.add_argument("--trials", type=int, default=20, help="colourings per instance")
    verify.add_argument("--matroid", action="append", default=None, help="e.g. K4, U_3_6, GF2_3")
    verify.add_argument("--graph", action="append", default=None, help="e.g. P4, C5, K_2_3")
    verify.add_argument("--exhaustive", action="store_true")
    verify.add_argument("--procs", type=int, default=1, help="worker processes")
    verify.set_defaults(handler=cmd_verify)

    find = commands.add_parser("find", help="construct a rainbow witness")
    find.add_argument("target", choices=("tree", "basis"))
    find.add_argument("instance", help="points or matroid file")
    find.add_argument("colouring", help="colouring file")
    find.set_defaults(handler=cmd_find)

    random = commands.add_parser("random", help="generate a point set")
    random.add_argument("kind", choices=KINDS)
    random.add_argument("n", type=int)
    random.add_argument("--output", "-o", default=None)
    random.set_defaults(handler=cmd_random)

    scan = commands.add_parser("conjecture-scan", help="compare tau with n + i(P)")
    scan.add_argument("points", help="points file")
    scan.add_argument("--budget", type=int, default=None)
    scan.set_defaults(handler=cmd_conjecture_scan)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.handler(args)
    except (InstanceError, OSError) as error:
        print(f"error: {type(error).__name__}: {error}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
