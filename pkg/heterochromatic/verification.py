"""
    The main class for running verification suites
"""

import multiprocessing as mp
import re
import time
import warnings
from functools import partial
from typing import Callable, Dict, Iterator, List, Optional, Sequence, Tuple

import numpy as np

from . import oracles
from .algorithms.partition_search import heterochromatic_number_exact
from .algorithms.transversal import min_double_transversal
from .geometry import PointSet
from .hypergraph import canonical_colourings, has_rainbow_hyperedge, lower_bound_colouring
from .matroid import (
    GraphSpec,
    MatroidOracle,
    basis_hypergraph,
    complete_bipartite_graph,
    complete_graph,
    cycle_graph,
    gamma,
    make_graphic,
    make_linear,
    make_uniform,
    path_graph,
    star_graph,
    tau_bases,
)
from .plane_trees import (
    classify_tree,
    complement_plane_tree,
    enumerate_plane_spanning_trees,
    hull_transversal,
    interior_transversal,
    is_plane_spanning_tree,
    plane_tree_hypergraph,
)
from .rainbow import StarSwapFallbackWarning, rainbow_basis, rainbow_tree_convex, rainbow_tree_one_interior
from .random_instances import (
    random_colouring,
    random_connected_graph,
    random_convex,
    random_general,
    random_hypergraph,
    random_one_interior,
)
from .results import Counterexample, InstanceRecord, VerifyReport
from .utils import HC_CAP, InvariantViolation, binomial2, bits, mask_of, popcount

SUITES = (
    "lemma3",
    "lemma4",
    "urrutia",
    "thm5",
    "thm6",
    "thm7",
    "jiang-west",
    "gamma-tau",
    "bound",
    "corollary",
    "oracle",
)
DEFAULT_SIZES = {
    "lemma3": [3, 4, 5, 6, 7, 8],
    "lemma4": [4, 5, 6, 7, 8],
    "urrutia": [4, 5, 6, 7],
    "thm5": [3, 4, 5, 6],
    "thm6": [4, 5, 6],
    "jiang-west": [4, 5],
    "gamma-tau": [4, 5, 6],
    "bound": [4, 5],
    "oracle": [4, 5, 6, 7, 8],
}
DEFAULT_MATROIDS = ["K4", "U_2_4", "U_2_5", "U_3_5", "U_3_6", "GF2_3"]
DEFAULT_GRAPHS = ["P4", "C4", "C5", "K4", "K5", "K_2_3", "S3"]
GF2_COLUMNS = [[1, 0], [0, 1], [1, 1]]


def wrapper(x, func):
    return func(*x)


def named_graph(name: str) -> GraphSpec:
    """
        ``Kn``, ``Pn``, ``Cn``, ``Sk`` (star with ``k`` leaves) or ``K_a_b``
    """
    match = re.fullmatch(r"K_(\d+)_(\d+)", name)
    if match:
        return complete_bipartite_graph(int(match.group(1)), int(match.group(2)))
    match = re.fullmatch(r"([KPCS])(\d+)", name)
    if not match:
        raise ValueError(f"Unknown graph name {name!r}")
    build = {"K": complete_graph, "P": path_graph, "C": cycle_graph, "S": star_graph}
    return build[match.group(1)](int(match.group(2)))


def named_matroid(name: str) -> MatroidOracle:
    """
        A matroid from a short name: ``U_r_m``, ``GF2_3`` (the three non-zero
        vectors of GF(2)^2) or any ``named_graph`` name for its cycle matroid
    """
    if name == "GF2_3":
        return make_linear(GF2_COLUMNS, "gf(2)")
    match = re.fullmatch(r"U_(\d+)_(\d+)", name)
    if match:
        return make_uniform(int(match.group(1)), int(match.group(2)))
    return make_graphic(named_graph(name))


def _points(point_set: PointSet) -> List[List[int]]:
    return [[p.x, p.y] for p in point_set.points]


def _record(descriptor: str, attempted: int, failures: List[Counterexample], start: float) -> InstanceRecord:
    return InstanceRecord(
        descriptor, attempted, attempted - len(failures), failures, time.perf_counter() - start
    )


def _tree_confirmed(point_set: PointSet, tree: int, transversal: int) -> bool:
    """ The oracle agrees ``tree`` is a plane tree meeting ``transversal`` fewer than twice """
    naive = {mask_of(edges) for edges in oracles.naive_plane_trees(point_set)}
    return tree in naive and popcount(tree & transversal) < 2


def check_transversal(kind: str, n: int, seed: int) -> InstanceRecord:
    """ Every plane tree meets the hull (or hull plus interior) transversal twice """
    start = time.perf_counter()
    rng = np.random.RandomState(seed)
    if kind == "convex":
        point_set = random_convex(n, rng)
        q = hull_transversal(point_set)
    else:
        point_set = random_one_interior(n, rng)
        q = interior_transversal(point_set)
    trees = enumerate_plane_spanning_trees(point_set)
    failures = [
        Counterexample(
            {"points": _points(point_set), "tree": tree.pairs(point_set), "q": [point_set.edges[e] for e in bits(q.edges)]},
            _tree_confirmed(point_set, tree.edges, q.edges),
        )
        for tree in trees
        if popcount(tree.edges & q.edges) < 2
    ]
    return _record(f"{kind} n={n} seed={seed}", len(trees), failures, start)


def check_complement_trees(n: int, seed: int) -> InstanceRecord:
    """ No complement tree exists exactly for stars and geometric caterpillars """
    start = time.perf_counter()
    point_set = random_general(n, np.random.RandomState(seed))
    trees = enumerate_plane_spanning_trees(point_set)
    naive = None
    failures = []
    for tree in trees:
        shape = classify_tree(tree, point_set)
        blocked = complement_plane_tree(tree, point_set) is None
        if blocked == (shape.is_star or shape.is_geometric_caterpillar):
            continue
        if naive is None:
            naive = [mask_of(edges) for edges in oracles.naive_plane_trees(point_set)]
        naive_blocked = not any(other & tree.edges == 0 for other in naive)
        failures.append(
            Counterexample(
                {"points": _points(point_set), "tree": tree.pairs(point_set), "blocked": blocked},
                naive_blocked == blocked,
            )
        )
    return _record(f"general n={n} seed={seed}", len(trees), failures, start)


def check_rainbow_trees(kind: str, n: int, seed: int, trials: int) -> InstanceRecord:
    """
        Constructive rainbow trees on random colourings, plus the lower-bound
        colouring of the transversal having no rainbow tree
    """
    start = time.perf_counter()
    rng = np.random.RandomState(seed)
    if kind == "convex":
        point_set = random_convex(n, rng)
        q = hull_transversal(point_set)
        colours = binomial2(n) - n + 2
        construct = rainbow_tree_convex
    else:
        point_set = random_one_interior(n, rng)
        q = interior_transversal(point_set)
        colours = binomial2(n) - n + 1
        construct = rainbow_tree_one_interior
    failures = []
    hypergraph = plane_tree_hypergraph(point_set)
    blocker = lower_bound_colouring(hypergraph, q.as_double_transversal())
    if has_rainbow_hyperedge(hypergraph, blocker) is not None:
        failures.append(
            Counterexample(
                {"points": _points(point_set), "colours": list(blocker.assignment)},
                oracles.rainbow_plane_tree_exists(point_set, blocker),
            )
        )
    fallbacks = 0
    for _ in range(trials):
        colouring = random_colouring(point_set.edge_count, colours, rng)
        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter("always", StarSwapFallbackWarning)
            try:
                tree = construct(point_set, colouring)
                error = None
            except InvariantViolation as violation:
                tree, error = None, str(violation)
        fallbacks += sum(issubclass(w.category, StarSwapFallbackWarning) for w in caught)
        if tree is not None and is_plane_spanning_tree(point_set, tree.edges) and colouring.is_rainbow(tree.edges):
            continue
        failures.append(
            Counterexample(
                {"points": _points(point_set), "colours": list(colouring.assignment), "error": error},
                not oracles.rainbow_plane_tree_exists(point_set, colouring),
            )
        )
    descriptor = f"{kind} n={n} seed={seed} fallbacks={fallbacks}"
    return _record(descriptor, trials + 1, failures, start)


def _matroid_colourings(matroid: MatroidOracle, k: int, seed: int, trials: int, exhaustive: bool):
    if exhaustive:
        return canonical_colourings(matroid.ground_size, k)
    rng = np.random.RandomState(seed)
    return (random_colouring(matroid.ground_size, k, rng) for _ in range(trials))


def check_rainbow_basis(name: str, seed: int, trials: int, exhaustive: bool) -> InstanceRecord:
    start = time.perf_counter()
    matroid = named_matroid(name)
    tau = tau_bases(matroid)
    k = matroid.ground_size - tau + 2
    attempted = 0
    failures = []
    for colouring in _matroid_colourings(matroid, k, seed, trials, exhaustive):
        attempted += 1
        try:
            basis = rainbow_basis(matroid, colouring, tau=tau)
            error = None
        except InvariantViolation as violation:
            basis, error = None, str(violation)
        if basis is not None and matroid.is_basis(basis) and colouring.is_rainbow(basis):
            continue
        failures.append(
            Counterexample(
                {"matroid": name, "colours": list(colouring.assignment), "error": error},
                not oracles.rainbow_basis_exists(matroid, colouring),
            )
        )
    mode = "exhaustive" if exhaustive else f"seed={seed}"
    return _record(f"{name} tau={tau} k={k} {mode}", attempted, failures, start)


def check_jiang_west(n: int, seed: int) -> InstanceRecord:
    """ Spanning trees of ``K_n``: tau = 2n - 3 and h_c = C(n - 2, 2) + 2 """
    start = time.perf_counter()
    hypergraph = basis_hypergraph(make_graphic(complete_graph(n)))
    _, tau = min_double_transversal(hypergraph)
    hc = heterochromatic_number_exact(hypergraph)
    failures = []
    if tau != 2 * n - 3:
        failures.append(Counterexample({"n": n, "tau": tau}, oracles.naive_tau(hypergraph) != 2 * n - 3))
    if hc != binomial2(n - 2) + 2:
        failures.append(
            Counterexample(
                {"n": n, "hc": hc},
                oracles.heterochromatic_number_naive(hypergraph) != binomial2(n - 2) + 2,
            )
        )
    return _record(f"K{n}", 2, failures, start)


def check_gamma_tau(name: Optional[str], n: int, seed: int) -> InstanceRecord:
    start = time.perf_counter()
    if name is None:
        graph = random_connected_graph(n, 0.5, np.random.RandomState(seed))
        name = f"G(n={n}, seed={seed})"
    else:
        graph = named_graph(name)
    value = gamma(graph)
    tau = tau_bases(make_graphic(graph))
    failures = []
    if value != tau:
        naive = oracles.naive_tau(basis_hypergraph(make_graphic(graph)))
        failures.append(
            Counterexample({"graph": name, "edges": [list(e) for e in graph.edges], "gamma": value, "tau": tau}, naive != value)
        )
    return _record(name, 1, failures, start)


def check_bound(n: int, seed: int, cap_nu: int) -> InstanceRecord:
    """ The monochromatic transversal colouring leaves no rainbow plane tree """
    start = time.perf_counter()
    point_set = random_general(n, np.random.RandomState(seed))
    hypergraph = plane_tree_hypergraph(point_set)
    transversal, tau = min_double_transversal(hypergraph)
    colouring = lower_bound_colouring(hypergraph, transversal)
    attempted = 1
    failures = []
    if has_rainbow_hyperedge(hypergraph, colouring) is not None:
        failures.append(
            Counterexample(
                {"points": _points(point_set), "colours": list(colouring.assignment)},
                oracles.rainbow_plane_tree_exists(point_set, colouring),
            )
        )
    if hypergraph.nu <= cap_nu:
        attempted += 1
        hc = heterochromatic_number_exact(hypergraph, cap_nu)
        if hc < hypergraph.nu - tau + 2:
            failures.append(
                Counterexample(
                    {"points": _points(point_set), "hc": hc, "tau": tau},
                    oracles.heterochromatic_number_naive(hypergraph) < hypergraph.nu - tau + 2,
                )
            )
    return _record(f"general n={n} seed={seed} i={point_set.interior_count}", attempted, failures, start)


def check_corollary(name: str, seed: int, cap_nu: int) -> InstanceRecord:
    """ The basis hypergraph attains the lower bound: h_c = m - tau + 2 """
    start = time.perf_counter()
    matroid = named_matroid(name)
    hypergraph = basis_hypergraph(matroid)
    _, tau = min_double_transversal(hypergraph)
    hc = heterochromatic_number_exact(hypergraph, cap_nu)
    failures = []
    expected = matroid.ground_size - tau + 2
    if hc != expected:
        failures.append(
            Counterexample(
                {"matroid": name, "hc": hc, "tau": tau},
                oracles.heterochromatic_number_naive(hypergraph) != expected,
            )
        )
    return _record(f"{name} tau={tau} hc={hc}", 1, failures, start)


def check_oracle(nu: int, seed: int) -> InstanceRecord:
    """ Partition search agrees with the naive enumeration on a random hypergraph """
    start = time.perf_counter()
    rng = np.random.RandomState(seed)
    hypergraph = random_hypergraph(nu, int(rng.randint(1, 2 * nu + 1)), rng)
    exact = heterochromatic_number_exact(hypergraph)
    naive = oracles.heterochromatic_number_naive(hypergraph)
    failures = []
    if exact != naive:
        failures.append(Counterexample({**hypergraph.to_dict(), "exact": exact, "naive": naive}, True))
    return _record(f"nu={nu} seed={seed} edges={len(hypergraph)}", 1, failures, start)


class Verification:
    """
        Runs the verification suites

        Parameters
        ----------
        cap_nu: int, optional
            Exact heterochromatic numbers are only computed for hypergraphs
            with at most this many vertices. Defaults to ``HC_CAP``.

        Attributes
        ----------
        report: VerifyReport
            The report of the last run, ``None`` before the first run.
    """

    def __init__(self, cap_nu: int = HC_CAP) -> None:
        self.cap_nu = cap_nu
        self._report: Optional[VerifyReport] = None

    def __repr__(self) -> str:
        return f"<Verification cap_nu={self.cap_nu} report={self._report}>"

    @property
    def report(self) -> Optional[VerifyReport]:
        if self._report is None:
            warnings.warn("Run a suite before requesting its report.", Warning)
        return self._report

    def _instances(
        self,
        suite: str,
        sizes: Sequence[int],
        instances: int,
        trials: int,
        matroids: Sequence[str],
        graphs: Sequence[str],
        exhaustive: bool,
        seeds: Iterator[int],
    ) -> Tuple[Callable, List[tuple], List[int]]:
        """ The check function, its argument tuples and the seed of each instance """
        args: List[tuple] = []
        used: List[int] = []
        if suite in ("thm7", "corollary"):
            for name in matroids:
                used.append(next(seeds))
                if suite == "thm7":
                    args.append((name, used[-1], trials, exhaustive))
                else:
                    args.append((name, used[-1], self.cap_nu))
            return (check_rainbow_basis if suite == "thm7" else check_corollary), args, used
        if suite == "jiang-west":
            for n in sizes:
                used.append(next(seeds))
                args.append((n, used[-1]))
            return check_jiang_west, args, used
        if suite == "gamma-tau":
            for name in graphs:
                used.append(next(seeds))
                args.append((name, 0, used[-1]))

        kinds = {"lemma3": "convex", "lemma4": "one-interior", "thm5": "convex", "thm6": "one-interior"}
        for n in sizes:
            for _ in range(instances):
                used.append(next(seeds))
                if suite in ("lemma3", "lemma4"):
                    args.append((kinds[suite], n, used[-1]))
                elif suite in ("thm5", "thm6"):
                    args.append((kinds[suite], n, used[-1], trials))
                elif suite == "bound":
                    args.append((n, used[-1], self.cap_nu))
                elif suite == "gamma-tau":
                    args.append((None, n, used[-1]))
                else:
                    args.append((n, used[-1]))
        functions: Dict[str, Callable] = {
            "lemma3": check_transversal,
            "lemma4": check_transversal,
            "urrutia": check_complement_trees,
            "thm5": check_rainbow_trees,
            "thm6": check_rainbow_trees,
            "gamma-tau": check_gamma_tau,
            "bound": check_bound,
            "oracle": check_oracle,
        }
        return functions[suite], args, used

    def run(
        self,
        suite: str,
        sizes: Optional[Sequence[int]] = None,
        instances: int = 5,
        trials: int = 20,
        seed: int = 0,
        n_procs: Optional[int] = 1,
        debug: bool = False,
        matroids: Optional[Sequence[str]] = None,
        graphs: Optional[Sequence[str]] = None,
        exhaustive: bool = False,
    ) -> VerifyReport:
        """
            Run a suite

            Parameters
            ----------
            suite: str
                One of ``SUITES``.
            sizes: Sequence[int], optional
                Instance sizes (points, vertices or hypergraph vertices).
                Each suite has its own defaults.
            instances: int, optional
                Random instances per size. The default value is 5.
            trials: int, optional
                Random colourings per instance for the constructive suites.
                The default value is 20.
            seed: int, optional
                The seed used to generate instance seeds.
                The default value is 0.
            n_procs: int, optional
                The number of cpu cores to use.
                Use ``None`` to automatically detect number of cpu cores.
                The default value is 1.
            debug: bool, optional
                Run in the current process with the builtin ``map``.
            matroids: Sequence[str], optional
                Matroid names for ``thm7`` and ``corollary``.
            graphs: Sequence[str], optional
                Named graphs checked by ``gamma-tau`` besides random ones.
            exhaustive: bool, optional
                ``thm7`` tries every canonical colouring instead of ``trials``
                random ones.

            Returns
            -------
            VerifyReport
                Records come in instance order regardless of ``n_procs``.

            Raises
            ------
            TypeError
                If ``seed`` is not an integer.
            ValueError
                For an unknown suite.
        """
        if not isinstance(seed, int):
            raise TypeError("Seed should be of type int")
        if suite not in SUITES:
            raise ValueError(f"Unknown suite {suite!r}; choose from {', '.join(SUITES)}")
        sizes = list(sizes) if sizes is not None else DEFAULT_SIZES.get(suite, [])
        matroids = list(matroids) if matroids is not None else DEFAULT_MATROIDS
        graphs = list(graphs) if graphs is not None else DEFAULT_GRAPHS
        total = len(sizes) * instances + len(matroids) + len(graphs)
        np.random.seed(seed)
        seeds = iter(int(s) for s in np.random.randint(low=0, high=1e7, size=total))

        check, args, used = self._instances(
            suite, sizes, instances, trials, matroids, graphs, exhaustive, seeds
        )
        check_func = partial(wrapper, func=check)
        if debug:
            records = list(map(check_func, args))
        else:
            with mp.Pool(processes=n_procs) as pool:
                records = pool.map(check_func, args)
        self._report = VerifyReport(suite, records, used)
        return self._report
