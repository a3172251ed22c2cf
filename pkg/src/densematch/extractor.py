"""Randomised extraction of a size-``t`` matching with few non-adjacent edge
pairs from a graph whose independence number is at most 2.

Pipeline: fix parity by deleting vertex 0 when the order is odd, derive the
conditioning threshold and probability parameters from the order-to-size
ratio, rejection-sample a uniform pair-partition that contains many graph
edges, and pick ``t`` of those edges uniformly.  Repeating over independent
seeds and keeping the best trial turns the expectation guarantee into a
concrete matching.
"""

import math
from dataclasses import dataclass

import numpy as np

from .errors import ParameterError, SamplingFailure
from .graphs import Graph, Matching, delete_vertex, is_alpha_at_most_2
from .oracles import nonadjacent_pairs
from .sampling import DEFAULT_MAX_ATTEMPTS, sample_edge_heavy_partition


@dataclass(frozen=True)
class ExtractionParams:
    """Derived knobs of one extraction run.

    ratio
        Vertex count over matching size (``n/t``); must be at least 4.
    slack
        Concentration slack per matching slot; needs ``slack**2 > ratio/t``
        and ``slack <= ratio/2 - 3/2``.
    margin
        Guaranteed partition edges per slot, ``(ratio-1)/2 - slack``; the
        slack cap makes this at least 1.
    accept_floor
        Lower bound ``1 - ratio/(slack**2 * t)`` on the acceptance rate of
        the rejection step; positive by the slack floor.
    pick_cap
        Upper bound ``1/margin`` on any single edge's selection probability.
    threshold
        Integer edge demand ``ceil(margin * t)`` placed on a partition.
    pair_bound
        Cap on the expected number of non-adjacent matching-edge pairs,
        ``pick_cap**2 * ratio*t * (t-1)**3
        / (8 * accept_floor * (ratio*t - 1) * (ratio*t - 3))``.
    """

    ratio: float
    t: int
    slack: float
    margin: float
    accept_floor: float
    pick_cap: float
    threshold: int
    pair_bound: float


@dataclass(frozen=True)
class TrialReport:
    """Per-trial record of one extraction."""

    seed: int
    rejection_attempts: int
    intersection_size: int
    nonadjacent_pairs: int
    bound: float
    within_bound: bool


def optimal_slack(ratio: float, t: int) -> float:
    """Slack minimising the pair bound at fixed ``(ratio, t)``.

    ``(ratio*(ratio-1)/(2*t))**(1/3)`` is the exact stationary point of the
    bound as a function of the slack.
    """
    if ratio <= 1:
        raise ParameterError(f"ratio must exceed 1 (got {ratio})")
    if t < 1:
        raise ParameterError(f"t must be at least 1 (got {t})")
    return (ratio * (ratio - 1.0) / (2.0 * t)) ** (1.0 / 3.0)


def derive_params(ratio: float, t: int, slack: float) -> ExtractionParams:
    """Check the parameter hypotheses and evaluate every derived value.

    Raises :class:`ParameterError` naming the violated inequality; the usual
    culprit is a ``t`` too small for the requested ratio.
    """
    if t < 1:
        raise ParameterError(f"t must be at least 1 (got {t})")
    if ratio < 4:
        raise ParameterError(f"ratio must be at least 4 (got {ratio:.6g})")
    if not slack * slack > ratio / t:
        raise ParameterError(
            f"slack^2 must exceed ratio/t ({slack * slack:.6g} <= {ratio / t:.6g})")
    if not slack <= ratio / 2 - 1.5:
        raise ParameterError(
            f"slack must be at most ratio/2 - 3/2 ({slack:.6g} > {ratio / 2 - 1.5:.6g})")
    margin = (ratio - 1.0) / 2.0 - slack
    accept_floor = 1.0 - ratio / (slack * slack * t)
    pick_cap = 1.0 / margin
    nt = ratio * t
    pair_bound = (pick_cap * pick_cap * nt * (t - 1) ** 3) / (8.0 * accept_floor * (nt - 1.0) * (nt - 3.0))
    return ExtractionParams(ratio, t, slack, margin, accept_floor, pick_cap,
                            math.ceil(margin * t), pair_bound)


def prepare_extraction(g_raw: Graph, t: int) -> tuple[Graph, ExtractionParams]:
    """Parity-fix the graph and derive parameters at the optimal slack.

    Vertex 0 is the deterministic choice when one vertex must go; the ratio
    is recomputed from the remaining order, so a graph larger than strictly
    necessary only improves the bound.
    """
    g = delete_vertex(g_raw, 0) if g_raw.n % 2 else g_raw
    ratio = g.n / t
    return g, derive_params(ratio, t, optimal_slack(ratio, t))


def trial_seed(master_seed: int, index: int) -> int:
    """Deterministic 64-bit seed for trial ``index`` under ``master_seed``."""
    if master_seed < 0 or index < 0:
        raise ValueError("seeds and trial indices must be nonnegative")
    ss = np.random.SeedSequence([int(master_seed), int(index)])
    return int(ss.generate_state(1, np.uint64)[0])


def _uniform_subset(items: list, k: int, rng: np.random.Generator) -> list:
    """Uniform ``k``-subset by partial Fisher-Yates shuffle."""
    pool = list(items)
    if k > len(pool):
        raise ValueError(f"cannot pick {k} items from {len(pool)}")
    for i in range(k):
        j = int(rng.integers(i, len(pool)))
        pool[i], pool[j] = pool[j], pool[i]
    return pool[:k]


def extract_once(g: Graph, params: ExtractionParams, rng: np.random.Generator,
                 seed: int = 0, max_attempts: int = DEFAULT_MAX_ATTEMPTS) -> tuple[Matching, TrialReport]:
    """Run one extraction trial on ``g`` with prepared parameters.

    ``g`` must have even order equal to ``round(ratio * t)`` and independence
    number at most 2; :func:`extract_best` checks the latter once instead of
    per trial.  ``seed`` only labels the report.  The accepted partition's
    edges form a matching, so any ``t`` of them do as well; each edge is
    selected with probability ``t / intersection_size <= pick_cap``.
    """
    t = params.t
    if g.n % 2:
        raise ValueError("graph order must be even (delete a vertex first)")
    if g.n != round(params.ratio * t):
        raise ValueError(f"graph order {g.n} does not match ratio*t = {params.ratio * t:.6g}")
    partition, attempts = sample_edge_heavy_partition(g, params.threshold, max_attempts, rng)
    in_graph = [p for p in partition.pairs if g.has_edge(*p)]
    matching = Matching(tuple(sorted(_uniform_subset(in_graph, t, rng))))
    count = nonadjacent_pairs(g, matching)
    report = TrialReport(seed, attempts, len(in_graph), count,
                         params.pair_bound, count <= params.pair_bound)
    return matching, report


def extract_best(g_raw: Graph, c: float, t: int, trials: int, master_seed: int,
                 max_attempts: int = DEFAULT_MAX_ATTEMPTS) -> tuple[Matching, list[TrialReport]]:
    """Best of ``trials`` independent extraction trials.

    Per-trial generators are seeded from ``(master_seed, index)``, so trials
    are order-independent and could run concurrently; the winner minimises
    ``(nonadjacent pairs, trial index)``, a reduction that does not depend on
    evaluation order.  The returned matching uses the vertex ids of
    ``g_raw`` even when the parity fix deleted vertex 0.  Raises an
    aggregated :class:`SamplingFailure` only if every trial exhausts its
    attempts.
    """
    if not c > 4:
        raise ValueError(f"c must exceed 4 (got {c})")
    if t < 1:
        raise ValueError("t must be at least 1")
    if trials < 1:
        raise ValueError("trials must be at least 1")
    if g_raw.n + 1e-9 < c * t:
        raise ValueError(f"graph order {g_raw.n} is below c*t = {c * t:.6g}")
    if not is_alpha_at_most_2(g_raw):
        raise ValueError("graph has three pairwise non-adjacent vertices")
    parity_fixed = g_raw.n % 2 == 1
    g, params = prepare_extraction(g_raw, t)
    best_key: tuple[int, int] | None = None
    best_matching: Matching | None = None
    reports: list[TrialReport] = []
    failed = 0
    for index in range(trials):
        seed = trial_seed(master_seed, index)
        rng = np.random.default_rng(seed)
        try:
            matching, report = extract_once(g, params, rng, seed=seed, max_attempts=max_attempts)
        except SamplingFailure:
            failed += 1
            continue
        reports.append(report)
        key = (report.nonadjacent_pairs, index)
        if best_key is None or key < best_key:
            best_key = key
            best_matching = matching
    if best_matching is None:
        raise SamplingFailure(failed * max_attempts,
                              f"all {trials} trials exhausted {max_attempts} attempts each")
    if parity_fixed:
        # deletion remapped ids w > 0 to w - 1; shift back to the input's ids
        best_matching = Matching(tuple((u + 1, v + 1) for u, v in best_matching.edges))
    return best_matching, reports
