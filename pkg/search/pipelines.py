# -------------------------------------------------
# End-to-end constructions: the two 291 codes, the single-T and rotated
# expurgation pipelines, and the fano-style pipeline with its per-point
# clique choices and record search.
# -------------------------------------------------

import logging
import random
import time
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict, List, Mapping, Optional, Sequence, Tuple, Union

import networkx as nx
from tqdm import tqdm

from expurgation.cosets import (PolyCoset, RemovedSet, all_rotated_cosets, free_lines,
                                removed_set)
from expurgation.new_planes import (NewPlane, candidate_new_planes, coset_induced_planes,
                                    group_by_anchor, map_new_plane, plane_footprint, singer_map)
from field.gf16 import exp, point_vector
from geometry.packing import augmentation_planes, kirkman_packing, sigma_orbit_planes, sigma_packing
from geometry.solid import default_anchor_points
from graph.compat_graph import CompatGraph
from helpers.errors import InvalidConstructionError, SearchBudgetExceeded
from mrd.gabidulin import lmrd_code
from search.augment import (AugmentResult, SearchConfig, attainment_statistics, exact_augment,
                            greedy_pass, line_meeting_pool, packing_anchors, plane_graph)
from search.clique import enumerate_max_cliques, max_clique
from space.subspace import Subspace
from space.subspace_code import SubspaceCode

logger = logging.getLogger(__name__)

EDGE_MODELS = ("planes", "literal")
SINGLE_STRATEGIES = ("packing", "exact")
FANO_POINTS = 15
POINT_OUTSIDE_S = 6


def packed291() -> SubspaceCode:
    """Lifted code plus the 35 planes <p_i, L> over a searched line packing."""
    planes = augmentation_planes(default_anchor_points(), kirkman_packing())
    return lmrd_code().extended(planes, "packed291")


def sigma291() -> SubspaceCode:
    """Lifted code plus the 35 orbit planes E(i, j)."""
    return lmrd_code().extended(sigma_orbit_planes(), "sigma291")


def expurgate(removed: RemovedSet, new_planes: Sequence[NewPlane], provenance: str) -> SubspaceCode:
    """@returns The lifted code without the removed codewords, plus the new planes."""
    code = lmrd_code().without(removed.words(), provenance)
    return code.extended([n.plane for n in new_planes], provenance)


@lru_cache(maxsize=None)
def _induced(coset: PolyCoset) -> Tuple[NewPlane, ...]:
    return tuple(coset_induced_planes(coset))


@dataclass(frozen=True)
class CosetInfo:
    coset: PolyCoset
    planes: Tuple[NewPlane, ...]
    footprint: frozenset
    self_compatible: bool


def coset_info(coset: PolyCoset) -> CosetInfo:
    planes = _induced(coset)
    footprint = plane_footprint(planes)
    return CosetInfo(coset, planes, footprint, len(footprint) == POINT_OUTSIDE_S * len(planes))


def coset_graph(cosets: Sequence[PolyCoset], edge_model: str = "planes") -> CompatGraph:
    """
    Graph on cosets. Edge iff the member sets are disjoint and, in the "planes" model,
    the new planes induced by the two cosets are pairwise compatible. Two new planes can
    only clash through a common anchor and a further common point, which is what the
    footprints record; cosets clashing with themselves stay isolated.

    @param cosets: Cosets f + T v.
    @param edge_model: "planes" or "literal" (disjointness only).
    """
    if edge_model not in EDGE_MODELS:
        raise InvalidConstructionError(f"unknown coset edge model '{edge_model}'")
    if edge_model == "literal":
        return CompatGraph.fromPredicate(cosets, lambda a, b: a.members.isdisjoint(b.members))
    infos = [coset_info(c) for c in cosets]
    g = CompatGraph(cosets)
    for i, a in enumerate(infos):
        if not a.self_compatible:
            continue
        for j in range(i + 1, len(infos)):
            b = infos[j]
            if b.self_compatible and a.coset.members.isdisjoint(b.coset.members) \
                    and a.footprint.isdisjoint(b.footprint):
                g.addEdge(i, j)
    logger.info("coset graph: %d cosets, %d edges", g.n, g.edgeCount())
    return g


def single_cosets() -> List[PolyCoset]:
    """The 32 cosets of T itself."""
    return [c for c in all_rotated_cosets() if c.rotor == 1]


def candidate_count_report(cosets: Sequence[PolyCoset]) -> Dict[str, int]:
    """
    New planes induced coset by coset versus the generic generator on the union of
    their free lines.
    """
    removed = RemovedSet(tuple(cosets), "rotated")
    return {"cosets": len(cosets),
            "induced": sum(len(_induced(c)) for c in cosets),
            "generic": len(candidate_new_planes(free_lines(removed)))}


def single_expurgation() -> SubspaceCode:
    """Removes {u^2 x + u x^2 : u in GF(16)} and adds its 28 new planes: a (7, 268, 4; 3) code."""
    removed = removed_set("single")
    planes = candidate_new_planes(free_lines(removed))
    logger.info("single-T expurgation: -%d +%d", len(removed), len(planes))
    return expurgate(removed, planes, "single268")


def single_augmentation(code: SubspaceCode) -> List[Subspace]:
    """
    The 35 planes <p_i, L> over the sigma packing (the Kirkman packing if that fails),
    with anchors p_i searched so that none of them shares a line with code.
    """
    for packing in (sigma_packing(), kirkman_packing()):
        anchors = packing_anchors(code, packing)
        if anchors is not None:
            logger.info("packing anchors: %s", [p.rows[0] for p in anchors])
            return augmentation_planes(anchors, packing)
    raise InvalidConstructionError(f"no anchor choice fits a line packing to {code.provenance}")


def single_pipeline(augment: bool = True, strategy: str = "packing",
                    time_budget: Optional[float] = None) -> SubspaceCode:
    """
    The 268 code and, with augment, the 303 code obtained by adding the 35 packing planes.

    @param strategy: "packing", or "exact" for an exact clique search over all line-meeting
                     planes instead; the exact search is not known to finish in reasonable time.
    @param time_budget: Seconds for the exact search.
    """
    if strategy not in SINGLE_STRATEGIES:
        raise InvalidConstructionError(f"unknown single-T strategy '{strategy}'")
    code = single_expurgation()
    if not augment:
        return code
    if strategy == "exact":
        final = exact_augment(code, time_budget=time_budget).final
        return SubspaceCode(final.params, final.words, f"single{final.size}")
    planes = single_augmentation(code)
    return code.extended(planes, f"single{code.size + len(planes)}")


def rotated_pipeline(augment: bool = True, time_budget: Optional[float] = None,
                     edge_model: str = "planes") -> SubspaceCode:
    """
    Maximum clique of the 480-coset graph, removal of its cosets in exchange for their
    induced new planes (280 for a 4-clique), then exact augmentation (314).
    """
    cosets = all_rotated_cosets()
    size, witness = max_clique(coset_graph(cosets, edge_model), time_budget)
    chosen = [cosets[i] for i in witness]
    logger.info("coset clique of size %d: %s", size, chosen)
    removed = RemovedSet(tuple(chosen), "rotated")
    planes = [n for c in chosen for n in _induced(c)]
    code = expurgate(removed, planes, f"rotated{256 - len(removed) + len(planes)}")
    if not augment:
        return code
    result = exact_augment(code, time_budget=time_budget)
    return SubspaceCode(result.final.params, result.final.words, f"rotated{result.final.size}")


@dataclass(frozen=True)
class FanoPoint:
    """The new planes through one anchor (0, a^exponent) of S and their maximum cliques."""
    exponent: int
    anchor: int
    planes: Tuple[NewPlane, ...]
    graph: CompatGraph = field(compare=False)
    cliques: Tuple[Tuple[NewPlane, ...], ...]


@lru_cache(maxsize=None)
def fano_point_graphs(u: Optional[int] = None) -> Tuple[FanoPoint, ...]:
    """
    Per-anchor compatibility graphs of the fano-style candidates: the new planes each removed
    coset induces from its own free lines (14 per anchor). Running the generic generator
    on the union of all free lines instead gives 23 per anchor, whose maximum cliques
    include mixtures that clash across cosets. The maximum cliques at
    the base anchor (0, 1) are enumerated once and carried to anchor (0, a^i) by the map
    (x, y) -> (x, a^i y), so clique index c means the same choice at every anchor.

    @param u: Trace-one element of the removed set (default: the smallest).
    @returns 15 FanoPoints ordered by exponent.
    """
    removed = removed_set("fano", u=u)
    groups = group_by_anchor(n for c in removed.cosets for n in _induced(c))
    base_planes = groups.get(point_vector(0, 1), [])
    base_graph = plane_graph(base_planes)
    base_cliques = [tuple(base_graph.labels[i] for i in c) for c in enumerate_max_cliques(base_graph)]
    points = []
    for i in range(FANO_POINTS):
        rotor = exp(i)
        anchor = point_vector(0, rotor)
        planes = tuple(groups.get(anchor, []))
        graph = plane_graph(planes)
        table = singer_map(rotor)
        index = {n: j for j, n in enumerate(graph.labels)}
        cliques = []
        for c in base_cliques:
            image = tuple(sorted(map_new_plane(n, table) for n in c))
            if not all(n in index for n in image) or not graph.isClique([index[n] for n in image]):
                raise InvalidConstructionError(f"transported clique is not a clique at anchor a^{i}")
            cliques.append(image)
        points.append(FanoPoint(i, anchor, planes, graph, tuple(cliques)))
    logger.info("fano points: %s planes, %d maximum cliques of size %d per point",
                sorted({len(p.planes) for p in points}), len(base_cliques),
                len(base_cliques[0]) if base_cliques else 0)
    return tuple(points)


def singer_isomorphism_check(points: Sequence[FanoPoint] = None) -> bool:
    """
    @returns True if every per-point graph is the image of the base graph under its
             Singer map (bijection on planes preserving adjacency), cross-checked with networkx.
    """
    points = points or fano_point_graphs()
    base = points[0]
    base_nx = base.graph.toNetworkx()
    for p in points:
        table = singer_map(exp(p.exponent))
        index = {n: j for j, n in enumerate(p.graph.labels)}
        images = [map_new_plane(n, table) for n in base.graph.labels]
        if sorted(images) != sorted(p.graph.labels):
            return False
        for a in range(base.graph.n):
            for b in range(a + 1, base.graph.n):
                if base.graph.hasEdge(a, b) != p.graph.hasEdge(index[images[a]], index[images[b]]):
                    return False
        if not nx.is_isomorphic(base_nx, p.graph.toNetworkx()):
            return False
    return True


def _normalise_choice(choice: Union[Sequence[int], Mapping[int, int]], points: Sequence[FanoPoint]) -> List[int]:
    if isinstance(choice, Mapping):
        by_anchor = dict(choice)
        choice = [by_anchor.get(p.anchor, 0) for p in points]
    choice = list(choice)
    if len(choice) != len(points):
        raise InvalidConstructionError(f"need {len(points)} clique indices, got {len(choice)}")
    for p, c in zip(points, choice):
        if not 0 <= c < len(p.cliques):
            raise InvalidConstructionError(f"clique index {c} out of range at anchor a^{p.exponent}")
    return choice


def chosen_planes(choice: Sequence[int], points: Sequence[FanoPoint] = None) -> List[Subspace]:
    points = points or fano_point_graphs()
    choice = _normalise_choice(choice, points)
    return [n.plane for p, c in zip(points, choice) for n in p.cliques[c]]


def assemble_base_code(removed: RemovedSet = None, per_point_choice: Union[Sequence[int], Mapping[int, int]] = None,
                       points: Sequence[FanoPoint] = None) -> SubspaceCode:
    """
    (lifted code minus the removed codewords) plus one maximum clique of new planes per
    anchor: 256 - 120 + 11 * 15 = 301 words.

    @param removed: Fano-mode removed set (default for the smallest trace-one u).
    @param per_point_choice: 15 clique indices in anchor exponent order, or a map
                             anchor vector -> index (missing anchors take 0). Default all zeros.
    """
    removed = removed or removed_set("fano")
    if removed.mode != "fano":
        raise InvalidConstructionError("the base code needs a fano-mode removed set")
    points = points or fano_point_graphs()
    choice = _normalise_choice([0] * len(points) if per_point_choice is None else per_point_choice, points)
    code = lmrd_code().without(removed.words(), "fano301")
    return code.extended(chosen_planes(choice, points), "fano301")


@dataclass(frozen=True)
class FanoSearchResult:
    augment: AugmentResult
    choice: Tuple[int, ...]


def fano_record_search(config: SearchConfig, choice: Sequence[int] = None) -> FanoSearchResult:
    """
    Randomized augmentation of fano-style base codes. Restart i draws from
    random.Random(config.restartSeed(i)): first the choice vector (when resampling),
    then the greedy order. Best total wins, ties to the earliest restart.

    @raises SearchBudgetExceeded if the time budget ends before target_size is reached;
            the exception carries the best FanoSearchResult so far (or None).
    """
    points = fano_point_graphs()
    removed = removed_set("fano")
    pool = line_meeting_pool()
    remaining = lmrd_code().without(removed.words(), "fano301")
    remaining_allowed = pool.allowedMask(remaining.words)
    fixed = _normalise_choice([0] * FANO_POINTS if choice is None else choice, points)
    deadline = None if config.time_budget is None else time.monotonic() + config.time_budget
    best = None
    counts = []
    timed_out = False
    for i in tqdm(range(config.restarts), desc="restarts", disable=not config.progress):
        if deadline is not None and time.monotonic() > deadline:
            timed_out = True
            break
        rng = random.Random(config.restartSeed(i))
        ch = [rng.randrange(len(p.cliques)) for p in points] if config.resample_choice else fixed
        planes = chosen_planes(ch, points)
        allowed = remaining_allowed & pool.allowedMask(planes)
        added = greedy_pass(pool.graph, allowed, rng)
        counts.append(len(added))
        if best is None or len(added) > len(best[0]):
            best = (added, ch, planes, i)
            logger.info("restart %d: %d planes added", i, len(added))
        if config.target_size is not None and remaining.size + len(planes) + len(best[0]) >= config.target_size:
            break
    result = None
    if best is not None:
        added, ch, planes, restart = best
        base = remaining.extended(planes, "fano301")
        added_planes = tuple(pool.planes[j] for j in added)
        final = base.extended(added_planes, f"fano{base.size + len(added_planes)}")
        result = FanoSearchResult(AugmentResult(added_planes, final, len(counts), restart,
                                                attainment_statistics(counts)), tuple(ch))
    reached = result is not None and (config.target_size is None
                                      or result.augment.final.size >= config.target_size)
    if result is None or (timed_out and not reached):
        raise SearchBudgetExceeded("time budget exhausted before reaching the target size", best=result)
    return result
