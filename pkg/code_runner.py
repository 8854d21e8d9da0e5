# -------------------------------------------------
# Master file for constructing, verifying and analysing subspace codes.
#
#   python code_runner.py construct fano301 --choice 0,0,0,0,0,0,0,0,0,0,0,0,0,0,0
#   python code_runner.py verify codes/fano329.txt
#   python code_runner.py analyze steiner-vector --v 7 --a3 0
# -------------------------------------------------

import argparse
import json
import logging
import os
import sys
from typing import List, Optional

from expurgation.cosets import all_rotated_cosets
from geometry.counting import flag_counts, new_planes_per_point, steiner_intersection_vector
from geometry.solid import special_solid
from helpers.errors import (CodeFileParseError, InfeasibleCountError, InvalidConstructionError,
                            SearchBudgetExceeded, SubspaceCodeError)
from helpers.helpers import (EXIT_BUDGET, EXIT_OK, EXIT_USAGE, EXIT_VERIFY, RunConfig,
                             build_run_config, load_code_from_txt, load_config, save_code_to_txt,
                             start_timer, stop_timer, validate_claimed_size,
                             validate_meets)
from mrd.gabidulin import lmrd_code
from search.augment import exact_augment
from search.clique import enumerate_max_cliques
from search.pipelines import (EDGE_MODELS, FANO_POINTS, assemble_base_code, coset_graph,
                              fano_point_graphs, fano_record_search, packed291, rotated_pipeline,
                              sigma291, single_cosets, single_pipeline)
from space.enumeration import gaussian_binomial, steiner_bound
from space.subspace import Subspace, orthogonal_complement
from space.subspace_code import SubspaceCode
from verifier.verifier import VerificationReport, full_report

logger = logging.getLogger("code_runner")

METHODS = ("lmrd", "packed291", "sigma291", "single268", "single303",
           "rotated280", "rotated314", "fano301", "fano329")
CLIQUE_TARGETS = ("cosets", "fano-point", "single")

# enforce python version >= 3.10
if sys.version_info < (3, 10):
    print("Error: Python 3.10 or higher is required to run Subspace Codes.")
    sys.exit(1)


def parse_choice(text: str) -> List[int]:
    try:
        choice = [int(c) for c in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"choice must be comma separated integers, got '{text}'")
    if len(choice) != FANO_POINTS:
        raise argparse.ArgumentTypeError(f"choice needs {FANO_POINTS} indices, got {len(choice)}")
    return choice


def build_parser() -> argparse.ArgumentParser:
    # global flags are accepted before or after the subcommand; unset ones stay absent
    common = argparse.ArgumentParser(add_help=False, argument_default=argparse.SUPPRESS)
    common.add_argument("--config", help="JSON run configuration")
    common.add_argument("-v", "--verbose", action="count", help="-v for INFO, -vv for DEBUG logging")
    common.add_argument("--seed", type=int)
    common.add_argument("--restarts", type=int)
    common.add_argument("--time-budget", dest="time_budget", type=float, help="seconds")
    common.add_argument("--output", help="output CodeFile path")
    common.add_argument("--format", choices=("text", "structured"))

    parser = argparse.ArgumentParser(prog="code_runner.py", parents=[common],
                                     description="Constant-dimension subspace codes in F_2^7.")
    sub = parser.add_subparsers(dest="command", required=True)

    construct = sub.add_parser("construct", parents=[common], help="build, verify and write a code")
    construct.add_argument("method", choices=METHODS)
    construct.add_argument("--choice", type=parse_choice, help="15 clique indices for the fano methods")
    construct.add_argument("--strategy", choices=("exact", "greedy-randomized"))
    construct.add_argument("--coset-edge-model", dest="coset_edge_model", choices=EDGE_MODELS)
    construct.add_argument("--dual", action="store_true", help="write the dual code")

    verify = sub.add_parser("verify", parents=[common], help="certify a CodeFile")
    verify.add_argument("path")
    verify.add_argument("--max-meet", dest="max_meet", type=int,
                        help="also fail if a codeword meets S in a larger dimension")

    analyze = sub.add_parser("analyze", parents=[common], help="counting tables and clique statistics")
    tasks = analyze.add_subparsers(dest="task", required=True)
    steiner = tasks.add_parser("steiner-vector", parents=[common])
    steiner.add_argument("--v", dest="dim", type=int, default=7)
    steiner.add_argument("--a3", type=int, default=0)
    stats = tasks.add_parser("clique-stats", parents=[common])
    stats.add_argument("--target", choices=CLIQUE_TARGETS, default="fano-point")
    stats.add_argument("--coset-edge-model", dest="coset_edge_model", choices=EDGE_MODELS)
    stats.add_argument("--print-graph", dest="print_graph", action="store_true")
    counts = tasks.add_parser("counts", parents=[common])
    counts.add_argument("--v", dest="dim", type=int, default=7)
    return parser


def run_config_from(args: argparse.Namespace) -> RunConfig:
    file_config = load_config(args.config) if getattr(args, "config", None) else None
    flags = {key: getattr(args, key, None)
             for key in ("seed", "restarts", "time_budget", "format", "strategy", "coset_edge_model")}
    return build_run_config(file_config, flags)


def distinguished_subspace(code: SubspaceCode) -> Subspace:
    """The special solid, or its dual when the code has dimension above 3."""
    S = special_solid(code.params.v)
    return orthogonal_complement(S) if code.params.k > 3 else S


def construct_code(method: str, config: RunConfig, choice: Optional[List[int]]) -> SubspaceCode:
    if method == "lmrd":
        return lmrd_code()
    if method == "packed291":
        return packed291()
    if method == "sigma291":
        return sigma291()
    if method == "single268":
        return single_pipeline(augment=False)
    if method == "single303":
        strategy = "exact" if config.strategy == "exact" else "packing"
        return single_pipeline(augment=True, strategy=strategy, time_budget=config.time_budget)
    if method == "rotated280":
        return rotated_pipeline(augment=False, time_budget=config.time_budget,
                                edge_model=config.coset_edge_model)
    if method == "rotated314":
        return rotated_pipeline(augment=True, time_budget=config.time_budget,
                                edge_model=config.coset_edge_model)
    if method == "fano301":
        return assemble_base_code(per_point_choice=choice)
    if method == "fano329":
        if config.strategy == "exact":
            base = assemble_base_code(per_point_choice=choice)
            return exact_augment(base, time_budget=config.time_budget).final
        result = fano_record_search(config.searchConfig(), choice)
        logger.info("added-plane histogram %s, choice %s", result.augment.histogram, result.choice)
        return result.augment.final
    raise InvalidConstructionError(f"unknown method '{method}'")


def print_report(report: VerificationReport):
    p = report.params_claimed
    print(f"Parameters: q={p.q} v={p.v} k={p.k} d={p.d}")
    print(f"Size: {report.size} (claimed {report.claimed_size})")
    print(f"Minimum distance: {report.min_distance}")
    print(f"Doubly covered t-subspaces: {report.line_double_covers}")
    print(f"Intersection vector: {tuple(report.intersection_vector) if report.intersection_vector else None}")
    print(f"Dual minimum distance: {report.dual_min_distance}")
    print(f"Verification: {'pass' if report.passed else 'FAIL'}")


def emit(config: RunConfig, document: dict):
    if config.format == "structured":
        print(json.dumps(document, indent=2, sort_keys=True))


def cmd_construct(args: argparse.Namespace, config: RunConfig) -> int:
    text = config.format == "text"
    if text:
        print(f"Constructing code using: {args.method}")
    start_timer()
    try:
        code = construct_code(args.method, config, args.choice)
    except SearchBudgetExceeded as e:
        best = getattr(e.best, "augment", e.best)
        partial = getattr(getattr(best, "final", None), "size", None)
        print(f"Search budget exhausted: {e} (best size so far: {partial})", file=sys.stderr)
        emit(config, {"command": "construct", "method": args.method, "error": str(e),
                      "best_size": partial})
        return EXIT_BUDGET
    if args.dual:
        code = code.dual()
    elapsed = stop_timer("construct")
    report = full_report(code, distinguished_subspace(code))
    if text:
        print_report(report)
    if not report.passed:
        print("Constructed code failed verification; nothing written.", file=sys.stderr)
        emit(config, {"command": "construct", "method": args.method, "report": report.to_dict()})
        return EXIT_VERIFY
    path = getattr(args, "output", None)
    if path is None:
        name = f"{args.method}-dual" if args.dual else args.method
        path = os.path.join(config.output_dir, f"{name}.txt")
    directory = os.path.dirname(path)
    if directory:
        os.makedirs(directory, exist_ok=True)
    save_code_to_txt(code, path)
    if text:
        print(f"Code saved to {path}")
    emit(config, {"command": "construct", "method": args.method, "seed": config.seed,
                  "output": path, "seconds": elapsed, "report": report.to_dict()})
    return EXIT_OK


def cmd_verify(args: argparse.Namespace, config: RunConfig) -> int:
    try:
        loaded = load_code_from_txt(args.path)
    except OSError as e:
        print(f"Error reading code file: {e}", file=sys.stderr)
        return EXIT_USAGE
    validate_claimed_size(loaded)
    S = distinguished_subspace(loaded.code)
    report = full_report(loaded.code, S, loaded.claimed_size)
    meets_ok = args.max_meet is None or validate_meets(loaded.code, S, args.max_meet)
    if config.format == "text":
        print(f"Verifying {args.path} (tag={loaded.code.provenance})")
        print_report(report)
        if args.max_meet is not None:
            print(f"Meets S in dimension at most {args.max_meet}: {'pass' if meets_ok else 'FAIL'}")
    document = {"command": "verify", "path": args.path, "report": report.to_dict()}
    if args.max_meet is not None:
        document["max_meet"] = {"limit": args.max_meet, "passed": meets_ok}
    emit(config, document)
    return EXIT_OK if report.passed and meets_ok else EXIT_VERIFY


def analyze_steiner(args: argparse.Namespace) -> dict:
    vector = steiner_intersection_vector(args.dim, args.a3)
    return {"v": args.dim, "a3": args.a3, "size": vector.size,
            "intersection_vector": list(vector),
            "new_planes_per_point": new_planes_per_point(args.dim, args.a3)}


def analyze_cliques(args: argparse.Namespace, config: RunConfig) -> dict:
    if args.target == "fano-point":
        graph = fano_point_graphs()[0].graph
    elif args.target == "single":
        graph = coset_graph(single_cosets(), config.coset_edge_model)
    else:
        graph = coset_graph(all_rotated_cosets(), config.coset_edge_model)
    cliques = enumerate_max_cliques(graph, config.time_budget)
    if args.print_graph and config.format == "text":
        graph.print()
    return {"target": args.target, "vertices": graph.n, "edges": graph.edgeCount(),
            "clique_number": len(cliques[0]), "maximum_cliques": len(cliques)}


def analyze_counts(args: argparse.Namespace) -> dict:
    v = args.dim
    return {"v": v, "steiner_bound": steiner_bound(v),
            "gaussian_binomials": {str(k): gaussian_binomial(v, k) for k in range(1, 5)},
            "flag_counts": flag_counts(v).to_dict()}


def cmd_analyze(args: argparse.Namespace, config: RunConfig) -> int:
    if args.task == "steiner-vector":
        document = analyze_steiner(args)
    elif args.task == "clique-stats":
        document = analyze_cliques(args, config)
    else:
        document = analyze_counts(args)
    if config.format == "text":
        for key, value in document.items():
            print(f"{key}: {value}")
    emit(config, {"command": "analyze", "task": args.task, **document})
    return EXIT_OK


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    verbosity = getattr(args, "verbose", 0) or 0
    level = logging.DEBUG if verbosity >= 2 else logging.INFO if verbosity == 1 else logging.WARNING
    logging.basicConfig(level=level, stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s")

    try:
        config = run_config_from(args)
        config.searchConfig()
    except InvalidConstructionError as e:
        print(f"Invalid configuration: {e}", file=sys.stderr)
        return EXIT_USAGE
    if config.coset_edge_model not in EDGE_MODELS or config.format not in ("text", "structured"):
        print("Invalid configuration: unknown coset edge model or output format", file=sys.stderr)
        return EXIT_USAGE

    text = config.format == "text"
    if text:
        print("--------------- Subspace Codes ---------------")
    try:
        if args.command == "construct":
            status = cmd_construct(args, config)
        elif args.command == "verify":
            status = cmd_verify(args, config)
        else:
            status = cmd_analyze(args, config)
    except CodeFileParseError as e:
        print(f"Error parsing code file: {e}", file=sys.stderr)
        return EXIT_USAGE
    except (InvalidConstructionError, InfeasibleCountError) as e:
        print(f"Error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except SearchBudgetExceeded as e:
        print(f"Search budget exhausted: {e}", file=sys.stderr)
        return EXIT_BUDGET
    except SubspaceCodeError as e:
        print(f"Error: {e}", file=sys.stderr)
        return EXIT_VERIFY
    if text and status == EXIT_OK:
        print("--------------- Run Complete ---------------")
    return status


if __name__ == "__main__":
    sys.exit(main())
