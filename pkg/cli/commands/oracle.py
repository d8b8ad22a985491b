"""
oracle: exact maximum independent set of the conflict graph
"""
import argparse
import logging

from schemas.reports import ReportDocument
from services.grid import validate_set
from services.oracle import build_conflict_graph, enumerate_maximum_sets, max_independent_set

logger = logging.getLogger(__name__)


def register(subparsers, common: argparse.ArgumentParser) -> None:
    parser = subparsers.add_parser("oracle", parents=[common], help="exact MIS of the conflict graph")
    parser.add_argument("--n", type=int, required=True)
    parser.add_argument("--d", type=int, default=2)
    parser.add_argument("--k", type=int, required=True)
    parser.add_argument("--symmetry", action="store_true", help="branch on orbit representatives at the root")
    parser.add_argument("--enumerate", action="store_true", help="list every maximum set")
    parser.add_argument("--cap", type=int, default=None)
    parser.add_argument("--format", choices=("json", "csv"), default="json")
    parser.set_defaults(handler=handle)


def handle(args: argparse.Namespace) -> ReportDocument:
    graph = build_conflict_graph(args.n, args.d, args.k)
    logger.info(f"Conflict graph for n={args.n}, d={args.d}, k={args.k}: {len(graph)} vertices")
    if args.enumerate:
        result = enumerate_maximum_sets(graph, cap=args.cap)
    else:
        result = max_independent_set(graph, use_symmetry=args.symmetry)
    valid = validate_set(result.witness, args.k).ok
    if not result.certified:
        status = "incomplete"
    else:
        status = "pass" if valid else "fail"
    return ReportDocument(
        command="oracle",
        parameters={"n": args.n, "d": args.d, "k": args.k, "symmetry": args.symmetry, "enumerate": args.enumerate},
        status=status,
        payload={"graph": graph.summary().model_dump(), "result": result.model_dump(mode="json"), "witness_valid": valid},
    )
