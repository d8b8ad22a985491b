"""
certify: residue-class candidate versus the oracle for d in {1, 2}
"""
import argparse
import logging

from schemas.reports import ReportDocument
from workflows.certify import certify_theorem

logger = logging.getLogger(__name__)


def register(subparsers, common: argparse.ArgumentParser) -> None:
    parser = subparsers.add_parser("certify", parents=[common], help="certify the extremal residue class")
    parser.add_argument("--n", type=int, required=True)
    parser.add_argument("--d", type=int, choices=(1, 2), default=2)
    parser.add_argument("--k", type=int, required=True)
    parser.add_argument("--variant", choices=("B", "B1", "B2"), default="B")
    parser.add_argument("--symmetry", action="store_true")
    parser.add_argument("--format", choices=("json", "csv"), default="json")
    parser.set_defaults(handler=handle)


def handle(args: argparse.Namespace) -> ReportDocument:
    logger.info(f"Certifying variant {args.variant} for n={args.n}, d={args.d}, k={args.k}")
    verdict = certify_theorem(args.n, args.d, args.k, args.variant, use_symmetry=args.symmetry)
    return ReportDocument(
        command="certify",
        parameters={"n": args.n, "d": args.d, "k": args.k, "variant": args.variant},
        status=verdict.status,
        payload=verdict.model_dump(mode="json"),
    )
