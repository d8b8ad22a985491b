"""
weights: print the group-weight table of one instance
"""
import argparse
import logging

from cli.dependencies import UsageError
from schemas.reports import ReportDocument
from services.weights import assign_weights_fast, assign_weights_generic

logger = logging.getLogger(__name__)


def register(subparsers, common: argparse.ArgumentParser) -> None:
    parser = subparsers.add_parser("weights", parents=[common], help="weight table of one (n, d, k)")
    parser.add_argument("--n", type=int, required=True)
    parser.add_argument("--d", type=int, choices=(1, 2), default=2)
    parser.add_argument("--k", type=int, required=True)
    parser.add_argument("--method", choices=("generic", "fast"), default="generic")
    parser.add_argument("--family", choices=("basic", "anti_basic"), default=None, help="generic method only; basic by default")
    parser.add_argument("--shuffle", action="store_true", help="seeded order of same-distance owners (generic method only)")
    parser.add_argument("--format", choices=("json", "csv"), default="json")
    parser.set_defaults(handler=handle)


def handle(args: argparse.Namespace) -> ReportDocument:
    if args.method == "fast" and (args.family is not None or args.shuffle):
        raise UsageError("--family and --shuffle apply to --method generic only")
    family = args.family or "basic"
    logger.info(f"Assigning {family} weights for n={args.n}, d={args.d}, k={args.k} ({args.method})")
    if args.method == "fast":
        table = assign_weights_fast(args.n, args.d, args.k)
    else:
        seed = args.seed if args.shuffle else None
        table = assign_weights_generic(args.n, args.d, args.k, family=family, seed=seed)
    document = table.to_document()
    return ReportDocument(
        command="weights",
        parameters={"n": args.n, "d": args.d, "k": args.k, "method": args.method, "family": family},
        status="pass",
        payload=document.model_dump(mode="json"),
    )
