"""
verify-induced: induced weights, positivity and path agreement over ranges
"""
import argparse
import logging

from cli.dependencies import parse_range
from schemas.reports import ReportDocument
from workflows.induced import verify_instances

logger = logging.getLogger(__name__)

POINT_MODES = {"auto": None, "on": True, "off": False}


def register(subparsers, common: argparse.ArgumentParser) -> None:
    parser = subparsers.add_parser("verify-induced", parents=[common], help="verify weight tables")
    parser.add_argument("--n", type=parse_range, required=True, help='e.g. "1-12"')
    parser.add_argument("--d", type=int, choices=(1, 2), default=2)
    parser.add_argument("--k", type=parse_range, default=None, help="defaults to 1..n for each n")
    parser.add_argument("--point", choices=tuple(POINT_MODES), default="auto")
    parser.add_argument("--format", choices=("json", "csv"), default="json")
    parser.set_defaults(handler=handle)


def handle(args: argparse.Namespace) -> ReportDocument:
    instances = [(n, k) for n in args.n for k in (args.k or range(1, n + 1))]
    logger.info(f"Verifying {len(instances)} instances for d={args.d} with {args.jobs} job(s)")
    results = verify_instances(args.d, instances, POINT_MODES[args.point], seed=args.seed, jobs=args.jobs)
    status = "pass" if all(r.status == "pass" for r in results) else "fail"
    return ReportDocument(
        command="verify-induced",
        parameters={"n": args.n, "d": args.d, "k": args.k, "point": args.point, "seed": args.seed},
        status=status,
        payload=[r.model_dump(mode="json") for r in results],
    )
