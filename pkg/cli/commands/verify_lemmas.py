"""
verify-lemmas: exhaustive closed-form and lemma scans
"""
import argparse
import logging

from cli.dependencies import parse_range
from schemas.reports import ReportDocument
from workflows.lemmas import LEMMAS, run_lemma_suite

logger = logging.getLogger(__name__)


def register(subparsers, common: argparse.ArgumentParser) -> None:
    parser = subparsers.add_parser("verify-lemmas", parents=[common], help="check lemmas at (n, k) instances")
    parser.add_argument("--n", type=parse_range, required=True)
    parser.add_argument("--k", type=parse_range, default=None, help="defaults to 1..n for each n")
    parser.add_argument("--lemma", default="all", help=f"comma-separated names or 'all' ({', '.join(LEMMAS)})")
    parser.add_argument("--format", choices=("json", "csv"), default="json")
    parser.set_defaults(handler=handle)


def handle(args: argparse.Namespace) -> ReportDocument:
    names = list(LEMMAS) if args.lemma == "all" else [x.strip() for x in args.lemma.split(",") if x.strip()]
    instances = [(n, k) for n in args.n for k in (args.k or range(1, n + 1))]
    logger.info(f"Checking {len(names)} lemma(s) over {len(instances)} instances")
    reports = run_lemma_suite(names, instances, jobs=args.jobs)
    status = "pass" if all(r.passed for r in reports) else "fail"
    return ReportDocument(
        command="verify-lemmas",
        parameters={"n": args.n, "k": args.k, "lemma": names},
        status=status,
        payload=[r.model_dump(mode="json") for r in reports],
    )
