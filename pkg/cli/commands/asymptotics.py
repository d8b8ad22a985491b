"""
asymptotics: candidate density against 1/(dk+1)
"""
import argparse

from cli.dependencies import parse_range
from schemas.reports import ReportDocument
from services.asymptotics import asymptotics


def register(subparsers, common: argparse.ArgumentParser) -> None:
    parser = subparsers.add_parser("asymptotics", parents=[common], help="density of the candidate set")
    parser.add_argument("--k", type=int, required=True)
    parser.add_argument("--n", type=parse_range, default=[10, 20, 50, 100])
    parser.add_argument("--d", type=int, default=2)
    parser.add_argument("--format", choices=("json", "csv"), default="json")
    parser.set_defaults(handler=handle)


def handle(args: argparse.Namespace) -> ReportDocument:
    report = asymptotics(args.k, args.n, d=args.d)
    return ReportDocument(
        command="asymptotics",
        parameters={"d": args.d, "k": args.k, "n": args.n},
        status="pass",
        payload=report.model_dump(mode="json"),
    )
