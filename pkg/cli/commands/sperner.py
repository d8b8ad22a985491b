"""
sperner: weighted symmetric chain decompositions of the subsets of [n]
"""
import argparse

from cli.dependencies import parse_range
from schemas.reports import ReportDocument
from workflows.induced import verify_sperner


def register(subparsers, common: argparse.ArgumentParser) -> None:
    parser = subparsers.add_parser("sperner", parents=[common], help="weighted symmetric chains of 2^[n]")
    parser.add_argument("--n", type=parse_range, required=True)
    parser.add_argument("--format", choices=("json", "csv"), default="json")
    parser.set_defaults(handler=handle)


def handle(args: argparse.Namespace) -> ReportDocument:
    reports = [verify_sperner(n) for n in args.n if n >= 1]
    status = "pass" if all(r.status == "pass" for r in reports) else "fail"
    return ReportDocument(
        command="sperner",
        parameters={"n": args.n},
        status=status,
        payload=[r.model_dump(mode="json") for r in reports],
    )
