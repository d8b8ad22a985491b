"""
conjecture: residue-class conjecture for any d, and the anti-basic negative control
"""
import argparse

from cli.dependencies import UsageError
from schemas.reports import ReportDocument
from workflows.certify import run_conjecture
from workflows.induced import find_negative_control


def register(subparsers, common: argparse.ArgumentParser) -> None:
    parser = subparsers.add_parser("conjecture", parents=[common], help="explore the d >= 3 conjecture")
    parser.add_argument("--n", type=int, default=None)
    parser.add_argument("--d", type=int, default=3)
    parser.add_argument("--k", type=int, default=None)
    parser.add_argument("--symmetry", action="store_true")
    parser.add_argument("--negative-control", action="store_true", help="search anti-basic chains for a negative weight")
    parser.add_argument("--n-max", type=int, default=10)
    parser.add_argument("--format", choices=("json", "csv"), default="json")
    parser.set_defaults(handler=handle)


def handle(args: argparse.Namespace) -> ReportDocument:
    if args.negative_control:
        witness = find_negative_control(args.n_max)
        return ReportDocument(
            command="conjecture",
            parameters={"negative_control": True, "n_max": args.n_max},
            status="pass" if witness is not None else "fail",
            payload=witness.model_dump(mode="json") if witness is not None else None,
        )
    if args.n is None or args.k is None:
        raise UsageError("--n and --k are required unless --negative-control is given")
    verdict = run_conjecture(args.n, args.d, args.k, use_symmetry=args.symmetry)
    return ReportDocument(
        command="conjecture",
        parameters={"n": args.n, "d": args.d, "k": args.k},
        status=verdict.status,
        payload=verdict.model_dump(mode="json"),
    )
