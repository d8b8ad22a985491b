"""
diagram: staircase plots of types, footprints and recursion contributions
"""
import argparse

from cli.dependencies import UsageError, parse_type
from schemas.reports import ReportDocument
from services.diagrams import (
    footprint_diagram,
    key_recursion_diagram,
    render_staircase,
    segment_diagram,
    step1_diagram,
    types_diagram,
)

PRESETS = ("types", "footprint", "key-recursion", "step1", "segment")


def register(subparsers, common: argparse.ArgumentParser) -> None:
    parser = subparsers.add_parser("diagram", parents=[common], help="render a staircase diagram")
    parser.add_argument("--preset", choices=PRESETS, default="types")
    parser.add_argument("--n", type=int, required=True)
    parser.add_argument("--k", type=int, default=None)
    parser.add_argument("--type", type=parse_type, default=None, help="owner a,b,c for the footprint preset")
    parser.add_argument("--a", type=int, default=None)
    parser.add_argument("--c", type=int, default=None)
    parser.add_argument("--segment-d", type=int, default=0)
    parser.add_argument("--expanded", action="store_true", help="segment after one expansion")
    parser.add_argument("--format", choices=("svg", "ascii"), default="svg")
    parser.set_defaults(handler=handle)


def _build_spec(args: argparse.Namespace):
    if args.preset == "types":
        return types_diagram(args.n)
    if args.k is None:
        raise UsageError(f"--k is required for the {args.preset} preset")
    if args.preset == "footprint":
        if args.type is None:
            raise UsageError("--type a,b,c is required for the footprint preset")
        return footprint_diagram(args.n, args.k, args.type)
    if args.a is None or args.c is None:
        raise UsageError(f"--a and --c are required for the {args.preset} preset")
    if args.preset == "key-recursion":
        return key_recursion_diagram(args.n, args.k, args.a, args.c)
    if args.preset == "step1":
        return step1_diagram(args.n, args.k, args.a, args.c)
    return segment_diagram(args.n, args.k, args.a, args.c, d=args.segment_d, expanded=args.expanded)


def handle(args: argparse.Namespace) -> ReportDocument:
    spec = _build_spec(args)
    content = render_staircase(spec, args.format).decode("utf-8")
    return ReportDocument(
        command="diagram",
        parameters={"preset": args.preset, "n": args.n, "k": args.k},
        status="pass",
        payload={"spec": spec.model_dump(mode="json"), "format": args.format, "content": content},
    )
