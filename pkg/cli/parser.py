"""
Argument parser: one subcommand per pipeline, shared flags on every one
"""
import argparse

from cli.commands import (
    asymptotics,
    certify,
    conjecture,
    diagram,
    oracle,
    sperner,
    verify_induced,
    verify_lemmas,
    weights,
)
from config import get_settings

COMMANDS = (weights, verify_induced, verify_lemmas, oracle, certify, sperner, diagram, asymptotics, conjecture)


def common_parser() -> argparse.ArgumentParser:
    settings = get_settings()
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", default=None, help="write the report to this file instead of stdout")
    common.add_argument("--seed", type=int, default=settings.DEFAULT_SEED)
    common.add_argument("--jobs", type=int, default=settings.DEFAULT_JOBS)
    common.add_argument("--budget", type=int, default=None, help="vertex/point budget override")
    common.add_argument("--allow-large-budget", action="store_true", help="acknowledge --budget")
    common.add_argument("--log-level", default=settings.LOG_LEVEL)
    return common


def build_parser() -> argparse.ArgumentParser:
    settings = get_settings()
    parser = argparse.ArgumentParser(
        prog=settings.TOOL_NAME,
        description="Weighted chain decompositions and k-Sperner certification on {0..d}^n",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {settings.VERSION}")
    subparsers = parser.add_subparsers(dest="command", required=True)
    common = common_parser()
    for command in COMMANDS:
        command.register(subparsers, common)
    return parser
