"""
Command-line entry point.

    python -m src.cli build Gn:1
    python -m src.cli maol alt:5 --format table
    python -m src.cli verify formulas --jobs 4 --out report.json

Exit codes: 0 success, 1 verification failure, 2 input error, 3 resource cap.
"""
import argparse
import json
import logging
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Dict, List, Optional

from src import config
from src.errors import (
    CollectionBudgetError,
    GroupAxiomError,
    GroupToolkitError,
    PresentationError,
    ResourceLimitError,
)
from src.group_core.table import GroupTable
from src.group_core.subgroups import center, commutator_subgroup
from src.group_core.structure import exponent, is_nilpotent, nilpotency_class
from src.aut_engine.group import automorphism_group
from src.aut_engine.central import aut_index_central
from src.aut_engine.orbits import aut_orbits
from src.pc_presenter.collector import instantiate
from src.pc_presenter.parsers.presentation_parser import parse_presentation
from src.theory_checks.corpus import build_group
from src.theory_checks.suites import SUITES, run_suite

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_INPUT = 2
EXIT_RESOURCE = 3

COMMANDS = ["build", "maol", "verify"]
FORMATS = ["json", "table"]


@dataclass
class RunConfig:
    """Validated command-line settings."""
    command: str
    source: Optional[str] = None
    suite: Optional[str] = None
    cap: int = config.MAX_GROUP_ORDER
    jobs: int = 1
    fmt: str = "json"
    out: Optional[Path] = None
    long: bool = False
    verbose: int = 0

    def __post_init__(self):
        if self.command not in COMMANDS:
            raise ValueError(f"unknown command {self.command!r}")
        if self.fmt not in FORMATS:
            raise ValueError(f"unknown format {self.fmt!r}")
        if self.jobs < 1:
            raise ValueError(f"--jobs must be at least 1, got {self.jobs}")
        maximum = config.AUT_ORDER_LIMIT if self.command == "maol" else config.MAX_GROUP_ORDER
        if not 1 <= self.cap <= maximum:
            raise ValueError(f"--cap must lie in 1..{maximum} for {self.command}, got {self.cap}")

    @classmethod
    def from_args(cls, args: argparse.Namespace) -> "RunConfig":
        default_cap = config.AUT_ORDER_LIMIT if args.command == "maol" else config.MAX_GROUP_ORDER
        return cls(
            command=args.command,
            source=getattr(args, "source", None),
            suite=getattr(args, "suite", None),
            cap=args.cap if args.cap is not None else default_cap,
            jobs=args.jobs,
            fmt=args.format,
            out=Path(args.out) if args.out else None,
            long=args.long,
            verbose=args.verbose,
        )


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default="json", help="Output format (default: json)")
    common.add_argument("--out", help="Write the JSON document to this path")
    common.add_argument("--cap", type=int, default=None, help="Largest group order to construct")
    common.add_argument("--jobs", type=int, default=1, help="Worker processes for corpus sweeps")
    common.add_argument("--long", action="store_true", help="Enable long-running checks (G_2 and G_3 automorphisms)")
    common.add_argument("-v", "--verbose", action="count", default=0, help="Log more (repeat for debug)")

    parser = argparse.ArgumentParser(prog="python -m src.cli", description="Finite groups with small automorphism orbits")
    commands = parser.add_subparsers(dest="command", required=True)
    build = commands.add_parser("build", parents=[common], help="Construct a group and summarise it")
    build.add_argument("source", help="Builtin identifier (cyclic:6, Gn:1, ...), presentation file or group JSON")
    maol = commands.add_parser("maol", parents=[common], help="Automorphism orbits of a group")
    maol.add_argument("source", help="Builtin identifier, presentation file or group JSON")
    verify = commands.add_parser("verify", parents=[common], help="Run a verification suite")
    verify.add_argument("suite", choices=SUITES + ["all"])
    return parser


def load_group(source: str, cap: int) -> GroupTable:
    """
    A group from a builtin identifier, a presentation file or a serialised table.

    Raises:
        ValueError: On unknown identifiers or malformed files.
    """
    path = Path(source)
    if path.is_file():
        text = path.read_text(encoding="utf-8")
        if path.suffix == ".json":
            return GroupTable.from_dict(json.loads(text), cap=cap)
        return instantiate(parse_presentation(text), cap=cap, name=path.stem)
    return build_group(source, cap=cap)


def summarize(G: GroupTable) -> Dict[str, Any]:
    nilpotent = is_nilpotent(G)
    return {
        "name": G.name,
        "order": G.order,
        "abelian": G.is_abelian,
        "center_order": center(G).order,
        "derived_order": commutator_subgroup(G).order,
        "exponent": exponent(G),
        "nilpotency_class": nilpotency_class(G) if nilpotent else None,
    }


def cmd_build(run: RunConfig) -> Dict[str, Any]:
    G = load_group(run.source, run.cap)
    return {"summary": summarize(G), "group": G.to_dict()}


def cmd_maol(run: RunConfig) -> Dict[str, Any]:
    G = load_group(run.source, run.cap)
    aut = automorphism_group(G, cap=run.cap)
    partition = aut_orbits(G, aut)
    index = aut_index_central(G, aut)
    return {
        "group": G.name,
        "order": G.order,
        "maol": partition.maol,
        "orbit_lengths": sorted(partition.lengths),
        "aut_order": aut.order,
        "central_aut_order": aut.order // index,
        "central_index": index,
        "orbits": partition.to_dict()["orbits"],
    }


def cmd_verify(run: RunConfig) -> Dict[str, Any]:
    report = run_suite(run.suite, jobs=run.jobs, long=run.long)
    for failure in report.failures:
        logger.error(f"check failed: {failure.check_name} {failure.to_dict()['inputs']}")
    return report.to_dict()


def _render_table(data: Dict[str, Any], skip: List[str]) -> str:
    lines = []
    for key, value in data.items():
        if key in skip:
            continue
        if isinstance(value, dict):
            lines.append(_render_table(value, skip))
        else:
            lines.append(f"{key}: {value}")
    return "\n".join(lines)


def _emit(run: RunConfig, document: Dict[str, Any], skip: List[str]) -> None:
    text = json.dumps(document, sort_keys=True, indent=2)
    if run.out is not None:
        run.out.write_text(text + "\n", encoding="utf-8")
    if run.fmt == "json" and run.out is None:
        print(text)
    elif run.fmt == "table":
        print(_render_table(document, skip))


def execute(run: RunConfig) -> int:
    if run.command == "build":
        _emit(run, cmd_build(run), skip=["group"])
        return EXIT_OK
    if run.command == "maol":
        _emit(run, cmd_maol(run), skip=["orbits"])
        return EXIT_OK
    document = cmd_verify(run)
    _emit(run, document, skip=["checks"] if run.fmt == "table" else [])
    return EXIT_OK if document["passed"] else EXIT_FAILED


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=[logging.WARNING, logging.INFO, logging.DEBUG][min(args.verbose, 2)],
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        run = RunConfig.from_args(args)
        return execute(run)
    except ResourceLimitError as exc:
        logger.error(str(exc))
        return EXIT_RESOURCE
    except (PresentationError, CollectionBudgetError, GroupAxiomError, ValueError, OSError) as exc:
        logger.error(str(exc))
        return EXIT_INPUT
    except GroupToolkitError as exc:
        logger.error(str(exc))
        return EXIT_FAILED


if __name__ == "__main__":
    sys.exit(main())
