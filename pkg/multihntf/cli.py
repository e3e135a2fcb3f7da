"""Command-line front end: multihntf {synth,fit,compare,export}"""

import argparse
import logging
from pathlib import Path
from typing import Callable, Dict, List, Optional

from multihntf import __version__, settings
from multihntf.commands import cmd_compare, cmd_export, cmd_fit, cmd_synth
from multihntf.errors import MultiHntfError
from multihntf.models import RunConfig

logger = logging.getLogger(__name__)

CommandHandler = Callable[[RunConfig, argparse.Namespace], int]


def _command_handlers() -> Dict[str, CommandHandler]:
    return {
        "synth": lambda config, args: cmd_synth(config, seed=args.seed),
        "fit": lambda config, args: cmd_fit(config, jobs=args.jobs),
        "compare": lambda config, args: cmd_compare(config, jobs=args.jobs),
        "export": lambda config, args: cmd_export(config, chain_path=args.chain),
    }


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="multihntf",
        description="Hierarchical nonnegative tensor factorization with a shared mixing matrix",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    helps = {
        "synth": "write the synthetic block tensor and its ground truth",
        "fit": "fit one method over the configured seeds",
        "compare": "compare methods across seeds (median, min, max)",
        "export": "write heatmap and keyword CSVs from a chain file",
    }
    for name, text in helps.items():
        p = sub.add_parser(name, help=text)
        p.add_argument("--config", type=Path, help="TOML or JSON run configuration")
        p.add_argument("--seed", type=int, help="single seed replacing the configured ones")
        p.add_argument("--out", help="output directory")
        p.add_argument("--jobs", type=int, help="worker threads (default $MHNTF_JOBS or 1)")
        if name == "export":
            p.add_argument("chain", nargs="?", help="chain JSON written by fit")
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    logging.basicConfig(
        level=settings.log_level(), format="%(asctime)s %(levelname)s %(name)s: %(message)s"
    )
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.jobs is None:
        args.jobs = settings.default_jobs()
    elif args.jobs < 1:
        parser.error("--jobs must be >= 1")
    if args.seed is not None and args.seed < 0:
        parser.error("--seed must be >= 0")

    try:
        config = RunConfig.from_file(args.config) if args.config else RunConfig()
        config = config.with_overrides(seed=args.seed, out=args.out)
        return _command_handlers()[args.command](config, args)
    except MultiHntfError as e:
        logger.error(str(e))
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
