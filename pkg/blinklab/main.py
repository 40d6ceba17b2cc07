"""CLI entry point for blinklab."""

import argparse
import asyncio
import json
import logging
import sys
from pathlib import Path
from typing import NoReturn, Optional

from pydantic import ValidationError

from blinklab import __version__
from blinklab.config import BlinklabConfig, EyePolicy
from blinklab.detector.pipeline import detect_with_diagnostics
from blinklab.errors import BlinklabError, CapacityError
from blinklab.ingest.annotations import serialize_annotations
from blinklab.ingest.normalize import GapPolicy, normalize_trace
from blinklab.ingest.trace_csv import read_trace_file, write_trace_csv
from blinklab.report.runner import read_manifest, run_validation
from blinklab.report.svg import render_chart
from blinklab.report.writer import format_metrics, write_events_csv, write_report
from blinklab.synthgen.generator import generate
from blinklab.synthgen.spec import SyntheticSpec

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DATA = 2

# Input failures that map to EXIT_DATA
DATA_ERRORS = (BlinklabError, OSError, UnicodeDecodeError)


class _ArgumentParser(argparse.ArgumentParser):
    """argparse exits 2 on usage errors; blinklab reserves 2 for bad input data."""

    def error(self, message: str) -> NoReturn:
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _write_text(path: Optional[str], text: str) -> None:
    if path is None:
        sys.stdout.write(text)
        return
    target = Path(path)
    target.parent.mkdir(parents=True, exist_ok=True)
    target.write_text(text, encoding="utf-8")


def cmd_detect(args: argparse.Namespace, config: BlinklabConfig) -> int:
    """Detect blinks in one trace; write the events CSV and optionally a chart."""
    try:
        trace = read_trace_file(args.trace, fps=config.ingest.fps)
        trace, issues = normalize_trace(trace, GapPolicy.from_fill_gaps(config.ingest.fill_gaps))
    except DATA_ERRORS as e:
        print(f"Error: {e}", file=sys.stderr)
        return EXIT_DATA

    for issue in issues:
        logger.warning(f"{trace.video_id}: frame {issue.frame_index}: {issue.detail}")

    outcome = detect_with_diagnostics(trace, config.detector)
    _write_text(args.out, write_events_csv(outcome.events))
    if args.svg:
        _write_text(args.svg, render_chart(outcome, config.detector))
    logger.info(f"Detected {len(outcome.events)} blink(s) in '{trace.video_id}'")
    return EXIT_OK


def cmd_validate(args: argparse.Namespace, config: BlinklabConfig) -> int:
    """Score every manifest video against its annotations and write the run report."""
    try:
        entries = read_manifest(args.manifest)
        report = asyncio.run(run_validation(entries, config, strict=args.strict))
    except DATA_ERRORS as e:
        print(f"Error: {e}", file=sys.stderr)
        return EXIT_DATA

    write_report(report, args.out)
    for warning in report.warnings:
        print(f"Warning: {warning}", file=sys.stderr)
    for line in format_metrics(report.aggregate.metrics):
        print(line)
    return EXIT_OK


def cmd_synth(args: argparse.Namespace, config: BlinklabConfig) -> int:
    """Generate a synthetic trace and its annotation file from a JSON spec."""
    try:
        spec = SyntheticSpec.from_json(args.spec)
    except ValidationError as e:
        print(f"Invalid synthetic spec {args.spec}:\n{e}", file=sys.stderr)
        return EXIT_USAGE
    except (OSError, json.JSONDecodeError) as e:
        print(f"Failed to read synthetic spec: {e}", file=sys.stderr)
        return EXIT_USAGE

    try:
        trace, annotations = generate(spec)
    except CapacityError as e:
        print(f"Capacity error: {e}", file=sys.stderr)
        return EXIT_USAGE

    _write_text(args.out, write_trace_csv(trace))
    _write_text(args.annotations, serialize_annotations(annotations) + "\n")
    logger.info(f"Wrote {len(trace)} frames and {len(annotations)} blink(s)")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _ArgumentParser(
        prog="blinklab",
        description="Blinklab - blink detection and clinical validation from eye-openness traces",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")

    common = _ArgumentParser(add_help=False)
    common.add_argument("--config", help="Config file (JSON or YAML)")
    common.add_argument(
        "-v", "--verbose", action="count", default=0, help="-v for INFO, -vv for DEBUG"
    )
    common.add_argument(
        "--eye-policy", choices=[p.value for p in EyePolicy], help="Eye reduction policy"
    )
    common.add_argument("--no-ear", action="store_true", help="Disable the EAR detector")
    common.add_argument(
        "--fill-gaps", type=int, metavar="N", help="Interpolate frame gaps of at most N frames"
    )
    common.add_argument("--fps", type=float, help="Frames per second of the traces")

    commands = parser.add_subparsers(dest="command", required=True)

    detect = commands.add_parser("detect", parents=[common], help="Detect blinks in a trace")
    detect.add_argument("--trace", required=True, help="Trace CSV")
    detect.add_argument("--out", help="Events CSV (stdout when omitted)")
    detect.add_argument("--svg", help="Write an openness chart")
    detect.set_defaults(handler=cmd_detect)

    validate = commands.add_parser(
        "validate", parents=[common], help="Score detections against annotations"
    )
    validate.add_argument("--manifest", required=True, help="Manifest CSV")
    validate.add_argument("--out", required=True, help="Report JSON")
    validate.add_argument("--strict", action="store_true", help="Fail on the first bad video")
    validate.add_argument(
        "--tn-strict", action="store_true", help="Any annotated frame disqualifies a TN gap"
    )
    validate.set_defaults(handler=cmd_validate)

    synth = commands.add_parser("synth", parents=[common], help="Generate a synthetic trace")
    synth.add_argument("--spec", required=True, help="Synthetic spec JSON")
    synth.add_argument("--out", required=True, help="Trace CSV to write")
    synth.add_argument("--annotations", required=True, help="Annotation file to write")
    synth.set_defaults(handler=cmd_synth)

    return parser


def configure_logging(verbosity: int) -> None:
    level = logging.WARNING
    if verbosity == 1:
        level = logging.INFO
    elif verbosity > 1:
        level = logging.DEBUG
    logging.basicConfig(
        level=level,
        stream=sys.stderr,
        format="%(levelname)s %(name)s: %(message)s",
    )


def main(argv: Optional[list[str]] = None) -> None:
    """Main entry point."""
    parser = build_parser()
    args = parser.parse_args(argv)
    configure_logging(args.verbose)

    if args.fill_gaps is not None and args.fill_gaps < 0:
        parser.error("--fill-gaps must be >= 0")

    try:
        config = BlinklabConfig.load(args.config).with_overrides(
            ear_enabled=False if args.no_ear else None,
            eye_policy=args.eye_policy,
            fill_gaps=args.fill_gaps,
            tn_strict=True if getattr(args, "tn_strict", False) else None,
            fps=args.fps,
        )
    except Exception as e:
        print(f"Failed to load configuration: {e}", file=sys.stderr)
        sys.exit(EXIT_USAGE)

    sys.exit(args.handler(args, config))


if __name__ == "__main__":
    main()
