"""Command-line front end.

Exit codes: 0 success, 1 usage/configuration, 2 data or file format,
3 model or shape problems. Every non-zero exit prints a diagnostic naming
the failing input to stderr.
"""

import argparse
import contextlib
import io
import json
import os
import sys
from dataclasses import dataclass
from pathlib import Path

from .classify import BandThresholds, classify, evaluate
from .config import ExtractionConfig, load_extraction_config
from .dataio import (
    ArchiveStore,
    export_feature_matrix,
    fetch_record,
    filter_stale,
    load_model,
    parse_feature_matrix,
    parse_phishtank_csv,
    parse_url_list,
    save_model,
)
from .errors import (
    ConfigError,
    ExtractionError,
    FetchError,
    FormatError,
    ModelFormatError,
    ModelVersionError,
    ShapeError,
)
from .indicators import INDICATOR_COUNT
from .network import TrainConfig, init_network, train
from .records import LEGIT, PHISH, WebsiteRecord


def _load_cfg(path: str | None) -> ExtractionConfig:
    path = path or os.environ.get("PHISHNET_CONFIG")
    return load_extraction_config(path) if path else ExtractionConfig()


def _read(path: str) -> str:
    return Path(path).read_text(encoding="utf-8")


def _report_skips(skips: list) -> None:
    for message in skips:
        print(f"skipped {message}", file=sys.stderr)


def _cmd_import_phishtank(args) -> int:
    skips: list = []
    records = parse_phishtank_csv(_read(args.csv), skips)
    count = ArchiveStore(args.archive).append_many(records)
    _report_skips(skips)
    print(f"imported {count} records into {args.archive} ({len(skips)} rows skipped)")
    return 0


def _cmd_import_urls(args) -> int:
    skips: list = []
    records = parse_url_list(_read(args.file), args.label, skips)
    count = ArchiveStore(args.archive).append_many(records)
    _report_skips(skips)
    print(f"imported {count} records into {args.archive} ({len(skips)} lines skipped)")
    return 0


def _cmd_extract(args) -> int:
    records = ArchiveStore(args.archive).read_all()
    if args.max_age_days is not None:
        records = filter_stale(records, max_age_days=args.max_age_days)
    matrix = export_feature_matrix(records, _load_cfg(args.config))
    Path(args.out).write_text(matrix, encoding="utf-8")
    print(f"extracted {len(records)} records to {args.out}")
    return 0


def _parse_layers(text: str) -> list:
    try:
        sizes = [int(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise ConfigError(f"bad --layers value: {text!r}") from None
    return sizes


def _cmd_train(args) -> int:
    examples = parse_feature_matrix(_read(args.features))
    layers = _parse_layers(args.layers)
    if len(layers) < 2:
        raise ConfigError(f"--layers needs at least input and output sizes, got {args.layers!r}")
    if layers[0] != INDICATOR_COUNT:
        raise ConfigError(f"--layers must start with {INDICATOR_COUNT}, got {layers[0]}")
    if layers[-1] != 1:
        raise ConfigError(f"--layers must end with 1, got {layers[-1]}")
    net = init_network(layers, seed=args.seed)
    cfg = TrainConfig(
        learning_rate=args.lr,
        max_epochs=args.epochs,
        mse_stop=args.mse_stop,
        shuffle=args.shuffle,
        seed=args.seed,
    )
    net, history = train(net, examples, cfg)
    save_model(net, BandThresholds(), args.out)
    print(f"trained {len(history)} epochs, final mse={history[-1]:.6f}")
    print(f"model written to {args.out}")
    return 0


def _cmd_predict(args) -> int:
    net, bands = load_model(args.model)
    if args.fetch:
        record = fetch_record(args.url)
    else:
        page = _read(args.page) if args.page else None
        record = WebsiteRecord(url=args.url, page_source=page)
    verdict = classify(record, net, _load_cfg(args.config), bands)
    print(f"score={verdict.score:.6f} band={verdict.band.value}")
    return 0


def _cmd_evaluate(args) -> int:
    net, bands = load_model(args.model)
    examples = parse_feature_matrix(_read(args.features))
    report = evaluate(net, examples, bands)
    print(report.render_text())
    if args.report:
        Path(args.report).write_text(
            json.dumps(report.as_dict(), indent=2) + "\n", encoding="utf-8"
        )
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="phishnet",
        description="Phishing site prediction: ingest, extract, train, classify.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("import-phishtank", help="load a PhishTank CSV export into an archive")
    p.add_argument("csv")
    p.add_argument("--archive", required=True)
    p.set_defaults(func=_cmd_import_phishtank)

    p = sub.add_parser("import-urls", help="load a plain URL list into an archive")
    p.add_argument("file")
    p.add_argument("--label", required=True, choices=[LEGIT, PHISH])
    p.add_argument("--archive", required=True)
    p.set_defaults(func=_cmd_import_urls)

    p = sub.add_parser("extract", help="extract the feature matrix from an archive")
    p.add_argument("--archive", required=True)
    p.add_argument("--config", default=None)
    p.add_argument("--out", required=True)
    p.add_argument(
        "--max-age-days",
        type=float,
        default=None,
        help="drop records older than this many days (default: keep all)",
    )
    p.set_defaults(func=_cmd_extract)

    p = sub.add_parser("train", help="train a network on a feature matrix CSV")
    p.add_argument("--features", required=True)
    p.add_argument("--layers", default="27,10,1")
    p.add_argument("--lr", type=float, default=0.5)
    p.add_argument("--epochs", type=int, default=200)
    p.add_argument("--mse-stop", type=float, default=0.0)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--shuffle", action="store_true")
    p.add_argument("--out", required=True)
    p.set_defaults(func=_cmd_train)

    p = sub.add_parser("predict", help="score a single URL")
    p.add_argument("--model", required=True)
    p.add_argument("--url", required=True)
    p.add_argument("--page", default=None, help="local HTML file to use as page source")
    p.add_argument("--config", default=None)
    p.add_argument("--fetch", action="store_true", help="fetch the live page (network)")
    p.set_defaults(func=_cmd_predict)

    p = sub.add_parser("evaluate", help="evaluate a model on a feature matrix CSV")
    p.add_argument("--model", required=True)
    p.add_argument("--features", required=True)
    p.add_argument("--report", default=None, help="also write the report as JSON")
    p.set_defaults(func=_cmd_evaluate)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 1
    try:
        return args.func(args)
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (ShapeError, ModelFormatError, ModelVersionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (ExtractionError, FormatError, FetchError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


@dataclass(frozen=True)
class CommandOutcome:
    """One finished command: exit code plus what it printed.

    Machine-readable artifacts land wherever --out/--report pointed.
    """

    exit_code: int
    output: str
    diagnostics: str


def run(argv) -> CommandOutcome:
    """In-process dispatch with both streams captured."""
    out, err = io.StringIO(), io.StringIO()
    with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
        code = main(argv)
    return CommandOutcome(exit_code=code, output=out.getvalue(), diagnostics=err.getvalue())


if __name__ == "__main__":
    sys.exit(main())
