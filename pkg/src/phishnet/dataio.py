"""Dataset ingestion, the record archive, CSV matrices, splits, persistence.

File formats:
  - archive: UTF-8 JSON object per line, field names matching WebsiteRecord
  - feature matrix: CSV, 27 canonical indicator columns plus "label",
    values rendered as 0, 0.5, 1
  - model: single JSON document, format_version checked on load
"""

import csv
import io
import json
import logging
import math
import socket
import ssl
import warnings
from dataclasses import asdict, dataclass
from datetime import datetime, timezone
from pathlib import Path
from urllib.parse import urlsplit

import numpy as np
import requests
from cryptography import x509
from cryptography.x509.oid import NameOID

from .classify import BandThresholds
from .config import ExtractionConfig
from .errors import (
    ConfigError,
    FetchError,
    FormatError,
    ModelFormatError,
    ModelVersionError,
    ShapeError,
)
from .features import extract_all
from .indicators import INDICATOR_COUNT, INDICATOR_NAMES, IndicatorValue
from .network import Network, TrainingExample
from .records import (
    LEGIT,
    PHISH,
    CertEvidence,
    DnsEvidence,
    WebsiteRecord,
    is_absolute_url,
)

log = logging.getLogger(__name__)

MODEL_FORMAT_VERSION = 1
DEFAULT_MAX_AGE_DAYS = 2.25  # average live time of a phishing site


def _parse_timestamp(text: str) -> datetime:
    text = text.strip()
    if text.endswith("Z"):
        text = text[:-1] + "+00:00"
    stamp = datetime.fromisoformat(text)
    if stamp.tzinfo is None:
        stamp = stamp.replace(tzinfo=timezone.utc)
    return stamp


def parse_phishtank_csv(content: str, errors: list | None = None) -> list:
    """PhishTank export rows to records; every row is labeled phish.

    Rows with a bad URL or timestamp are skipped; a message per skip is
    logged and, when ``errors`` is a list, appended to it.
    """
    reader = csv.DictReader(io.StringIO(content))
    try:
        fieldnames = reader.fieldnames or []
    except csv.Error as exc:
        raise FormatError(f"unreadable CSV header: {exc}") from exc
    for required in ("url", "submission_time"):
        if required not in fieldnames:
            raise FormatError(f"missing required column: {required}")

    records = []
    row_number = 1
    while True:
        row_number += 1
        try:
            row = next(reader)
        except StopIteration:
            break
        except csv.Error as exc:
            _report_row(errors, f"row {row_number}: unreadable CSV row: {exc}")
            continue
        url = (row.get("url") or "").strip()
        stamp_text = (row.get("submission_time") or "").strip()
        if not is_absolute_url(url):
            _report_row(errors, f"row {row_number}: not a URL: {url!r}")
            continue
        try:
            observed = _parse_timestamp(stamp_text)
        except ValueError:
            _report_row(errors, f"row {row_number}: bad submission_time: {stamp_text!r}")
            continue
        records.append(WebsiteRecord(url=url, observed_at=observed, label=PHISH))
    return records


def _report_row(errors: list | None, message: str) -> None:
    log.warning("%s", message)
    if errors is not None:
        errors.append(message)


def parse_url_list(content: str, label: str, errors: list | None = None) -> list:
    """One URL per line; blank lines and '#' comments ignored."""
    if label not in (PHISH, LEGIT):
        raise ConfigError(f"label must be {PHISH!r} or {LEGIT!r}, got {label!r}")
    now = datetime.now(timezone.utc)
    records = []
    for line_number, raw in enumerate(content.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if not is_absolute_url(line):
            _report_row(errors, f"line {line_number}: not a URL: {line!r}")
            continue
        records.append(WebsiteRecord(url=line, observed_at=now, label=label))
    return records


def _as_utc(stamp: datetime) -> datetime:
    return stamp.replace(tzinfo=timezone.utc) if stamp.tzinfo is None else stamp


def filter_stale(records, now: datetime | None = None, max_age_days: float = DEFAULT_MAX_AGE_DAYS):
    """Keep records no older than max_age_days; None/inf disables the filter."""
    if max_age_days is None or math.isinf(max_age_days):
        return list(records)
    reference = _as_utc(now) if now is not None else datetime.now(timezone.utc)
    kept = []
    for record in records:
        age_days = (reference - _as_utc(record.observed_at)).total_seconds() / 86400.0
        if age_days <= max_age_days:
            kept.append(record)
    return kept


# --- feature matrix CSV ------------------------------------------------------

_VALUE_TEXT = {0.0: "0", 0.5: "0.5", 1.0: "1"}
_TEXT_VALUE = {
    "0": IndicatorValue.LEGITIMATE,
    "0.0": IndicatorValue.LEGITIMATE,
    "0.5": IndicatorValue.DOUBTFUL,
    "1": IndicatorValue.PHISHY,
    "1.0": IndicatorValue.PHISHY,
}


def _label_text(label) -> str:
    if label in (PHISH, "1", 1, 1.0, True):
        return "1"
    if label in (LEGIT, "0", 0, 0.0, False):
        return "0"
    raise FormatError(f"unrecognized label: {label!r}")


def feature_matrix_csv(vectors, labels) -> str:
    """Render already-extracted vectors and labels as the matrix CSV."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow([*INDICATOR_NAMES, "label"])
    for vector, label in zip(vectors, labels):
        writer.writerow([_VALUE_TEXT[v.value] for v in vector.values] + [_label_text(label)])
    return buf.getvalue()


def export_feature_matrix(records, cfg: ExtractionConfig | None = None) -> str:
    """Extract every labeled record into one CSV row (header always present)."""
    vectors, labels = [], []
    for record in records:
        if record.label is None:
            raise FormatError(f"record has no label: {record.url}")
        vectors.append(extract_all(record, cfg))
        labels.append(record.label)
    return feature_matrix_csv(vectors, labels)


def parse_feature_matrix(content: str) -> list:
    """Matrix CSV back to training examples (targets 0.0/1.0)."""
    reader = csv.reader(io.StringIO(content))
    try:
        header = next(reader)
    except StopIteration:
        raise FormatError("empty feature matrix") from None
    except csv.Error as exc:
        raise FormatError(f"unreadable CSV header: {exc}") from exc
    if header != [*INDICATOR_NAMES, "label"]:
        raise FormatError("unexpected feature matrix header")
    examples = []
    try:
        rows = list(reader)
    except csv.Error as exc:
        raise FormatError(f"unreadable CSV body: {exc}") from exc
    for row_number, row in enumerate(rows, start=2):
        if not row:
            continue
        if len(row) != INDICATOR_COUNT + 1:
            raise FormatError(
                f"row {row_number}: expected {INDICATOR_COUNT + 1} columns, got {len(row)}"
            )
        try:
            values = [_TEXT_VALUE[cell.strip()].value for cell in row[:-1]]
        except KeyError as exc:
            raise FormatError(f"row {row_number}: bad indicator value {exc.args[0]!r}") from None
        label = row[-1].strip()
        if label not in ("0", "1"):
            raise FormatError(f"row {row_number}: bad label {label!r}")
        examples.append(TrainingExample(values, [float(label)]))
    return examples


# --- splitting ---------------------------------------------------------------


@dataclass
class DatasetSplit:
    train: list
    test: list
    seed: int
    train_fraction: float


def split_dataset(examples, train_fraction: float, seed: int = 0) -> DatasetSplit:
    """Seeded shuffle, then cut at round(fraction * n), clamped to [1, n-1]."""
    examples = list(examples)
    if not 0.0 < train_fraction < 1.0:
        raise ConfigError(f"train_fraction must be in (0, 1), got {train_fraction}")
    if len(examples) < 2:
        raise ConfigError("need at least 2 examples to split")
    order = np.random.default_rng(seed).permutation(len(examples))
    n_train = max(1, min(len(examples) - 1, round(train_fraction * len(examples))))
    return DatasetSplit(
        train=[examples[i] for i in order[:n_train]],
        test=[examples[i] for i in order[n_train:]],
        seed=seed,
        train_fraction=train_fraction,
    )


# --- model persistence -------------------------------------------------------


def save_model(net: Network, bands: BandThresholds, path) -> None:
    doc = {
        "format_version": MODEL_FORMAT_VERSION,
        "layer_sizes": list(net.layer_sizes),
        "activation": net.activation,
        "weights": [w.tolist() for w in net.weights],
        "band_thresholds": list(bands.cut_points),
    }
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(doc, fh)
        fh.write("\n")


def load_model(path):
    """Returns (Network, BandThresholds); validates version, fields, shapes."""
    with open(path, encoding="utf-8") as fh:
        try:
            doc = json.load(fh)
        except json.JSONDecodeError as exc:
            raise ModelFormatError(f"corrupt model file {path}: {exc}") from None
    if not isinstance(doc, dict):
        raise ModelFormatError(f"corrupt model file {path}: not an object")
    version = doc.get("format_version")
    if version != MODEL_FORMAT_VERSION:
        raise ModelVersionError(
            f"unsupported model format_version {version!r}, expected {MODEL_FORMAT_VERSION}"
        )
    try:
        layer_sizes = tuple(int(n) for n in doc["layer_sizes"])
        activation = doc["activation"]
        raw_weights = doc["weights"]
        cut_points = tuple(doc["band_thresholds"])
    except (KeyError, TypeError, ValueError) as exc:
        raise ModelFormatError(f"corrupt model file {path}: {exc}") from None
    if activation != "sigmoid":
        raise ModelFormatError(f"unsupported activation {activation!r}")
    try:
        weights = [np.asarray(m, dtype=float) for m in raw_weights]
    except (TypeError, ValueError) as exc:
        raise ModelFormatError(f"corrupt model file {path}: {exc}") from None
    if len(weights) != len(layer_sizes) - 1:
        raise ShapeError(
            f"model has {len(weights)} weight matrices for {len(layer_sizes)} layers"
        )
    for idx, (w, n_in, n_out) in enumerate(zip(weights, layer_sizes, layer_sizes[1:])):
        if w.shape != (n_in + 1, n_out):
            raise ShapeError(
                f"weight matrix {idx} has shape {w.shape}, expected {(n_in + 1, n_out)}"
            )
    return Network(layer_sizes, weights), BandThresholds(cut_points)


# --- record archive ----------------------------------------------------------


def _record_to_dict(record: WebsiteRecord) -> dict:
    return {
        "url": record.url,
        "page_source": record.page_source,
        "response_headers": (
            [list(h) for h in record.response_headers]
            if record.response_headers is not None
            else None
        ),
        "redirect_chain": (
            list(record.redirect_chain) if record.redirect_chain is not None else None
        ),
        "cert_evidence": asdict(record.cert_evidence) if record.cert_evidence else None,
        "dns_evidence": asdict(record.dns_evidence) if record.dns_evidence else None,
        "lure_text": record.lure_text,
        "observed_at": record.observed_at.isoformat(),
        "label": record.label,
    }


def _record_from_dict(doc: dict) -> WebsiteRecord:
    headers = doc.get("response_headers")
    chain = doc.get("redirect_chain")
    cert = doc.get("cert_evidence")
    dns = doc.get("dns_evidence")
    return WebsiteRecord(
        url=doc["url"],
        page_source=doc.get("page_source"),
        response_headers=[tuple(h) for h in headers] if headers is not None else None,
        redirect_chain=list(chain) if chain is not None else None,
        cert_evidence=CertEvidence(**cert) if cert else None,
        dns_evidence=DnsEvidence(**dns) if dns else None,
        lure_text=doc.get("lure_text"),
        observed_at=_parse_timestamp(doc["observed_at"]),
        label=doc.get("label"),
    )


class ArchiveStore:
    """Append-only record archive, one JSON object per line.

    Single writer, any number of readers; concurrent appends need external
    locking.
    """

    def __init__(self, path):
        self.path = Path(path)

    def append(self, record: WebsiteRecord) -> None:
        self.append_many([record])

    def append_many(self, records) -> int:
        count = 0
        with open(self.path, "a", encoding="utf-8") as fh:
            for record in records:
                fh.write(json.dumps(_record_to_dict(record)))
                fh.write("\n")
                count += 1
        return count

    def __iter__(self):
        with open(self.path, encoding="utf-8") as fh:
            for line_number, line in enumerate(fh, start=1):
                line = line.strip()
                if not line:
                    continue
                try:
                    doc = json.loads(line)
                    yield _record_from_dict(doc)
                except (json.JSONDecodeError, KeyError, TypeError, ValueError) as exc:
                    raise FormatError(
                        f"{self.path}:{line_number}: corrupt archive line: {exc}"
                    ) from None

    def read_all(self) -> list:
        return list(self)

    def by_url(self, url: str) -> list:
        return [r for r in self if r.url == url]


# --- live collection ---------------------------------------------------------


def _name_cn(name: "x509.Name") -> str:
    attrs = name.get_attributes_for_oid(NameOID.COMMON_NAME)
    return str(attrs[0].value) if attrs else name.rfc4514_string()


def _collect_cert(host: str, port: int, timeout: float) -> CertEvidence | None:
    der = None
    valid = False
    for verify in (True, False):
        ctx = ssl.create_default_context()
        if not verify:
            ctx.check_hostname = False
            ctx.verify_mode = ssl.CERT_NONE
        try:
            with socket.create_connection((host, port), timeout=timeout) as sock:
                with ctx.wrap_socket(sock, server_hostname=host) as tls:
                    der = tls.getpeercert(binary_form=True)
            valid = verify
            break
        except (ssl.SSLError, OSError):
            continue
    if der is None:
        return None
    cert = x509.load_der_x509_certificate(der)
    return CertEvidence(
        issuer=_name_cn(cert.issuer),
        subject_common_name=_name_cn(cert.subject),
        valid=valid,
        self_signed=cert.issuer == cert.subject,
    )


def fetch_record(url: str, timeout: float = 10.0) -> WebsiteRecord:
    """Best-effort live collection; optional evidence stays None when
    unretrievable, but an unreachable site is a hard FetchError."""
    if not is_absolute_url(url):
        raise FetchError(f"not an absolute URL: {url}")
    parts = urlsplit(url)
    if parts.scheme not in ("http", "https"):
        raise FetchError(f"unsupported scheme: {parts.scheme!r}")
    try:
        resp = requests.get(url, timeout=timeout, allow_redirects=True)
    except requests.exceptions.SSLError:
        try:
            with warnings.catch_warnings():
                warnings.simplefilter("ignore")
                resp = requests.get(url, timeout=timeout, allow_redirects=True, verify=False)
        except requests.RequestException as exc:
            raise FetchError(f"fetch failed for {url}: {exc}") from None
    except requests.RequestException as exc:
        raise FetchError(f"fetch failed for {url}: {exc}") from None

    cert = None
    if parts.scheme == "https":
        cert = _collect_cert(parts.hostname, parts.port or 443, timeout)
    return WebsiteRecord(
        url=url,
        page_source=resp.text,
        response_headers=list(resp.headers.items()),
        redirect_chain=[h.url for h in resp.history] + [resp.url],
        cert_evidence=cert,
        dns_evidence=DnsEvidence(resolvable=True),
        observed_at=datetime.now(timezone.utc),
    )
