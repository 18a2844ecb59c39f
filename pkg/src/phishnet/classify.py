"""Score banding, record classification, and evaluation reports."""

import enum
from dataclasses import dataclass, field

from .config import ExtractionConfig
from .errors import ConfigError, FormatError, ShapeError
from .features import extract_all
from .indicators import INDICATOR_COUNT
from .network import Network, TrainingExample, forward
from .records import PHISH, WebsiteRecord


class VerdictBand(enum.Enum):
    VERY_LEGITIMATE = "VeryLegitimate"
    LEGITIMATE = "Legitimate"
    SUSPICIOUS = "Suspicious"
    PHISHING = "Phishing"
    VERY_PHISHY = "VeryPhishy"

    @property
    def rank(self) -> int:
        return _BAND_ORDER.index(self)

    def __lt__(self, other):
        if isinstance(other, VerdictBand):
            return self.rank < other.rank
        return NotImplemented

    def __le__(self, other):
        if isinstance(other, VerdictBand):
            return self.rank <= other.rank
        return NotImplemented


_BAND_ORDER = (
    VerdictBand.VERY_LEGITIMATE,
    VerdictBand.LEGITIMATE,
    VerdictBand.SUSPICIOUS,
    VerdictBand.PHISHING,
    VerdictBand.VERY_PHISHY,
)


@dataclass(frozen=True)
class BandThresholds:
    """Four cut points splitting [0,1] into five lower-inclusive intervals."""

    cut_points: tuple = (0.2, 0.4, 0.6, 0.8)

    def __post_init__(self):
        cuts = tuple(float(c) for c in self.cut_points)
        object.__setattr__(self, "cut_points", cuts)
        if len(cuts) != 4:
            raise ConfigError("band thresholds need exactly 4 cut points")
        if not all(0.0 < c < 1.0 for c in cuts):
            raise ConfigError("cut points must lie strictly inside (0, 1)")
        if not all(a < b for a, b in zip(cuts, cuts[1:])):
            raise ConfigError("cut points must be strictly increasing")


@dataclass(frozen=True)
class PhishVerdict:
    score: float
    band: VerdictBand


def band_score(score: float, bands: BandThresholds | None = None) -> VerdictBand:
    """Map a score to its band; cut points belong to the upper band."""
    bands = bands or BandThresholds()
    if not 0.0 <= score <= 1.0:
        raise ValueError(f"score {score!r} outside [0, 1]")
    for cut, band in zip(bands.cut_points, _BAND_ORDER):
        if score < cut:
            return band
    return VerdictBand.VERY_PHISHY


def classify(
    record: WebsiteRecord,
    net: Network,
    cfg: ExtractionConfig | None = None,
    bands: BandThresholds | None = None,
) -> PhishVerdict:
    """Extract, encode, run the network, band the single output score."""
    if net.layer_sizes[0] != INDICATOR_COUNT:
        raise ShapeError(
            f"network expects {net.layer_sizes[0]} inputs, indicators provide {INDICATOR_COUNT}"
        )
    if net.layer_sizes[-1] != 1:
        raise ShapeError("classification needs a single-output network")
    vector = extract_all(record, cfg)
    score = float(forward(net, vector.encode()).output[0])
    return PhishVerdict(score, band_score(score, bands))


def build_dataset(records, cfg: ExtractionConfig | None = None) -> list:
    """Labeled records to training examples; target 1.0 = phish, 0.0 = legit."""
    examples = []
    for record in records:
        if record.label is None:
            raise FormatError(f"record has no label: {record.url}")
        vector = extract_all(record, cfg)
        target = 1.0 if record.label == PHISH else 0.0
        examples.append(TrainingExample(vector.encode(), [target]))
    return examples


@dataclass
class EvalReport:
    tp: int
    fp: int
    tn: int
    fn: int
    accuracy: float
    error_rate: float
    band_histogram: dict = field(default_factory=dict)

    @property
    def total(self) -> int:
        return self.tp + self.fp + self.tn + self.fn

    def as_dict(self) -> dict:
        return {
            "tp": self.tp,
            "fp": self.fp,
            "tn": self.tn,
            "fn": self.fn,
            "accuracy": self.accuracy,
            "error_rate": self.error_rate,
            "band_histogram": dict(self.band_histogram),
        }

    def render_text(self) -> str:
        lines = [
            f"examples: {self.total}",
            f"tp={self.tp} fp={self.fp} tn={self.tn} fn={self.fn}",
            f"accuracy: {self.accuracy:.4f}",
            f"error_rate: {self.error_rate:.4f}",
            "bands:",
        ]
        for band in _BAND_ORDER:
            lines.append(f"  {band.value}: {self.band_histogram.get(band.value, 0)}")
        return "\n".join(lines)


def evaluate(
    net: Network, examples, bands: BandThresholds | None = None
) -> EvalReport:
    """Binary confusion counts at the 0.5 threshold plus a verdict histogram."""
    if not examples:
        raise ConfigError("evaluate needs a non-empty example list")
    bands = bands or BandThresholds()
    tp = fp = tn = fn = 0
    histogram = {band.value: 0 for band in _BAND_ORDER}
    for ex in examples:
        score = float(forward(net, ex.input).output[0])
        histogram[band_score(score, bands).value] += 1
        predicted_phish = score >= 0.5
        actual_phish = float(ex.target[0]) >= 0.5
        if predicted_phish and actual_phish:
            tp += 1
        elif predicted_phish:
            fp += 1
        elif actual_phish:
            fn += 1
        else:
            tn += 1
    accuracy = (tp + tn) / len(examples)
    return EvalReport(tp, fp, tn, fn, accuracy, 1.0 - accuracy, histogram)
