"""Tunable extraction settings: thresholds, keyword lists, missing-evidence policy."""

import json
from dataclasses import dataclass, field, fields
from importlib.resources import files

from .errors import ConfigError, FormatError
from .indicators import IndicatorValue

DEFAULT_TRUSTED_CA_NAMES = (
    "digicert",
    "verisign",
    "geotrust",
    "globalsign",
    "comodo",
    "sectigo",
    "entrust",
    "godaddy",
    "thawte",
    "let's encrypt",
    "isrg",
    "rapidssl",
    "amazon",
    "google trust services",
    "baltimore",
    "symantec",
    "quovadis",
    "certum",
)

DEFAULT_BRAND_TOKENS = (
    "sbi",
    "paypal",
    "ebay",
    "amazon",
    "apple",
    "google",
    "microsoft",
    "netflix",
    "facebook",
    "instagram",
    "whatsapp",
    "linkedin",
    "yahoo",
    "hdfc",
    "icici",
    "axis",
    "citibank",
    "chase",
    "wellsfargo",
    "barclays",
    "hsbc",
    "santander",
)

DEFAULT_SECURITY_KEYWORDS = (
    "secure",
    "security",
    "verify",
    "verification",
    "authenticate",
    "authentication",
    "confirm",
    "ssl",
    "encrypt",
    "protection",
    "safety",
)

DEFAULT_GENERIC_SALUTATIONS = (
    "dear customer",
    "dear user",
    "dear member",
    "dear client",
    "dear account holder",
    "dear valued customer",
    "dear sir/madam",
    "attention customer",
    "valued customer",
)

DEFAULT_URGENCY_PHRASES = (
    "immediately",
    "urgent",
    "urgently",
    "within 24 hours",
    "within 48 hours",
    "account will be suspended",
    "account will be closed",
    "account will be locked",
    "act now",
    "final notice",
    "final warning",
    "expires today",
    "right away",
)


def load_default_dictionary() -> frozenset[str]:
    """Bundled word list for the spelling-error indicator."""
    text = files("phishnet").joinpath("data/words.txt").read_text(encoding="utf-8")
    return frozenset(
        line.strip() for line in text.splitlines() if line.strip() and not line.startswith("#")
    )


@dataclass(frozen=True)
class ExtractionConfig:
    """Thresholds and keyword lists driving the 27 indicator rules.

    Threshold pairs are (lo, hi) band edges; keyword lists are lowercase.
    """

    url_length_thresholds: tuple[int, int] = (54, 75)
    external_anchor_ratio_thresholds: tuple[float, float] = (0.31, 0.67)
    external_resource_ratio_thresholds: tuple[float, float] = (0.22, 0.61)
    misspelling_ratio_thresholds: tuple[float, float] = (0.01, 0.03)
    redirect_count_thresholds: tuple[int, int] = (1, 3)
    hex_escape_path_threshold: int = 5
    trusted_ca_names: tuple[str, ...] = DEFAULT_TRUSTED_CA_NAMES
    brand_tokens: tuple[str, ...] = DEFAULT_BRAND_TOKENS
    security_keywords: tuple[str, ...] = DEFAULT_SECURITY_KEYWORDS
    generic_salutations: tuple[str, ...] = DEFAULT_GENERIC_SALUTATIONS
    urgency_phrases: tuple[str, ...] = DEFAULT_URGENCY_PHRASES
    missing_evidence_value: IndicatorValue = IndicatorValue.DOUBTFUL
    dictionary: frozenset[str] = field(default_factory=load_default_dictionary)

    def __post_init__(self):
        for name in (
            "url_length_thresholds",
            "external_anchor_ratio_thresholds",
            "external_resource_ratio_thresholds",
            "misspelling_ratio_thresholds",
            "redirect_count_thresholds",
        ):
            lo, hi = getattr(self, name)
            if not lo < hi:
                raise ConfigError(f"{name}: lower threshold {lo} must be < upper {hi}")
        for name in (
            "trusted_ca_names",
            "brand_tokens",
            "security_keywords",
            "generic_salutations",
            "urgency_phrases",
        ):
            for entry in getattr(self, name):
                if entry != entry.lower():
                    raise ConfigError(f"{name}: keyword {entry!r} must be lowercase")


_PAIR_KEYS = {
    "url_length_thresholds": int,
    "external_anchor_ratio_thresholds": float,
    "external_resource_ratio_thresholds": float,
    "misspelling_ratio_thresholds": float,
    "redirect_count_thresholds": int,
}
_LIST_KEYS = (
    "trusted_ca_names",
    "brand_tokens",
    "security_keywords",
    "generic_salutations",
    "urgency_phrases",
)


def load_extraction_config(path: str) -> ExtractionConfig:
    """Read an ExtractionConfig from a JSON file.

    Keys match the ExtractionConfig field names; unknown keys are rejected.
    ``missing_evidence_value`` is one of "legitimate", "doubtful", "phishy";
    ``dictionary`` is a list of words replacing the bundled word list.
    """
    try:
        with open(path, encoding="utf-8") as fh:
            raw = json.load(fh)
    except json.JSONDecodeError as exc:
        raise FormatError(f"config file {path}: invalid JSON ({exc})") from exc
    if not isinstance(raw, dict):
        raise FormatError(f"config file {path}: top level must be an object")

    known = {f.name for f in fields(ExtractionConfig)}
    unknown = set(raw) - known
    if unknown:
        raise ConfigError(f"config file {path}: unknown keys {sorted(unknown)}")

    kwargs = {}
    for key, value in raw.items():
        if key in _PAIR_KEYS:
            if not (isinstance(value, list) and len(value) == 2):
                raise ConfigError(f"config key {key}: expected [lo, hi]")
            cast = _PAIR_KEYS[key]
            kwargs[key] = (cast(value[0]), cast(value[1]))
        elif key == "hex_escape_path_threshold":
            kwargs[key] = int(value)
        elif key in _LIST_KEYS:
            kwargs[key] = tuple(str(v) for v in value)
        elif key == "missing_evidence_value":
            try:
                kwargs[key] = IndicatorValue[str(value).upper()]
            except KeyError:
                raise ConfigError(
                    f"config key missing_evidence_value: {value!r} is not one of "
                    "legitimate/doubtful/phishy"
                ) from None
        elif key == "dictionary":
            kwargs[key] = frozenset(str(v).lower() for v in value)
    return ExtractionConfig(**kwargs)
