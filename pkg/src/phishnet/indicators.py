"""The 27 ternary phishing indicators: identities, values, encoding.

Indicator order is fixed and load-bearing: feature vectors, CSV columns and
network inputs all follow the canonical order defined by ``INDICATORS``.
"""

import enum
from dataclasses import dataclass

from .errors import ShapeError


class IndicatorValue(enum.Enum):
    """Ternary verdict for a single indicator. The enum value is its encoding."""

    LEGITIMATE = 0.0
    DOUBTFUL = 0.5
    PHISHY = 1.0

    def __lt__(self, other):
        if not isinstance(other, IndicatorValue):
            return NotImplemented
        return self.value < other.value

    def __le__(self, other):
        if not isinstance(other, IndicatorValue):
            return NotImplemented
        return self.value <= other.value


def encode_value(v: IndicatorValue) -> float:
    """Fixed numeric encoding: Legitimate=0.0, Doubtful=0.5, Phishy=1.0."""
    return v.value


class Criterion(enum.Enum):
    URL_DOMAIN_IDENTITY = "url_domain_identity"
    SECURITY_ENCRYPTION = "security_encryption"
    SOURCE_CODE_JAVASCRIPT = "source_code_javascript"
    PAGE_STYLE_CONTENTS = "page_style_contents"
    WEB_ADDRESS_BAR = "web_address_bar"
    SOCIAL_HUMAN_FACTOR = "social_human_factor"


@dataclass(frozen=True)
class IndicatorId:
    criterion: Criterion
    index: int  # 1-based position within the criterion group
    name: str  # stable snake_case identifier


def _group(criterion: Criterion, names: list[str]) -> list[IndicatorId]:
    return [IndicatorId(criterion, i, n) for i, n in enumerate(names, start=1)]


# Canonical order: criterion groups partitioned 5/4/5/5/5/3.
INDICATORS: tuple[IndicatorId, ...] = tuple(
    _group(
        Criterion.URL_DOMAIN_IDENTITY,
        [
            "using_ip_address",
            "abnormal_request_url",
            "abnormal_url_of_anchor",
            "abnormal_dns_record",
            "abnormal_url",
        ],
    )
    + _group(
        Criterion.SECURITY_ENCRYPTION,
        [
            "ssl_certificate",
            "certificate_authority",
            "abnormal_cookie",
            "distinguished_names_certificate",
        ],
    )
    + _group(
        Criterion.SOURCE_CODE_JAVASCRIPT,
        [
            "redirect_pages",
            "straddling_attack",
            "pharming_attack",
            "onmouseover_hide_link",
            "server_form_handler",
        ],
    )
    + _group(
        Criterion.PAGE_STYLE_CONTENTS,
        [
            "spelling_errors",
            "copying_website",
            "forms_with_submit",
            "popup_windows",
            "disabling_right_click",
        ],
    )
    + _group(
        Criterion.WEB_ADDRESS_BAR,
        [
            "long_url_address",
            "replacing_similar_char",
            "prefix_suffix",
            "at_symbol",
            "hex_char_codes",
        ],
    )
    + _group(
        Criterion.SOCIAL_HUMAN_FACTOR,
        [
            "emphasis_on_security",
            "generic_salutation",
            "buying_time",
        ],
    )
)

INDICATOR_NAMES: tuple[str, ...] = tuple(ind.name for ind in INDICATORS)
INDICATOR_COUNT = len(INDICATORS)

_BY_NAME = {ind.name: ind for ind in INDICATORS}


def indicator_by_name(name: str) -> IndicatorId:
    try:
        return _BY_NAME[name]
    except KeyError:
        raise KeyError(f"unknown indicator: {name!r}") from None


@dataclass(frozen=True)
class FeatureVector:
    """Ordered 27-slot vector of indicator values (canonical order)."""

    values: tuple[IndicatorValue, ...]

    def __post_init__(self):
        if len(self.values) != INDICATOR_COUNT:
            raise ShapeError(
                f"feature vector must have {INDICATOR_COUNT} values, got {len(self.values)}"
            )

    def encode(self) -> list[float]:
        """Numeric encoding of all slots, each in {0.0, 0.5, 1.0}."""
        return [encode_value(v) for v in self.values]

    def __getitem__(self, name: str) -> IndicatorValue:
        return self.values[INDICATOR_NAMES.index(name)]

    def as_dict(self) -> dict[str, IndicatorValue]:
        return dict(zip(INDICATOR_NAMES, self.values))
