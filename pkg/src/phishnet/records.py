"""Website observation records: the raw evidence indicators are computed from."""

from dataclasses import dataclass, field
from datetime import datetime, timezone
from urllib.parse import urlsplit

PHISH = "phish"
LEGIT = "legit"


@dataclass(frozen=True)
class CertEvidence:
    issuer: str
    subject_common_name: str
    valid: bool
    self_signed: bool


@dataclass(frozen=True)
class DnsEvidence:
    resolvable: bool
    domain_age_days: float | None = None


@dataclass
class WebsiteRecord:
    """One candidate site plus whatever evidence was captured for it.

    Only ``url`` is required; every indicator tolerates missing evidence.
    """

    url: str
    page_source: str | None = None
    response_headers: list[tuple[str, str]] | None = None
    redirect_chain: list[str] | None = None
    cert_evidence: CertEvidence | None = None
    dns_evidence: DnsEvidence | None = None
    lure_text: str | None = None
    observed_at: datetime = field(default_factory=lambda: datetime.now(timezone.utc))
    label: str | None = None  # PHISH, LEGIT or None


def is_absolute_url(url: str) -> bool:
    """True when the URL has both a scheme and a host."""
    try:
        parts = urlsplit(url)
    except ValueError:
        return False
    return bool(parts.scheme) and bool(parts.netloc)
