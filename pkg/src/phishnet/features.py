"""The 27 indicator rules and the feature-extraction front door.

Each rule is a pure function of (record, config). Rules that need evidence a
record does not carry return ``cfg.missing_evidence_value`` instead of
failing, so extraction is total for any record with a valid URL.
"""

import ipaddress
import re
from urllib.parse import urljoin, urlsplit

from .config import ExtractionConfig
from .errors import ExtractionError
from .html_scan import PageScan, scan_page
from .indicators import INDICATORS, FeatureVector, IndicatorId, IndicatorValue, indicator_by_name
from .records import WebsiteRecord
from .suffixes import public_suffix, registered_label, same_registered_domain

LEGITIMATE = IndicatorValue.LEGITIMATE
DOUBTFUL = IndicatorValue.DOUBTFUL
PHISHY = IndicatorValue.PHISHY

MILD_URGENCY_PHRASES = ("soon", "shortly")

_HEX_ESCAPE = re.compile(r"%[0-9A-Fa-f]{2}")
_HEX_LABEL = re.compile(r"^(0x[0-9A-Fa-f]+|\d+)$")
_LOCATION_WRITE = re.compile(
    r"location\s*\.\s*(?:href|assign|replace)\s*[=(]"
    r"|(?:window|document|top|self)\s*\.\s*location\s*="
)
_WINDOW_OPEN = re.compile(r"window\s*\.\s*open\s*\(")
_HREF_REWRITE = re.compile(r"\.\s*href\s*=|setAttribute\s*\(\s*['\"]href")
_CONTEXT_SUPPRESS = re.compile(r"return\s+false|preventDefault")
_ALERT_CALL = re.compile(r"alert\s*\(")
_SALUTATION = re.compile(r"\b(dear|hello|hi|hey)\b[\s,]+\S+")
_URL_IN_TEXT = re.compile(r"(?:(https?)://([^\s<>\"']+))|(?:\b(www\.[\w-]+(?:\.[\w-]+)+))", re.I)
_COOKIE_DOMAIN = re.compile(r"(?:^|;)\s*domain\s*=\s*([^;,\s]+)", re.I)
_WORD = re.compile(r"[a-z]+")

# ASCII confusables the address bar cannot distinguish at a glance.
_CONFUSABLE_TRANSLATE = str.maketrans({"0": "o", "1": "l"})
# Unicode homoglyphs commonly smuggled in via punycode labels.
_HOMOGLYPHS = str.maketrans(
    {
        "а": "a", "е": "e", "о": "o", "р": "p", "с": "c", "х": "x", "у": "y",
        "і": "i", "ј": "j", "ѕ": "s", "һ": "h", "ԛ": "q", "ԝ": "w",
        "ο": "o", "ν": "v", "α": "a", "ı": "i", "ɩ": "i", "ℓ": "l",
    }
)


def _host_of(url: str, indicator: str) -> str:
    try:
        parts = urlsplit(url)
        host = parts.hostname
    except ValueError:
        host = None
    if not host or not parts.scheme:
        raise ExtractionError("cannot parse URL host", indicator=indicator, url=url)
    return host.lower()


def is_ip_literal(host: str) -> bool:
    """Dotted-decimal, hexadecimal, plain-integer or IPv6 host literal."""
    host = host.strip("[]").lower()
    try:
        ipaddress.ip_address(host)
        return True
    except ValueError:
        pass
    if re.fullmatch(r"0x[0-9a-f]+", host):
        return int(host, 16) < 2**32
    if re.fullmatch(r"\d+", host):
        return int(host) < 2**32
    parts = host.split(".")
    if 2 <= len(parts) <= 4 and all(_HEX_LABEL.match(p) for p in parts):
        return any(p.startswith("0x") for p in parts)
    return False


def _non_suffix_part(host: str) -> str:
    """Host labels left of the public suffix (registrable part + subdomains)."""
    suffix = public_suffix(host)
    if host == suffix:
        return ""
    return host[: -(len(suffix) + 1)] if suffix else host


def _is_external(page_host: str, link: str, base_url: str) -> bool:
    try:
        parts = urlsplit(urljoin(base_url, link.strip()))
    except ValueError:
        return False
    if parts.scheme in ("javascript", "mailto", "data", "tel", "about"):
        return False
    try:
        link_host = parts.hostname
    except ValueError:
        return False
    if not link_host:
        return False
    return not same_registered_domain(page_host, link_host.lower())


def _scan(record: WebsiteRecord) -> PageScan:
    return scan_page(record.page_source or "")


def _band_low_open(measured, lo, hi) -> IndicatorValue:
    """< lo Legitimate, [lo, hi] Doubtful, > hi Phishy."""
    if measured < lo:
        return LEGITIMATE
    if measured <= hi:
        return DOUBTFUL
    return PHISHY


def _band_low_closed(measured, lo, hi) -> IndicatorValue:
    """<= lo Legitimate, (lo, hi] Doubtful, > hi Phishy."""
    if measured <= lo:
        return LEGITIMATE
    if measured <= hi:
        return DOUBTFUL
    return PHISHY


# --- URL & domain identity -------------------------------------------------


def ip_address_indicator(url: str) -> IndicatorValue:
    """Phishy when the host is an IP literal of any spelling."""
    host = _host_of(url, "using_ip_address")
    return PHISHY if is_ip_literal(host) else LEGITIMATE


def request_url_indicator(record: WebsiteRecord, cfg: ExtractionConfig) -> IndicatorValue:
    """External-domain share of img/script/stylesheet resources."""
    if record.page_source is None:
        return cfg.missing_evidence_value
    page = _scan(record)
    if not page.resource_urls:
        return LEGITIMATE
    host = _host_of(record.url, "abnormal_request_url")
    external = sum(1 for u in page.resource_urls if _is_external(host, u, record.url))
    lo, hi = cfg.external_resource_ratio_thresholds
    return _band_low_open(external / len(page.resource_urls), lo, hi)


def anchor_url_indicator(record: WebsiteRecord, cfg: ExtractionConfig) -> IndicatorValue:
    """Share of anchors pointing off-domain, to '#', or into script schemes."""
    if record.page_source is None:
        return cfg.missing_evidence_value
    page = _scan(record)
    if not page.anchors:
        return LEGITIMATE
    host = _host_of(record.url, "abnormal_url_of_anchor")
    bad = 0
    for anchor in page.anchors:
        href = (anchor.href or "").strip()
        if not href:
            continue
        if href == "#" or href.lower().startswith("javascript:"):
            bad += 1
        elif _is_external(host, href, record.url):
            bad += 1
    lo, hi = cfg.external_anchor_ratio_thresholds
    return _band_low_open(bad / len(page.anchors), lo, hi)


def dns_record_indicator(record: WebsiteRecord, cfg: ExtractionConfig) -> IndicatorValue:
    """Unresolvable hosts are Phishy; young domains (<180 days) Doubtful."""
    ev = record.dns_evidence
    if ev is None:
        return cfg.missing_evidence_value
    if not ev.resolvable:
        return PHISHY
    if ev.domain_age_days is None:
        return cfg.missing_evidence_value
    return DOUBTFUL if ev.domain_age_days < 180 else LEGITIMATE


def abnormal_url_indicator(record: WebsiteRecord, cfg: ExtractionConfig) -> IndicatorValue:
    """Page title claims a brand the host does not carry."""
    if record.page_source is None:
        return cfg.missing_evidence_value
    page = _scan(record)
    title = page.title.lower()
    claimed = [t for t in cfg.brand_tokens if t in title]
    if not claimed:
        return LEGITIMATE
    host = _host_of(record.url, "abnormal_url")
    label = "" if is_ip_literal(host) else registered_label(host)
    if any(t in label for t in claimed):
        return LEGITIMATE
    if any(t in host for t in claimed):
        return DOUBTFUL
    return PHISHY


# --- Security & encryption -------------------------------------------------


def ssl_indicator(record: WebsiteRecord, cfg: ExtractionConfig) -> IndicatorValue:
    """Plain http is Phishy; https is Legitimate only with a clean certificate."""
    try:
        scheme = urlsplit(record.url).scheme.lower()
    except ValueError:
        scheme = ""
    if scheme != "https":
        return PHISHY
    ce = record.cert_evidence
    if ce is not None and ce.valid and not ce.self_signed:
        return LEGITIMATE
    return DOUBTFUL


def certificate_authority_indicator(
    record: WebsiteRecord, cfg: ExtractionConfig
) -> IndicatorValue:
    ce = record.cert_evidence
    if ce is None:
        return cfg.missing_evidence_value
    if ce.self_signed:
        return PHISHY
    issuer = ce.issuer.lower()
    if any(name in issuer for name in cfg.trusted_ca_names):
        return LEGITIMATE
    return DOUBTFUL


def cookie_indicator(record: WebsiteRecord, cfg: ExtractionConfig) -> IndicatorValue:
    """Set-Cookie Domain attribute must stay within the page host's suffix."""
    headers = record.response_headers
    if headers is None:
        return cfg.missing_evidence_value
    host = _host_of(record.url, "abnormal_cookie")
    for name, value in headers:
        if name.lower() != "set-cookie":
            continue
        m = _COOKIE_DOMAIN.search(value)
        if not m:
            continue
        domain = m.group(1).strip().lstrip(".").lower()
        if not (host == domain or host.endswith("." + domain)):
            return PHISHY
    return LEGITIMATE


def _cn_matches_host(cn: str, host: str) -> bool:
    if cn == host:
        return True
    if cn.startswith("*."):
        base = cn[2:]
        if host == base:
            return True
        if host.endswith("." + base) and "." not in host[: -(len(base) + 1)]:
            return True
    return False


def distinguished_names_indicator(
    record: WebsiteRecord, cfg: ExtractionConfig
) -> IndicatorValue:
    """Certificate subject CN against the host: match, sibling, or stranger."""
    ce = record.cert_evidence
    if ce is None:
        return cfg.missing_evidence_value
    host = _host_of(record.url, "distinguished_names_certificate")
    cn = ce.subject_common_name.strip().lower()
    if cn and _cn_matches_host(cn, host):
        return LEGITIMATE
    bare_cn = cn[2:] if cn.startswith("*.") else cn
    if bare_cn and not is_ip_literal(host) and same_registered_domain(bare_cn, host):
        return DOUBTFUL
    return PHISHY


# --- Source code & JavaScript ----------------------------------------------


def redirect_indicator(record: WebsiteRecord, cfg: ExtractionConfig) -> IndicatorValue:
    """Total redirects seen: HTTP chain + meta refresh + scripted location writes."""
    chain = record.redirect_chain
    if chain is None and record.page_source is None:
        return cfg.missing_evidence_value
    count = max(0, len(chain) - 1) if chain else 0
    if record.page_source is not None:
        page = _scan(record)
        count += len(page.meta_refresh_urls)
        count += sum(len(_LOCATION_WRITE.findall(s)) for s in page.scripts)
    lo, hi = cfg.redirect_count_thresholds
    return _band_low_closed(count, lo, hi)


def straddling_indicator(record: WebsiteRecord, cfg: ExtractionConfig) -> IndicatorValue:
    """Foreign iframe next to a local credential form."""
    if record.page_source is None:
        return cfg.missing_evidence_value
    page = _scan(record)
    host = _host_of(record.url, "straddling_attack")
    foreign_iframe = any(
        src and _is_external(host, src, record.url) for src in page.iframe_srcs
    )
    credential_form = any("password" in f.input_types for f in page.forms)
    if foreign_iframe and credential_form:
        return PHISHY
    if foreign_iframe:
        return DOUBTFUL
    return LEGITIMATE


def _url_claim_in_text(text: str) -> tuple[str, str] | None:
    """(scheme, host) claimed by URL-looking anchor text, if any."""
    m = _URL_IN_TEXT.search(text)
    if not m:
        return None
    if m.group(3):  # bare www.-form, no scheme claimed
        claimed = "http://" + m.group(3)
        scheme = ""
    else:
        claimed = f"{m.group(1)}://{m.group(2)}"
        scheme = m.group(1).lower()
    try:
        host = urlsplit(claimed).hostname
    except ValueError:
        return None
    return (scheme, host.lower().rstrip(".,;:!?")) if host else None


def pharming_indicator(record: WebsiteRecord, cfg: ExtractionConfig) -> IndicatorValue:
    """Anchor text that reads as one URL while the href targets another."""
    if record.page_source is None:
        return cfg.missing_evidence_value
    page = _scan(record)
    verdict = LEGITIMATE
    for anchor in page.anchors:
        if not anchor.href:
            continue
        claim = _url_claim_in_text(anchor.text)
        if claim is None:
            continue
        claimed_scheme, claimed_host = claim
        try:
            href_parts = urlsplit(urljoin(record.url, anchor.href.strip()))
            href_host = (href_parts.hostname or "").lower()
        except ValueError:
            continue
        if not href_host:
            continue
        if not same_registered_domain(claimed_host, href_host):
            return PHISHY
        if claimed_scheme and claimed_scheme != href_parts.scheme.lower():
            verdict = DOUBTFUL
    return verdict


def onmouseover_indicator(record: WebsiteRecord, cfg: ExtractionConfig) -> IndicatorValue:
    """Handlers that fake the status bar or swap the link target."""
    if record.page_source is None:
        return cfg.missing_evidence_value
    page = _scan(record)
    anchor_handlers = [a.onmouseover for a in page.anchors if a.onmouseover]
    for handler in anchor_handlers + page.onmouseover_attrs:
        if "window.status" in handler or _HREF_REWRITE.search(handler):
            return PHISHY
    if anchor_handlers:
        return DOUBTFUL
    return LEGITIMATE


def sfh_indicator(record: WebsiteRecord, cfg: ExtractionConfig) -> IndicatorValue:
    """Server form handler: empty/blank is Phishy, foreign-domain Doubtful."""
    if record.page_source is None:
        return cfg.missing_evidence_value
    page = _scan(record)
    host = _host_of(record.url, "server_form_handler")
    verdict = LEGITIMATE
    for form in page.forms:
        if form.action is None:
            continue
        action = form.action.strip()
        if action == "" or action.lower() == "about:blank":
            return PHISHY
        if _is_external(host, action, record.url):
            verdict = DOUBTFUL
    return verdict


# --- Page style & contents -------------------------------------------------


def spelling_indicator(record: WebsiteRecord, cfg: ExtractionConfig) -> IndicatorValue:
    """Share of page words missing from the dictionary."""
    if record.page_source is None:
        return cfg.missing_evidence_value
    page = _scan(record)
    words = _WORD.findall((page.title + " " + page.text).lower())
    if not words:
        return LEGITIMATE
    # brand names are vocabulary, not typos; bare plurals fall back to the stem
    known = cfg.dictionary | set(cfg.brand_tokens)
    misspelled = sum(
        1
        for w in words
        if w not in known and not (w.endswith("s") and w[:-1] in known)
    )
    lo, hi = cfg.misspelling_ratio_thresholds
    return _band_low_closed(misspelled / len(words), lo, hi)


def copying_website_indicator(record: WebsiteRecord, cfg: ExtractionConfig) -> IndicatorValue:
    """Brand name shown on a page whose domain is not that brand's."""
    if record.page_source is None:
        return cfg.missing_evidence_value
    page = _scan(record)
    host = _host_of(record.url, "copying_website")
    label = "" if is_ip_literal(host) else registered_label(host)
    title = page.title.lower()
    title_brands = [t for t in cfg.brand_tokens if t in title]
    if title_brands:
        return LEGITIMATE if any(t in label for t in title_brands) else PHISHY
    body_brands = [t for t in cfg.brand_tokens if t in page.text.lower()]
    if body_brands and not any(t in label for t in body_brands):
        return DOUBTFUL
    return LEGITIMATE


def forms_with_submit_indicator(
    record: WebsiteRecord, cfg: ExtractionConfig
) -> IndicatorValue:
    """Credential forms posting off-domain or over plain http are Phishy."""
    if record.page_source is None:
        return cfg.missing_evidence_value
    page = _scan(record)
    host = _host_of(record.url, "forms_with_submit")
    verdict = LEGITIMATE
    for form in page.forms:
        if "password" in form.input_types:
            target = urljoin(record.url, (form.action or "").strip())
            try:
                scheme = urlsplit(target).scheme.lower()
            except ValueError:
                scheme = ""
            if scheme == "http" or _is_external(host, target, record.url):
                return PHISHY
        if form.has_submit and any(
            t in ("text", "password", "email") for t in form.input_types
        ):
            verdict = DOUBTFUL
    return verdict


def popup_indicator(record: WebsiteRecord, cfg: ExtractionConfig) -> IndicatorValue:
    """window.open that feeds input fields into the popup."""
    if record.page_source is None:
        return cfg.missing_evidence_value
    source = record.page_source
    opened = False
    for m in _WINDOW_OPEN.finditer(source):
        opened = True
        close = source.find(")", m.end())
        arg = source[m.end() : close if close != -1 else m.end() + 300]
        if "<input" in arg.lower():
            return PHISHY
    return DOUBTFUL if opened else LEGITIMATE


def right_click_indicator(record: WebsiteRecord, cfg: ExtractionConfig) -> IndicatorValue:
    """Context-menu suppression; alert-only interception counts as Doubtful."""
    if record.page_source is None:
        return cfg.missing_evidence_value
    page = _scan(record)
    intercepted_with_alert = False
    for handler in page.oncontextmenu_attrs:
        if _CONTEXT_SUPPRESS.search(handler):
            return PHISHY
        if _ALERT_CALL.search(handler):
            intercepted_with_alert = True
    for script in page.scripts:
        if "contextmenu" in script or re.search(r"event\.button\s*===?\s*2", script):
            if _CONTEXT_SUPPRESS.search(script):
                return PHISHY
            if _ALERT_CALL.search(script):
                intercepted_with_alert = True
    return DOUBTFUL if intercepted_with_alert else LEGITIMATE


# --- Web address bar ---------------------------------------------------------


def url_length_indicator(url: str, cfg: ExtractionConfig) -> IndicatorValue:
    """Character count of the full URL against the (54, 75) band."""
    lo, hi = cfg.url_length_thresholds
    return _band_low_open(len(url), lo, hi)


def _confusable_fold(s: str) -> str:
    return s.translate(_CONFUSABLE_TRANSLATE).replace("rn", "m")


def _decode_punycode_label(label: str) -> str:
    try:
        return label.encode("ascii").decode("idna")
    except (UnicodeError, ValueError):
        return label


def replacing_similar_char_indicator(url: str, cfg: ExtractionConfig) -> IndicatorValue:
    """Confusable characters standing in for a brand name in the host."""
    host = _host_of(url, "replacing_similar_char")
    if is_ip_literal(host):
        return LEGITIMATE
    labels = host.split(".")
    has_punycode = any(l.startswith("xn--") for l in labels)
    decoded = ".".join(
        _decode_punycode_label(l) if l.startswith("xn--") else l for l in labels
    ).translate(_HOMOGLYPHS)
    for token in cfg.brand_tokens:
        if token in host:
            continue
        if token in _confusable_fold(host) or token in _confusable_fold(decoded):
            return PHISHY
    return DOUBTFUL if has_punycode else LEGITIMATE


def prefix_suffix_indicator(url: str, cfg: ExtractionConfig) -> IndicatorValue:
    """Hyphenated domain labels, worst when the hyphen rides a brand token."""
    host = _host_of(url, "prefix_suffix")
    if is_ip_literal(host):
        return LEGITIMATE
    site = _non_suffix_part(host)
    if "-" not in site:
        return LEGITIMATE
    for token in cfg.brand_tokens:
        if f"{token}-" in site or f"-{token}" in site:
            return PHISHY
    return DOUBTFUL


def at_symbol_indicator(url: str) -> IndicatorValue:
    """'@' anywhere in the URL hides the real destination."""
    return PHISHY if "@" in url else LEGITIMATE


def hex_char_indicator(url: str, cfg: ExtractionConfig) -> IndicatorValue:
    """Percent-escapes in the host, or piles of them in the path."""
    try:
        parts = urlsplit(url)
        netloc, path, query = parts.netloc, parts.path, parts.query
    except ValueError:
        netloc, path, query = "", url, ""
    if _HEX_ESCAPE.search(netloc):
        return PHISHY
    path_query = path + (("?" + query) if query else "")
    if len(_HEX_ESCAPE.findall(path_query)) > cfg.hex_escape_path_threshold:
        return DOUBTFUL
    return LEGITIMATE


# --- Social human factor -----------------------------------------------------


def _social_text(record: WebsiteRecord) -> str:
    parts = []
    if record.lure_text:
        parts.append(record.lure_text)
    if record.page_source is not None:
        page = _scan(record)
        parts.append(page.title)
        parts.append(page.text)
    return " ".join(parts).lower()


def emphasis_on_security_indicator(
    record: WebsiteRecord, cfg: ExtractionConfig
) -> IndicatorValue:
    """Security-keyword density across lure text and page copy."""
    text = _social_text(record)
    hits = sum(text.count(k) for k in cfg.security_keywords)
    if hits >= 3:
        return PHISHY
    if hits >= 1:
        return DOUBTFUL
    return LEGITIMATE


def salutation_indicator(record: WebsiteRecord, cfg: ExtractionConfig) -> IndicatorValue:
    """Generic greetings are Phishy; a missing greeting is merely Doubtful."""
    if record.lure_text is None:
        return LEGITIMATE
    text = record.lure_text.lower()
    if any(s in text for s in cfg.generic_salutations):
        return PHISHY
    if _SALUTATION.search(text):
        return LEGITIMATE
    return DOUBTFUL


def buying_time_indicator(record: WebsiteRecord, cfg: ExtractionConfig) -> IndicatorValue:
    """Deadline pressure in the message or page copy."""
    text = _social_text(record)
    if any(p in text for p in cfg.urgency_phrases):
        return PHISHY
    if any(re.search(rf"\b{p}\b", text) for p in MILD_URGENCY_PHRASES):
        return DOUBTFUL
    return LEGITIMATE


# --- Dispatch ----------------------------------------------------------------

_RULES = {
    "using_ip_address": lambda r, c: ip_address_indicator(r.url),
    "abnormal_request_url": request_url_indicator,
    "abnormal_url_of_anchor": anchor_url_indicator,
    "abnormal_dns_record": dns_record_indicator,
    "abnormal_url": abnormal_url_indicator,
    "ssl_certificate": ssl_indicator,
    "certificate_authority": certificate_authority_indicator,
    "abnormal_cookie": cookie_indicator,
    "distinguished_names_certificate": distinguished_names_indicator,
    "redirect_pages": redirect_indicator,
    "straddling_attack": straddling_indicator,
    "pharming_attack": pharming_indicator,
    "onmouseover_hide_link": onmouseover_indicator,
    "server_form_handler": sfh_indicator,
    "spelling_errors": spelling_indicator,
    "copying_website": copying_website_indicator,
    "forms_with_submit": forms_with_submit_indicator,
    "popup_windows": popup_indicator,
    "disabling_right_click": right_click_indicator,
    "long_url_address": lambda r, c: url_length_indicator(r.url, c),
    "replacing_similar_char": lambda r, c: replacing_similar_char_indicator(r.url, c),
    "prefix_suffix": lambda r, c: prefix_suffix_indicator(r.url, c),
    "at_symbol": lambda r, c: at_symbol_indicator(r.url),
    "hex_char_codes": lambda r, c: hex_char_indicator(r.url, c),
    "emphasis_on_security": emphasis_on_security_indicator,
    "generic_salutation": salutation_indicator,
    "buying_time": buying_time_indicator,
}

assert set(_RULES) == {ind.name for ind in INDICATORS}


def evaluate_indicator(
    indicator: IndicatorId | str, record: WebsiteRecord, cfg: ExtractionConfig | None = None
) -> IndicatorValue:
    """Evaluate one indicator by id or canonical name."""
    cfg = cfg or ExtractionConfig()
    name = indicator.name if isinstance(indicator, IndicatorId) else indicator
    indicator_by_name(name)  # raises KeyError for unknown names
    return _RULES[name](record, cfg)


def extract_all(record: WebsiteRecord, cfg: ExtractionConfig | None = None) -> FeatureVector:
    """All 27 indicators in canonical order; fails once, up front, on a bad URL."""
    cfg = cfg or ExtractionConfig()
    _host_of(record.url, "extract_all")
    return FeatureVector(tuple(_RULES[ind.name](record, cfg) for ind in INDICATORS))
