"""Shared fixtures: crafted site records with known indicator outcomes."""

from datetime import datetime, timezone

import pytest

import _acceptance_report
from phishnet.config import ExtractionConfig
from phishnet.records import CertEvidence, DnsEvidence, WebsiteRecord


def pytest_terminal_summary(terminalreporter):
    if not _acceptance_report.any_recorded():
        return
    terminalreporter.section("acceptance criteria")
    for line in _acceptance_report.summary_lines():
        terminalreporter.line(line)

BENIGN_HTML = """<html><head><title>Welcome</title></head><body>
<p>Welcome to our online banking service. You can check your account balance,
review recent payments and transfer money between your accounts. Our branch
network and customer service team are available to help you with loans,
savings and insurance products every day of the week.</p>
<a href="/accounts">Accounts</a> <a href="/payments">Payments</a>
<img src="/static/logo.png">
</body></html>"""

SBI_PHISH_HTML = """<html><head><title>OnlineSBI Login</title></head><body>
<p>Dear customer, your account will be suspended. Verify your secure login
immediately to restore security.</p>
<form action=""><input type="text" name="user"><input type="password" name="pw">
<input type="submit"></form>
<a href="http://evil.example.net/x">click</a>
</body></html>"""


@pytest.fixture
def default_cfg():
    return ExtractionConfig()


@pytest.fixture
def benign_record():
    """Everything about this record is clean: all 27 slots come out Legitimate."""
    return WebsiteRecord(
        url="https://www.onlinesbi.com/",
        page_source=BENIGN_HTML,
        response_headers=[
            ("Content-Type", "text/html"),
            ("Set-Cookie", "session=abc; Path=/; Secure"),
        ],
        redirect_chain=["https://www.onlinesbi.com/"],
        cert_evidence=CertEvidence(
            issuer="DigiCert Inc",
            subject_common_name="www.onlinesbi.com",
            valid=True,
            self_signed=False,
        ),
        dns_evidence=DnsEvidence(resolvable=True, domain_age_days=3650.0),
        observed_at=datetime(2026, 1, 10, 12, 0, tzinfo=timezone.utc),
        label="legit",
    )


@pytest.fixture
def sbi_phish_record():
    """IP host, @ in the path, plain http, empty form action: classic lure."""
    return WebsiteRecord(
        url="http://203.0.113.7/@sbi-login",
        page_source=SBI_PHISH_HTML,
        lure_text=(
            "Dear customer, verify your account immediately or it will be "
            "suspended within 24 hours."
        ),
        observed_at=datetime(2026, 1, 10, 12, 0, tzinfo=timezone.utc),
        label="phish",
    )


def _rec(url, **kwargs):
    return WebsiteRecord(url=url, **kwargs)


def build_corpus(benign, phish):
    """(name, record, {indicator: expected-value-name}) triples.

    Expectations cover the slot each fixture was crafted to exercise; every
    record still produces a full 27-value vector.
    """
    cert_self = CertEvidence("Evil Corp", "Evil Corp", valid=False, self_signed=True)
    cert_odd_ca = CertEvidence("Bogus CA", "shop.example.net", valid=True, self_signed=False)
    cert_mismatch = CertEvidence("DigiCert Inc", "other.net", valid=True, self_signed=False)
    cert_sibling = CertEvidence(
        "DigiCert Inc", "mail.example.com", valid=True, self_signed=False
    )

    return [
        ("benign", benign, {name: "LEGITIMATE" for name in _ALL_27}),
        (
            "sbi_phish",
            phish,
            {
                "using_ip_address": "PHISHY",
                "at_symbol": "PHISHY",
                "ssl_certificate": "PHISHY",
                "server_form_handler": "PHISHY",
            },
        ),
        ("ip_dotted", _rec("http://192.168.10.5/login"), {"using_ip_address": "PHISHY"}),
        ("ip_hex", _rec("http://0x7f000001/"), {"using_ip_address": "PHISHY"}),
        (
            "long_url",
            _rec("https://example.com/" + "a" * 80),
            {"long_url_address": "PHISHY"},
        ),
        (
            "medium_url",
            _rec("https://example.com/" + "a" * 40),
            {"long_url_address": "DOUBTFUL"},
        ),
        ("at_in_path", _rec("https://example.com/a@b"), {"at_symbol": "PHISHY"}),
        (
            "brand_hyphen",
            _rec("https://sbi-secure.example.com/"),
            {"prefix_suffix": "PHISHY"},
        ),
        (
            "plain_hyphen",
            _rec("https://my-shop.example.com/"),
            {"prefix_suffix": "DOUBTFUL"},
        ),
        (
            "hex_host",
            _rec("http://%77%77%77.example.com/"),
            {"hex_char_codes": "PHISHY"},
        ),
        (
            "hex_path",
            _rec("http://example.com/%61%62%63%64%65%66"),
            {"hex_char_codes": "DOUBTFUL"},
        ),
        (
            "confusable_digit",
            _rec("http://paypa1-login.example.net/"),
            {"replacing_similar_char": "PHISHY"},
        ),
        (
            "confusable_rn",
            _rec("http://rnicrosoft.example.net/"),
            {"replacing_similar_char": "PHISHY"},
        ),
        (
            "punycode_brand",
            _rec("http://xn--pypal-4ve.example.com/"),
            {"replacing_similar_char": "PHISHY"},
        ),
        (
            "punycode_plain",
            _rec("http://xn--bcher-kva.example.net/"),
            {"replacing_similar_char": "DOUBTFUL"},
        ),
        (
            "https_no_cert",
            _rec("https://example.com/"),
            {"ssl_certificate": "DOUBTFUL"},
        ),
        (
            "self_signed",
            _rec("https://example.com/", cert_evidence=cert_self),
            {"certificate_authority": "PHISHY", "ssl_certificate": "DOUBTFUL"},
        ),
        (
            "unknown_ca",
            _rec("https://shop.example.net/", cert_evidence=cert_odd_ca),
            {"certificate_authority": "DOUBTFUL", "ssl_certificate": "LEGITIMATE"},
        ),
        (
            "cn_mismatch",
            _rec("https://example.com/", cert_evidence=cert_mismatch),
            {"distinguished_names_certificate": "PHISHY"},
        ),
        (
            "cn_sibling",
            _rec("https://www.example.com/", cert_evidence=cert_sibling),
            {"distinguished_names_certificate": "DOUBTFUL"},
        ),
        (
            "foreign_cookie",
            _rec(
                "https://example.com/",
                response_headers=[("Set-Cookie", "sid=1; Domain=evil.net; Path=/")],
            ),
            {"abnormal_cookie": "PHISHY"},
        ),
        (
            "dns_dead",
            _rec("http://gone.example.org/", dns_evidence=DnsEvidence(resolvable=False)),
            {"abnormal_dns_record": "PHISHY"},
        ),
        (
            "dns_young",
            _rec(
                "http://new.example.org/",
                dns_evidence=DnsEvidence(resolvable=True, domain_age_days=30.0),
            ),
            {"abnormal_dns_record": "DOUBTFUL"},
        ),
        (
            "redirect_heavy",
            _rec(
                "http://example.com/",
                redirect_chain=[
                    "http://example.com/",
                    "http://a.example.com/",
                    "http://b.example.com/",
                    "http://c.example.com/",
                    "http://d.example.com/",
                ],
            ),
            {"redirect_pages": "PHISHY"},
        ),
        (
            "redirect_pair",
            _rec(
                "http://example.com/",
                redirect_chain=[
                    "http://example.com/",
                    "http://a.example.com/",
                    "http://b.example.com/",
                ],
            ),
            {"redirect_pages": "DOUBTFUL"},
        ),
        (
            "iframe_credential",
            _rec(
                "http://example.com/",
                page_source=(
                    '<iframe src="http://evil.net/f"></iframe>'
                    '<form action="/login"><input type="password" name="p"></form>'
                ),
            ),
            {"straddling_attack": "PHISHY"},
        ),
        (
            "iframe_only",
            _rec(
                "http://example.com/",
                page_source='<iframe src="http://evil.net/f"></iframe>',
            ),
            {"straddling_attack": "DOUBTFUL"},
        ),
        (
            "pharming_link",
            _rec(
                "http://example.com/",
                page_source='<a href="http://evil.net/x">www.onlinesbi.com</a>',
            ),
            {"pharming_attack": "PHISHY"},
        ),
        (
            "status_bar_fake",
            _rec(
                "http://example.com/",
                page_source=(
                    "<a href=\"http://evil.net\" "
                    "onmouseover=\"window.status='https://bank.example.com'\">go</a>"
                ),
            ),
            {"onmouseover_hide_link": "PHISHY"},
        ),
        (
            "external_sfh",
            _rec(
                "http://example.com/",
                page_source='<form action="http://collector.net/grab"><input type="text"></form>',
            ),
            {"server_form_handler": "DOUBTFUL"},
        ),
        (
            "copied_brand",
            _rec(
                "http://example.org/",
                page_source="<title>PayPal account center</title>",
            ),
            {"copying_website": "PHISHY", "abnormal_url": "PHISHY"},
        ),
        (
            "popup_harvester",
            _rec(
                "http://example.com/",
                page_source=(
                    "<script>window.open('data:text/html,<input name=pw>')</script>"
                ),
            ),
            {"popup_windows": "PHISHY"},
        ),
        (
            "popup_plain",
            _rec(
                "http://example.com/",
                page_source="<script>window.open('/help')</script>",
            ),
            {"popup_windows": "DOUBTFUL"},
        ),
        (
            "right_click_blocked",
            _rec(
                "http://example.com/",
                page_source='<body oncontextmenu="return false"></body>',
            ),
            {"disabling_right_click": "PHISHY"},
        ),
        (
            "urgency_lure",
            _rec(
                "http://example.com/",
                lure_text="Act now! Your account will be closed within 24 hours.",
            ),
            {"buying_time": "PHISHY"},
        ),
        (
            "generic_greeting",
            _rec("http://example.com/", lure_text="Dear customer, see the notice."),
            {"generic_salutation": "PHISHY"},
        ),
        (
            "personal_greeting",
            _rec("http://example.com/", lure_text="Dear Maria, your parcel shipped."),
            {"generic_salutation": "LEGITIMATE"},
        ),
    ]


_ALL_27 = (
    "using_ip_address",
    "abnormal_request_url",
    "abnormal_url_of_anchor",
    "abnormal_dns_record",
    "abnormal_url",
    "ssl_certificate",
    "certificate_authority",
    "abnormal_cookie",
    "distinguished_names_certificate",
    "redirect_pages",
    "straddling_attack",
    "pharming_attack",
    "onmouseover_hide_link",
    "server_form_handler",
    "spelling_errors",
    "copying_website",
    "forms_with_submit",
    "popup_windows",
    "disabling_right_click",
    "long_url_address",
    "replacing_similar_char",
    "prefix_suffix",
    "at_symbol",
    "hex_char_codes",
    "emphasis_on_security",
    "generic_salutation",
    "buying_time",
)


@pytest.fixture
def corpus(benign_record, sbi_phish_record):
    return build_corpus(benign_record, sbi_phish_record)
