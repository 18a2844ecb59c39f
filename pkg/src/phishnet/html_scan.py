"""Tolerant tag-level HTML scanning.

Collects the page facts the indicator rules need (anchors, forms, resources,
iframes, scripts, visible text) without building a DOM or executing scripts.
Never raises on malformed markup.
"""

import re
from dataclasses import dataclass, field
from html.parser import HTMLParser


@dataclass
class AnchorScan:
    href: str | None
    text: str = ""
    onmouseover: str | None = None


@dataclass
class FormScan:
    action: str | None  # None when the attribute is absent
    input_types: list[str] = field(default_factory=list)
    has_submit: bool = False


@dataclass
class PageScan:
    title: str = ""
    text: str = ""
    anchors: list[AnchorScan] = field(default_factory=list)
    forms: list[FormScan] = field(default_factory=list)
    iframe_srcs: list[str] = field(default_factory=list)
    resource_urls: list[str] = field(default_factory=list)  # img/script/stylesheet
    meta_refresh_urls: list[str] = field(default_factory=list)
    scripts: list[str] = field(default_factory=list)  # inline script bodies
    onmouseover_attrs: list[str] = field(default_factory=list)  # non-anchor tags
    oncontextmenu_attrs: list[str] = field(default_factory=list)


_META_REFRESH_URL = re.compile(r"url\s*=\s*([^;,\s]+)", re.IGNORECASE)


class _Scanner(HTMLParser):
    def __init__(self):
        super().__init__(convert_charrefs=True)
        self.page = PageScan()
        self._anchor: AnchorScan | None = None
        self._form: FormScan | None = None
        self._in_title = False
        self._skip_text = 0  # inside <script>/<style>
        self._text_parts: list[str] = []
        self._script_parts: list[str] | None = None

    def handle_starttag(self, tag, attrs):
        attrs = {k.lower(): (v or "") for k, v in attrs}
        if "oncontextmenu" in attrs:
            self.page.oncontextmenu_attrs.append(attrs["oncontextmenu"])
        if tag == "a":
            self._anchor = AnchorScan(
                href=attrs.get("href"), onmouseover=attrs.get("onmouseover")
            )
            self.page.anchors.append(self._anchor)
        elif tag == "form":
            self._form = FormScan(action=attrs.get("action"))
            self.page.forms.append(self._form)
        elif tag == "input":
            itype = attrs.get("type", "text").lower()
            if self._form is not None:
                self._form.input_types.append(itype)
                if itype in ("submit", "image"):
                    self._form.has_submit = True
        elif tag == "button":
            if self._form is not None and attrs.get("type", "submit").lower() == "submit":
                self._form.has_submit = True
        elif tag == "iframe":
            self.page.iframe_srcs.append(attrs.get("src", ""))
        elif tag == "img":
            if attrs.get("src"):
                self.page.resource_urls.append(attrs["src"])
        elif tag == "script":
            if attrs.get("src"):
                self.page.resource_urls.append(attrs["src"])
            self._skip_text += 1
            self._script_parts = []
        elif tag == "style":
            self._skip_text += 1
        elif tag == "link":
            rel = attrs.get("rel", "").lower()
            if "stylesheet" in rel and attrs.get("href"):
                self.page.resource_urls.append(attrs["href"])
        elif tag == "meta":
            if attrs.get("http-equiv", "").lower() == "refresh":
                m = _META_REFRESH_URL.search(attrs.get("content", ""))
                if m:
                    self.page.meta_refresh_urls.append(m.group(1).strip("'\""))
        elif tag == "title":
            self._in_title = True
        if tag != "a" and "onmouseover" in attrs:
            self.page.onmouseover_attrs.append(attrs["onmouseover"])

    def handle_endtag(self, tag):
        if tag == "a":
            self._anchor = None
        elif tag == "form":
            self._form = None
        elif tag == "title":
            self._in_title = False
        elif tag in ("script", "style"):
            if self._skip_text > 0:
                self._skip_text -= 1
            if tag == "script" and self._script_parts is not None:
                self.page.scripts.append("".join(self._script_parts))
                self._script_parts = None

    def handle_data(self, data):
        if self._in_title:
            self.page.title += data
            return
        if self._skip_text:
            if self._script_parts is not None:
                self._script_parts.append(data)
            return
        if self._anchor is not None:
            self._anchor.text += data
        self._text_parts.append(data)

    def close(self):
        super().close()
        self.page.text = " ".join(p.strip() for p in self._text_parts if p.strip())
        self.page.title = self.page.title.strip()


def scan_page(html: str) -> PageScan:
    """Scan HTML into a PageScan. Tolerant: malformed markup never raises."""
    scanner = _Scanner()
    try:
        scanner.feed(html)
        scanner.close()
    except Exception:
        # html.parser is robust in practice; keep whatever was collected.
        scanner.page.text = " ".join(scanner._text_parts)
    return scanner.page
