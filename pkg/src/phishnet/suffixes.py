"""Registered-domain parsing against the bundled public-suffix snapshot.

Implements the standard rule semantics: longest match wins, ``*.`` matches
exactly one label, ``!`` exception rules override wildcards, and unknown
TLDs fall back to the implicit ``*`` rule.
"""

import functools
from importlib.resources import files

_SNAPSHOT = "data/public_suffix_snapshot.txt"


@functools.lru_cache(maxsize=1)
def _rules() -> tuple[frozenset[str], frozenset[str], frozenset[str]]:
    text = files("phishnet").joinpath(_SNAPSHOT).read_text(encoding="utf-8")
    plain, wildcards, exceptions = set(), set(), set()
    for line in text.splitlines():
        line = line.strip().lower()
        if not line or line.startswith("//"):
            continue
        if line.startswith("!"):
            exceptions.add(line[1:])
        elif line.startswith("*."):
            wildcards.add(line[2:])
        else:
            plain.add(line)
    return frozenset(plain), frozenset(wildcards), frozenset(exceptions)


def _normalize(host: str) -> str:
    return host.strip().rstrip(".").lower()


def public_suffix(host: str) -> str:
    """Longest matching public suffix of ``host`` (last label if none match)."""
    plain, wildcards, exceptions = _rules()
    labels = _normalize(host).split(".")
    n = len(labels)
    best = n - 1  # implicit "*" rule: the last label
    for i in range(n):
        candidate = ".".join(labels[i:])
        if candidate in exceptions:
            return ".".join(labels[i + 1 :])
        if candidate in plain:
            best = min(best, i)
        if i + 1 < n and ".".join(labels[i + 1 :]) in wildcards:
            best = min(best, i)
    return ".".join(labels[best:])


def registered_domain(host: str) -> str:
    """Public suffix plus one label; the host itself if it cannot go deeper."""
    host = _normalize(host)
    if not host or "." not in host:
        return host
    suffix = public_suffix(host)
    if host == suffix:
        return host
    prefix = host[: -(len(suffix) + 1)] if suffix else host
    return prefix.split(".")[-1] + ("." + suffix if suffix else "")


def registered_label(host: str) -> str:
    """Leftmost label of the registered domain ('onlinesbi' for www.onlinesbi.com)."""
    return registered_domain(host).split(".")[0]


def same_registered_domain(host_a: str, host_b: str) -> bool:
    if not host_a or not host_b:
        return False
    return registered_domain(host_a) == registered_domain(host_b)
