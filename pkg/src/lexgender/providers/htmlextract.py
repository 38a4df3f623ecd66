"""Extraction of sense definitions from online-dictionary entry pages.

Only the rules table below knows anything about page markup: when a site
redesign changes class names, this table is the single place to update.
Each dialect names the element that wraps one sense definition and,
where the page distinguishes parts of speech, the element that announces
the section's part of speech (only definitions inside a noun section are
kept).
"""

from __future__ import annotations

from dataclasses import dataclass
from html.parser import HTMLParser

from ..errors import TransportError


@dataclass(frozen=True)
class DialectRules:
    definition_tag: str
    definition_class: str
    pos_tag: str | None = None
    pos_class: str | None = None
    strip_prefixes: tuple[str, ...] = ()


# mw = Merriam-Webster entry pages, dcom = Dictionary.com entry pages.
DIALECTS = {
    "mw": DialectRules(
        definition_tag="span",
        definition_class="dtText",
        pos_tag="span",
        pos_class="fl",
        strip_prefixes=(": ", ":"),
    ),
    "dcom": DialectRules(
        definition_tag="div",
        definition_class="one-click-content",
        pos_tag="span",
        pos_class="luna-pos",
    ),
}


# Elements that never have a closing tag; they must not affect nesting depth.
_VOID_TAGS = {
    "area", "base", "br", "col", "embed", "hr", "img", "input",
    "link", "meta", "param", "source", "track", "wbr",
}


def _has_class(attrs: list[tuple[str, str | None]], wanted: str) -> bool:
    for name, value in attrs:
        if name == "class" and value and wanted in value.split():
            return True
    return False


class _DefinitionCollector(HTMLParser):
    """Collects the text of definition elements in page order."""

    def __init__(self, rules: DialectRules):
        super().__init__(convert_charrefs=True)
        self.rules = rules
        self.definitions: list[str] = []
        self._depth = 0  # > 0 while inside a definition element
        self._pos_pending = False
        self._current_pos = "noun" if rules.pos_tag is None else ""
        self._buf: list[str] = []

    def handle_starttag(self, tag, attrs):
        if tag in _VOID_TAGS:
            if self._depth:  # a <br> inside a definition separates words
                self._buf.append(" ")
            return
        rules = self.rules
        if self._depth:
            self._depth += 1
            return
        if tag == rules.definition_tag and _has_class(attrs, rules.definition_class):
            if self._current_pos == "noun":
                self._depth = 1
                self._buf = []
        elif rules.pos_tag and tag == rules.pos_tag and _has_class(attrs, rules.pos_class):
            self._pos_pending = True
            self._current_pos = ""

    def handle_endtag(self, tag):
        if tag in _VOID_TAGS:
            return
        if self._depth:
            self._depth -= 1
            if self._depth == 0:
                text = " ".join("".join(self._buf).split())
                for prefix in self.rules.strip_prefixes:
                    if text.startswith(prefix):
                        text = text[len(prefix):].lstrip()
                        break
                if text:
                    self.definitions.append(text)
        elif self._pos_pending:
            self._pos_pending = False

    def handle_data(self, data):
        if self._depth:
            self._buf.append(data)
        elif self._pos_pending:
            self._current_pos += data.strip().lower()


def extract_definitions_html(html: str, dialect: str) -> list[str]:
    """Visible sense-definition texts from an entry page, in page order.

    Returns an empty list when the page parses but contains no noun
    definitions (word effectively not found). Raises TransportError for
    input that is not a page at all.
    """
    try:
        rules = DIALECTS[dialect]
    except KeyError:
        raise ValueError(f"unknown dialect {dialect!r}; expected one of {sorted(DIALECTS)}")
    if not html or not html.strip():
        raise TransportError("empty response where an entry page was expected")
    collector = _DefinitionCollector(rules)
    try:
        collector.feed(html)
        collector.close()
    except Exception as exc:  # html.parser is lenient; be explicit if it isn't
        raise TransportError(f"could not parse entry page: {exc}") from exc
    return collector.definitions
