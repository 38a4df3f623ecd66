"""Definition-lookup abstraction shared by all dictionary sources."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Protocol, runtime_checkable


@dataclass(frozen=True)
class DefinitionSet:
    """Ordered definitions for one word from one source.

    Definition order is the source's sense order (earlier = more general
    sense) and is never rearranged. An empty ``definitions`` tuple means the
    word exists in the source but carries no usable noun definition, which
    is distinct from the word not being found at all (``lookup`` returns
    ``None`` for that).
    """

    word: str
    provider_id: str
    definitions: tuple[str, ...]


@runtime_checkable
class Provider(Protocol):
    """One dictionary source exposing ordered noun definitions per word."""

    provider_id: str
    #: True when repeated lookups can never observe different content
    #: (database files and snapshots; False for live HTTP sources).
    deterministic: bool

    def lookup(self, word: str) -> DefinitionSet | None:
        """Definitions for ``word`` in source order, or None if absent.

        ``word`` must be non-empty, trimmed, lowercase. Live providers raise
        TransportError on network or page-parse failure; they never map such
        failures to None.
        """
        ...


def check_word(word: str) -> str:
    """Validate the lookup precondition; returns the word unchanged."""
    if not word or word != word.strip() or word != word.lower():
        raise ValueError(f"lookup expects a non-empty trimmed lowercase word, got {word!r}")
    return word
