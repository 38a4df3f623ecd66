"""The lexical gender classifier.

Pipeline for one target word:

1. normalize (lowercase, trim)
2. seed shortcut: a word that is itself a seed form or seed plural gets
   that gender immediately
3. suffix heuristic: -woman/-girl endings are feminine, -man/-boy endings
   masculine (with the woman/human exceptions), because dictionaries often
   define such words generically
4. per-dictionary counting: within the first d definitions and first t
   tokens of each, count tokens equal to the first w seed pairs' forms or
   their plurals; more masculine than feminine tokens means masculine,
   the reverse feminine, equal counts (including zero) neutral
5. majority vote over the per-dictionary labels; if a word is missing from
   a dictionary and the remaining dictionaries disagree, the result is
   neutral

A word not found by a provider is retried once with punctuation and
whitespace removed (grand-father -> grandfather).
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Sequence

from .core import ClassifierParams, GenderLabel, SeedLexicon, default_lexicon
from .providers.base import DefinitionSet, Provider

#: Classification routes.
ROUTE_SEED = "seed_shortcut"
ROUTE_SUFFIX = "suffix_heuristic"
ROUTE_DICTIONARY = "dictionary"

# Characters stripped from token edges. ASCII punctuation plus the curly
# quotes and dashes common in dictionary prose.
_STRIP_CHARS = "!\"#$%&'()*+,-./:;<=>?@[\\]^_`{|}~‘’“”–—…"


@dataclass(frozen=True)
class ProviderVerdict:
    """One dictionary's counts and resulting label for one word."""

    provider_id: str
    label: GenderLabel
    masc_count: int = 0
    fem_count: int = 0
    definitions_used: int = 0


@dataclass(frozen=True)
class ClassificationResult:
    """Full outcome for one target word."""

    word: str
    normalized: str
    route: str
    verdicts: tuple[ProviderVerdict, ...]
    combined: GenderLabel


def tokenize(definition: str) -> list[str]:
    """Lowercase tokens of a definition, in order.

    Splits on whitespace and strips leading/trailing punctuation from each
    token; internal punctuation (hyphens, apostrophes) is retained, so
    "father-in-law" stays one token distinct from "father". Empty tokens
    are dropped.
    """
    tokens = []
    for raw in definition.lower().split():
        token = raw.strip(_STRIP_CHARS)
        if token:
            tokens.append(token)
    return tokens


def seed_shortcut(word: str, lexicon: SeedLexicon) -> GenderLabel | None:
    """Immediate gender for a word that is itself a seed form or its plural."""
    return lexicon.shortcut_label(word)


def suffix_heuristic(word: str) -> GenderLabel | None:
    """Morphological call on the word's ending, if any.

    -woman/-girl endings are feminine; -man/-boy endings masculine unless
    the -man is part of -woman (checked first) or the word is "human" or a
    -human compound, which are not gendered despite the spelling.
    """
    if word.endswith(("woman", "girl")):
        return GenderLabel.FEM
    if word.endswith("human"):
        return None
    if word.endswith(("man", "boy")):
        return GenderLabel.MASC
    return None


def count_gendered(
    defs: DefinitionSet, params: ClassifierParams, lexicon: SeedLexicon
) -> tuple[int, int]:
    """(masculine, feminine) token counts over the truncated definition text.

    Counts whole-token equality only, never substring containment: "female"
    must not also count as "male".
    """
    fem_forms = lexicon.feminine_forms(params.w)
    masc_forms = lexicon.masculine_forms(params.w)
    masc = fem = 0
    for definition in defs.definitions[: params.d]:
        for token in tokenize(definition)[: params.t]:
            if token in masc_forms:
                masc += 1
            elif token in fem_forms:
                fem += 1
    return masc, fem


def _label_from_counts(masc: int, fem: int) -> GenderLabel:
    if masc > fem:
        return GenderLabel.MASC
    if fem > masc:
        return GenderLabel.FEM
    return GenderLabel.NEUT


def classify_with_provider(
    provider: Provider, word: str, params: ClassifierParams, lexicon: SeedLexicon
) -> ProviderVerdict:
    """Look up, count, threshold: one dictionary's verdict for one word."""
    defs = provider.lookup(word)
    if defs is None:
        return ProviderVerdict(provider.provider_id, GenderLabel.NOT_FOUND)
    masc, fem = count_gendered(defs, params, lexicon)
    return ProviderVerdict(
        provider_id=provider.provider_id,
        label=_label_from_counts(masc, fem),
        masc_count=masc,
        fem_count=fem,
        definitions_used=min(params.d, len(defs.definitions)),
    )


def combine(labels: Sequence[GenderLabel]) -> GenderLabel:
    """Majority-vote fusion of per-dictionary labels.

    not_found carries no vote. A strict majority of the votes cast wins;
    any tie or three-way disagreement falls back to neutral. Only when no
    dictionary knows the word at all is the combined label not_found.
    """
    if not labels:
        raise ValueError("combine requires at least one label")
    votes = Counter(label for label in labels if label is not GenderLabel.NOT_FOUND)
    if not votes:
        return GenderLabel.NOT_FOUND
    top, top_count = votes.most_common(1)[0]
    if top_count * 2 > sum(votes.values()):
        return top
    return GenderLabel.NEUT


def _strip_punctuation(word: str) -> str:
    return "".join(ch for ch in word if ch.isalnum())


def classify(
    word: str,
    providers: Sequence[Provider],
    params: ClassifierParams | None = None,
    lexicon: SeedLexicon | None = None,
) -> ClassificationResult:
    """Classify one target word through the full pipeline."""
    if params is None:
        params = ClassifierParams()
    if lexicon is None:
        lexicon = default_lexicon()
    if not providers:
        raise ValueError("classify requires at least one provider")
    normalized = word.strip().lower()
    if not normalized:
        raise ValueError("classify requires a non-empty word")

    label = seed_shortcut(normalized, lexicon)
    if label is not None:
        return ClassificationResult(word, normalized, ROUTE_SEED, (), label)

    label = suffix_heuristic(normalized)
    if label is not None:
        return ClassificationResult(word, normalized, ROUTE_SUFFIX, (), label)

    stripped = _strip_punctuation(normalized)
    verdicts = []
    for provider in providers:
        verdict = classify_with_provider(provider, normalized, params, lexicon)
        if (
            verdict.label is GenderLabel.NOT_FOUND
            and stripped
            and stripped != normalized
        ):
            retried = classify_with_provider(provider, stripped, params, lexicon)
            if retried.label is not GenderLabel.NOT_FOUND:
                verdict = retried
        verdicts.append(verdict)
    combined = combine([v.label for v in verdicts])
    return ClassificationResult(word, normalized, ROUTE_DICTIONARY, tuple(verdicts), combined)
