"""Shared domain types: gender labels, the seed lexicon, classifier parameters.

Every other module builds on the types defined here. All of them are
immutable after construction and safe to share across threads.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field


class GenderLabel(str, enum.Enum):
    """Four-way classification outcome.

    NOT_FOUND is only ever produced by dictionary lookup failure, never by
    counting: equal gendered-word counts (including zero) yield NEUT.
    """

    MASC = "masc"
    FEM = "fem"
    NEUT = "neut"
    NOT_FOUND = "not_found"

    def __str__(self) -> str:  # pragma: no cover - cosmetic
        return self.value


#: Labels a gold-standard entry may carry (lookup failure is never gold).
GOLD_LABELS = (GenderLabel.MASC, GenderLabel.FEM, GenderLabel.NEUT)


@dataclass(frozen=True)
class SeedPair:
    """One definitively gendered feminine/masculine word pair."""

    rank: int
    feminine: str
    masculine: str

    def __post_init__(self) -> None:
        for form in (self.feminine, self.masculine):
            if not form or form != form.lower() or len(form.split()) != 1:
                raise ValueError(f"seed form must be a non-empty lowercase token: {form!r}")
        if self.feminine == self.masculine:
            raise ValueError("feminine and masculine forms must differ")


# The plural map is a fixed hand-written table: the seed set is closed and
# contains irregular plurals (man/men, wife/wives) that suffix rules break on.
_PLURALS = {
    "woman": "women",
    "man": "men",
    "female": "females",
    "male": "males",
    "wife": "wives",
    "husband": "husbands",
    "daughter": "daughters",
    "son": "sons",
    "mother": "mothers",
    "father": "fathers",
    "girl": "girls",
    "boy": "boys",
    "sister": "sisters",
    "brother": "brothers",
    "aunt": "aunts",
    "uncle": "uncles",
}

_PAIRS = (
    SeedPair(1, "woman", "man"),
    SeedPair(2, "female", "male"),
    SeedPair(3, "wife", "husband"),
    SeedPair(4, "daughter", "son"),
    SeedPair(5, "mother", "father"),
    SeedPair(6, "girl", "boy"),
    SeedPair(7, "sister", "brother"),
    SeedPair(8, "aunt", "uncle"),
)


@dataclass(frozen=True)
class SeedLexicon:
    """The ordered gendered seed pairs plus the plural form of every seed.

    Pairs are ordered by rank; truncation to the first ``w`` pairs preserves
    that order. Matching against the lexicon is case-insensitive by
    convention: callers lowercase at the boundary, the lexicon stores
    lowercase only.
    """

    pairs: tuple[SeedPair, ...]
    plurals: dict[str, str] = field(repr=False)

    def __post_init__(self) -> None:
        ranks = [p.rank for p in self.pairs]
        if len(set(ranks)) != len(ranks):
            raise ValueError("pair ranks must be unique")
        forms = [f for p in self.pairs for f in (p.feminine, p.masculine)]
        if len(set(forms)) != len(forms):
            raise ValueError("a seed form appears in more than one pair")
        for form in forms:
            if form not in self.plurals:
                raise ValueError(f"no plural entry for seed form {form!r}")
        if len(set(self.plurals.values())) != len(self.plurals):
            raise ValueError("plural map must be injective")

    def truncated(self, w: int) -> tuple[SeedPair, ...]:
        """First ``w`` pairs in rank order."""
        if not 1 <= w <= len(self.pairs):
            raise ValueError(f"w must be in 1..{len(self.pairs)}, got {w}")
        return self.pairs[:w]

    def feminine_forms(self, w: int) -> frozenset[str]:
        """Feminine seed forms and their plurals for the first ``w`` pairs."""
        singulars = [p.feminine for p in self.truncated(w)]
        return frozenset(singulars) | frozenset(self.plurals[s] for s in singulars)

    def masculine_forms(self, w: int) -> frozenset[str]:
        """Masculine seed forms and their plurals for the first ``w`` pairs."""
        singulars = [p.masculine for p in self.truncated(w)]
        return frozenset(singulars) | frozenset(self.plurals[s] for s in singulars)

    def shortcut_label(self, word: str) -> GenderLabel | None:
        """Gender of ``word`` if it is itself a seed form or a seed plural.

        Consults all pairs regardless of any ``w`` truncation: a target word
        that literally is one of the definitively gendered words needs no
        dictionary at all.
        """
        for pair in self.pairs:
            if word in (pair.feminine, self.plurals[pair.feminine]):
                return GenderLabel.FEM
            if word in (pair.masculine, self.plurals[pair.masculine]):
                return GenderLabel.MASC
        return None


@dataclass(frozen=True)
class ClassifierParams:
    """The three knobs limiting how much definition text is counted.

    d: number of definitions considered per dictionary (earlier senses are
       more general, so only the first d are used)
    t: number of tokens considered per definition
    w: number of seed pairs used for counting (rank order truncation)
    """

    d: int = 4
    t: int = 20
    w: int = 5

    def __post_init__(self) -> None:
        if self.d < 1:
            raise ValueError(f"d must be >= 1, got {self.d}")
        if self.t < 1:
            raise ValueError(f"t must be >= 1, got {self.t}")
        if not 1 <= self.w <= 8:
            raise ValueError(f"w must be in 1..8, got {self.w}")


#: Default grid-search ranges for each parameter.
GRID_D_RANGE = tuple(range(2, 11))
GRID_T_RANGE = (5, 10, 15, 20, 25, 30, 35)
GRID_W_RANGE = tuple(range(2, 9))


def default_lexicon() -> SeedLexicon:
    """The standard eight-pair seed lexicon with its plural table.

    Pure: repeated calls return structurally identical lexicons.
    """
    return SeedLexicon(pairs=_PAIRS, plurals=dict(_PLURALS))
