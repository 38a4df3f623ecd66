"""Parser and provider for the on-disk WordNet noun database (WNDB format).

Reads the plain-text ``index.noun`` and ``data.noun`` files directly instead
of going through a toolkit binding: the files are stable, the parse is
deterministic, and there is no runtime dependency.

Format notes (both files are space-delimited; header lines begin with two
spaces and are skipped):

  index.noun   lemma pos synset_cnt p_cnt [ptr_symbol...] sense_cnt
               tagsense_cnt synset_offset [synset_offset...]
               Offsets appear in sense order.

  data.noun    synset_offset lex_filenum ss_type w_cnt word lex_id
               [word lex_id...] p_cnt [ptr...] | gloss
               The gloss is everything after the first "|". Example
               sentences (quoted segments) are part of the gloss and are
               retained in the definition text.
"""

from __future__ import annotations

from pathlib import Path

from ..errors import DataFormatError
from .base import DefinitionSet, check_word

INDEX_FILE = "index.noun"
DATA_FILE = "data.noun"


def _parse_data_noun(path: Path) -> dict[int, str]:
    """Map synset offset -> gloss text for every noun synset record."""
    glosses: dict[int, str] = {}
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            if line.startswith(" ") or not line.strip():
                continue
            head, sep, gloss = line.partition("|")
            if not sep:
                raise DataFormatError(f"{path.name}:{lineno}: record has no gloss separator")
            fields = head.split()
            if len(fields) < 4 or not fields[0].isdigit():
                raise DataFormatError(f"{path.name}:{lineno}: malformed synset record")
            if fields[2] != "n":
                raise DataFormatError(f"{path.name}:{lineno}: not a noun synset ({fields[2]!r})")
            glosses[int(fields[0])] = gloss.strip().rstrip(";").strip()
    return glosses


def _parse_index_noun(path: Path) -> dict[str, tuple[int, ...]]:
    """Map lemma -> synset offsets in sense order."""
    index: dict[str, tuple[int, ...]] = {}
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            if line.startswith(" ") or not line.strip():
                continue
            fields = line.split()
            try:
                lemma, pos, synset_cnt, p_cnt = fields[0], fields[1], int(fields[2]), int(fields[3])
                if pos != "n":
                    raise ValueError(f"unexpected pos {pos!r}")
                # skip pointer symbols, then sense_cnt and tagsense_cnt
                rest = fields[4 + p_cnt:]
                sense_cnt = int(rest[0])
                if sense_cnt != synset_cnt:
                    raise ValueError("sense count disagrees with synset count")
                offsets = tuple(int(off) for off in rest[2 : 2 + synset_cnt])
                if len(offsets) != synset_cnt:
                    raise ValueError("missing synset offsets")
            except (IndexError, ValueError) as exc:
                raise DataFormatError(f"{path.name}:{lineno}: {exc}") from exc
            index[lemma] = offsets
    return index


def load_noun_index(directory: str | Path) -> dict[str, tuple[str, ...]]:
    """Build the lemma -> ordered-gloss index from a WNDB directory."""
    directory = Path(directory)
    glosses = _parse_data_noun(directory / DATA_FILE)
    index: dict[str, tuple[str, ...]] = {}
    for lemma, offsets in _parse_index_noun(directory / INDEX_FILE).items():
        try:
            index[lemma] = tuple(glosses[off] for off in offsets)
        except KeyError as exc:
            raise DataFormatError(
                f"{INDEX_FILE}: lemma {lemma!r} references offset {exc.args[0]} "
                f"missing from {DATA_FILE}"
            ) from exc
    return index


class WordNetProvider:
    """Definition lookups against a parsed WNDB noun database.

    Immutable after construction; safe for concurrent lookups. Lemmas with
    spaces are stored with underscores in WNDB, so lookups map spaces to
    underscores. No other morphology is applied: plural surface forms not
    listed as lemmas are simply not found.
    """

    deterministic = True

    def __init__(self, directory: str | Path, provider_id: str = "wordnet"):
        self.provider_id = provider_id
        self.directory = Path(directory)
        self._index = load_noun_index(self.directory)

    def __len__(self) -> int:
        return len(self._index)

    def lookup(self, word: str) -> DefinitionSet | None:
        check_word(word)
        glosses = self._index.get(word.replace(" ", "_"))
        if glosses is None:
            return None
        return DefinitionSet(word=word, provider_id=self.provider_id, definitions=glosses)
