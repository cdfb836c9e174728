"""Unsupervised keyphrase extraction.

Candidate phrases are contiguous 1- to 3-token n-grams that neither start
nor end with a stopword, scored by the average aggregated TF-IDF weight of
their tokens across the document. This deterministic ranker feeds the
keyphrase-augmented centrality summarizer; externally produced phrase
lists can be supplied instead via a one-phrase-per-line file.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from .ingest import Document, tokenize
from .textmodel import build_vectors

STOPWORDS_ENV_VAR = "EXTRASUM_STOPWORDS"

_MAX_PHRASE_LEN = 3


@dataclass(frozen=True)
class KeyPhrase:
    tokens: tuple[str, ...]
    score: float


def load_stopwords(path: str | Path) -> set[str]:
    """One stopword per line, UTF-8, blank lines ignored."""
    text = Path(path).read_text("utf-8")
    return {line.strip().lower() for line in text.splitlines() if line.strip()}


def bundled_stopwords(language: str) -> set[str]:
    """Bundled list for "en" or "pt"."""
    name = f"data/stopwords_{language}.txt"
    text = resources.files("extrasum").joinpath(name).read_text("utf-8")
    return {line.strip() for line in text.splitlines() if line.strip()}


def default_stopwords() -> set[str]:
    """Combined English+Portuguese list, or the EXTRASUM_STOPWORDS file if set."""
    override = os.environ.get(STOPWORDS_ENV_VAR)
    if override:
        return load_stopwords(override)
    return bundled_stopwords("en") | bundled_stopwords("pt")


def extract_keyphrases(doc: Document, k: int, stopwords: set[str] | None = None) -> list[KeyPhrase]:
    """Top-k candidate phrases by average aggregated TF-IDF token weight.

    Ties are broken by first occurrence in the document. Fewer than k
    candidates simply returns them all.
    """
    if k < 0:
        raise ValueError("k must be >= 0")
    if k == 0:
        return []
    if stopwords is None:
        stopwords = default_stopwords()

    weight: dict[str, float] = {}
    for vec in build_vectors(doc):
        for term, w in vec.items():
            weight[term] = weight.get(term, 0.0) + w

    first_seen: dict[tuple[str, ...], int] = {}
    order = 0
    for sent in doc.sentences:
        tokens = sent.tokens
        for start in range(len(tokens)):
            for n in range(1, _MAX_PHRASE_LEN + 1):
                if start + n > len(tokens):
                    break
                phrase = tokens[start : start + n]
                order += 1
                if phrase[0] in stopwords or phrase[-1] in stopwords:
                    continue
                if phrase not in first_seen:
                    first_seen[phrase] = order

    scored = [
        KeyPhrase(phrase, sum(weight.get(t, 0.0) for t in phrase) / len(phrase))
        for phrase in first_seen
    ]
    scored.sort(key=lambda kp: (-kp.score, first_seen[kp.tokens]))
    return scored[:k]


def read_keyphrase_file(path: str | Path) -> list[tuple[str, ...]]:
    """Load an external phrase list (one phrase per line), tokenized like documents."""
    text = Path(path).read_text("utf-8")
    phrases = []
    for line in text.splitlines():
        tokens = tuple(tokenize(line))
        if tokens:
            phrases.append(tokens)
    return phrases
