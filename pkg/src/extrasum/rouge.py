"""Recall-oriented ROUGE-N and ROUGE-SU4 scoring.

Matches are clipped per distinct counting unit (min of candidate and
reference occurrence counts) and pooled across all references: the score
is the summed clipped matches over the summed reference unit counts.
N-grams and skip-bigrams never cross sentence boundaries. A jackknife
mode (average of leave-one-out best single-reference scores, the ROUGE
toolkit's multi-reference convention) is available behind a flag.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

TokenSentences = Sequence[Sequence[str]]

_SU4_MAX_DISTANCE = 4


@dataclass(frozen=True)
class RougeScore:
    r1: float
    r2: float
    rsu4: float

    def as_tuple(self) -> tuple[float, float, float]:
        return (self.r1, self.r2, self.rsu4)


@dataclass(frozen=True)
class ReferenceSet:
    """One or more reference summaries, each a sequence of token sentences."""

    references: tuple[tuple[tuple[str, ...], ...], ...]

    def __post_init__(self):
        if not self.references:
            raise ValueError("reference set must contain at least one reference")
        for ref in self.references:
            if not ref:
                raise ValueError("each reference must contain at least one sentence")

    @classmethod
    def from_sentences(cls, references: Iterable[TokenSentences]) -> "ReferenceSet":
        return cls(tuple(tuple(tuple(sent) for sent in ref) for ref in references))


def _prep(
    sentences: TokenSentences,
    stopwords: set[str] | None,
    stemmer: Callable[[str], str] | None,
) -> list[tuple[str, ...]]:
    out = []
    for sent in sentences:
        tokens = [t for t in sent if t not in stopwords] if stopwords else list(sent)
        if stemmer is not None:
            tokens = [stemmer(t) for t in tokens]
        out.append(tuple(tokens))
    return out


def _ngram_counts(sentences: Sequence[tuple[str, ...]], n: int) -> Counter:
    counts: Counter = Counter()
    for sent in sentences:
        for i in range(len(sent) - n + 1):
            counts[sent[i : i + n]] += 1
    return counts


def _su4_counts(sentences: Sequence[tuple[str, ...]]) -> Counter:
    # unigrams as 1-tuples plus in-order pairs at distance <= 4, per sentence
    counts: Counter = Counter()
    for sent in sentences:
        for i, tok in enumerate(sent):
            counts[(tok,)] += 1
            for j in range(i + 1, min(i + _SU4_MAX_DISTANCE, len(sent) - 1) + 1):
                counts[(tok, sent[j])] += 1
    return counts


def _clipped_recall(cand_counts: Counter, ref_counts_list: Sequence[Counter]) -> float:
    matched = 0
    total = 0
    for ref_counts in ref_counts_list:
        total += sum(ref_counts.values())
        for unit, count in ref_counts.items():
            matched += min(count, cand_counts[unit])
    if total == 0:
        raise ValueError("references contain no counting units of the requested kind")
    return matched / total


def _jackknifed(cand_counts: Counter, ref_counts_list: Sequence[Counter]) -> float:
    singles = [_clipped_recall(cand_counts, [rc]) for rc in ref_counts_list]
    if len(singles) == 1:
        return singles[0]
    best_without = [max(s for j, s in enumerate(singles) if j != k) for k in range(len(singles))]
    return sum(best_without) / len(best_without)


def rouge_n(
    candidate: TokenSentences,
    refs: ReferenceSet,
    n: int,
    jackknife: bool = False,
    stopwords: set[str] | None = None,
    stemmer: Callable[[str], str] | None = None,
) -> float:
    """Clipped n-gram recall of the candidate against the reference set."""
    if n < 1:
        raise ValueError("n must be >= 1")
    cand = _ngram_counts(_prep(candidate, stopwords, stemmer), n)
    ref_counts = [_ngram_counts(_prep(ref, stopwords, stemmer), n) for ref in refs.references]
    if jackknife:
        return _jackknifed(cand, ref_counts)
    return _clipped_recall(cand, ref_counts)


def rouge_su4(
    candidate: TokenSentences,
    refs: ReferenceSet,
    jackknife: bool = False,
    stopwords: set[str] | None = None,
    stemmer: Callable[[str], str] | None = None,
) -> float:
    """Clipped recall over unigrams plus skip-bigrams with pair distance <= 4."""
    cand = _su4_counts(_prep(candidate, stopwords, stemmer))
    ref_counts = [_su4_counts(_prep(ref, stopwords, stemmer)) for ref in refs.references]
    if jackknife:
        return _jackknifed(cand, ref_counts)
    return _clipped_recall(cand, ref_counts)


def score(
    candidate: TokenSentences,
    refs: ReferenceSet,
    jackknife: bool = False,
    stopwords: set[str] | None = None,
    stemmer: Callable[[str], str] | None = None,
) -> RougeScore:
    """ROUGE-1, ROUGE-2, and ROUGE-SU4 of a candidate against the references."""
    return RougeScore(
        r1=rouge_n(candidate, refs, 1, jackknife, stopwords, stemmer),
        r2=rouge_n(candidate, refs, 2, jackknife, stopwords, stemmer),
        rsu4=rouge_su4(candidate, refs, jackknife, stopwords, stemmer),
    )
