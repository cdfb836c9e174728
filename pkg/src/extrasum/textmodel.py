"""Sentence vector representations and similarity measures.

Every ranking algorithm in this package consumes the same model: sentences
are sparse TF-IDF vectors built within a single document (each sentence is
treated as a pseudo-document, no external corpus), and similarity between
two sentences is either cosine similarity or a bounded Manhattan proximity
1/(1 + distance). Both measures are oriented so that higher means more
similar.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from enum import Enum
from typing import TYPE_CHECKING, Iterable, Sequence

import numpy as np
import scipy.sparse as sp
from sklearn.metrics.pairwise import manhattan_distances

if TYPE_CHECKING:
    from .ingest import Document


@dataclass(frozen=True)
class Sentence:
    """One sentence of a document: its position, raw text, and tokens."""

    index: int
    text: str
    tokens: tuple[str, ...]

    @property
    def word_count(self) -> int:
        return len(self.tokens)


# Sparse term -> weight map. Zero weights are never stored.
SentenceVector = dict[str, float]


class SimilarityKind(str, Enum):
    COSINE = "cosine"
    MANHATTAN = "manhattan"


# Pairwise-matrix construction switches from the exact per-pair routine to
# vectorized kernels above this size; the kernels agree with the exact
# routine only up to floating-point rounding (~1e-12).
_EXACT_MATRIX_LIMIT = 512


def document_idf(doc: "Document") -> dict[str, float]:
    """Inverse sentence frequency ln(N / df) for every term of the document.

    Terms occurring in every sentence get idf 0 and are omitted.
    """
    sentences = doc.sentences
    if not sentences:
        raise ValueError("cannot compute idf of an empty document")
    n = len(sentences)
    df: Counter[str] = Counter()
    for sent in sentences:
        df.update(set(sent.tokens))
    return {term: math.log(n / count) for term, count in df.items() if count < n}


def build_vectors(doc: "Document") -> list[SentenceVector]:
    """TF-IDF vector per sentence: raw term count times ln(N / df).

    A single-sentence document yields empty vectors (every term occurs in
    all sentences); callers must tolerate that degenerate case.
    """
    idf = document_idf(doc)
    vectors: list[SentenceVector] = []
    for sent in doc.sentences:
        counts = Counter(sent.tokens)
        vectors.append({t: c * idf[t] for t, c in counts.items() if t in idf})
    return vectors


def vectorize_tokens(tokens: Iterable[str], idf: dict[str, float]) -> SentenceVector:
    """Vectorize an external token sequence in an existing document's TF-IDF space.

    Tokens absent from the document vocabulary carry no weight and are dropped.
    """
    counts = Counter(tokens)
    return {t: c * idf[t] for t, c in counts.items() if t in idf}


def similarity(a: SentenceVector, b: SentenceVector, kind: SimilarityKind = SimilarityKind.COSINE) -> float:
    """Similarity of two sparse vectors in [0, 1].

    Cosine of a zero vector with anything is 0 (avoids NaN on degenerate
    documents). Manhattan distance d is wrapped as 1/(1+d) so both kinds
    share the higher-is-more-similar orientation. Terms are accumulated in
    sorted order, which makes the result exactly symmetric in (a, b).
    """
    if kind == SimilarityKind.COSINE:
        if not a or not b:
            return 0.0
        if a == b:
            return 1.0
        dot = 0.0
        shared = sorted(a.keys() & b.keys())
        for t in shared:
            dot += a[t] * b[t]
        na = math.sqrt(sum(a[t] * a[t] for t in sorted(a)))
        nb = math.sqrt(sum(b[t] * b[t] for t in sorted(b)))
        if na == 0.0 or nb == 0.0:
            return 0.0
        return min(1.0, dot / (na * nb))
    if kind == SimilarityKind.MANHATTAN:
        dist = 0.0
        for t in sorted(a.keys() | b.keys()):
            dist += abs(a.get(t, 0.0) - b.get(t, 0.0))
        return 1.0 / (1.0 + dist)
    raise ValueError(f"unknown similarity kind: {kind!r}")


def centroid(vectors: Sequence[SentenceVector]) -> SentenceVector:
    """Term-wise arithmetic mean of the given vectors."""
    if not vectors:
        raise ValueError("cannot compute centroid of no vectors")
    acc: dict[str, float] = {}
    for vec in vectors:
        for t, w in vec.items():
            acc[t] = acc.get(t, 0.0) + w
    n = len(vectors)
    return {t: w / n for t, w in acc.items() if w != 0.0}


def _to_csr(vectors: Sequence[SentenceVector]) -> tuple[sp.csr_matrix, list[str]]:
    vocab = sorted({t for vec in vectors for t in vec})
    col = {t: j for j, t in enumerate(vocab)}
    data: list[float] = []
    indices: list[int] = []
    indptr = [0]
    for vec in vectors:
        for t in sorted(vec):
            indices.append(col[t])
            data.append(vec[t])
        indptr.append(len(indices))
    mat = sp.csr_matrix(
        (np.asarray(data), np.asarray(indices, dtype=np.int32), np.asarray(indptr, dtype=np.int32)),
        shape=(len(vectors), len(vocab)),
    )
    return mat, vocab


def similarity_matrix(
    vectors: Sequence[SentenceVector],
    kind: SimilarityKind = SimilarityKind.COSINE,
    method: str = "auto",
) -> np.ndarray:
    """Dense pairwise similarity matrix over the given vectors.

    method "exact" computes every entry with `similarity` (the reference
    definition); "fast" uses vectorized sparse kernels that match "exact"
    to ~1e-12; "auto" picks "exact" up to 512 vectors and "fast" beyond.
    """
    n = len(vectors)
    if method == "auto":
        method = "exact" if n <= _EXACT_MATRIX_LIMIT else "fast"
    if method == "exact":
        out = np.zeros((n, n))
        for i in range(n):
            out[i, i] = similarity(vectors[i], vectors[i], kind)
            for j in range(i + 1, n):
                s = similarity(vectors[i], vectors[j], kind)
                out[i, j] = s
                out[j, i] = s
        return out
    if method != "fast":
        raise ValueError(f"unknown method: {method!r}")

    mat, vocab = _to_csr(vectors)
    if kind == SimilarityKind.COSINE:
        if not vocab:
            return np.zeros((n, n))
        norms = np.sqrt(np.asarray(mat.multiply(mat).sum(axis=1)).ravel())
        inv = np.where(norms > 0, 1.0 / np.where(norms > 0, norms, 1.0), 0.0)
        normalized = sp.diags(inv) @ mat
        sim = (normalized @ normalized.T).toarray()
        sim = np.clip((sim + sim.T) / 2.0, 0.0, 1.0)
        np.fill_diagonal(sim, np.where(norms > 0, 1.0, 0.0))
        return sim
    if kind == SimilarityKind.MANHATTAN:
        if not vocab:
            return np.ones((n, n))
        dist = manhattan_distances(mat)
        dist = (dist + dist.T) / 2.0
        sim = 1.0 / (1.0 + dist)
        np.fill_diagonal(sim, 1.0)
        return sim
    raise ValueError(f"unknown similarity kind: {kind!r}")
