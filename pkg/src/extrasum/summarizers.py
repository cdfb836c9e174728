"""Six generic extractive summarization algorithms.

Every algorithm maps (document, config, sentence budget) to a Summary: an
ordered selection of sentence indices. All are deterministic pure
functions; ties are always broken toward the earlier sentence, and
degenerate documents (a single sentence, or all-zero vectors) fall back to
the document-order prefix.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Sequence

import numpy as np

from .ingest import Document
from .keyphrase import extract_keyphrases
from .textmodel import (
    SentenceVector,
    SimilarityKind,
    build_vectors,
    centroid,
    document_idf,
    similarity,
    similarity_matrix,
    vectorize_tokens,
)


class Algorithm(str, Enum):
    MMR = "mmr"
    LEXRANK = "lexrank"
    LSA = "lsa"
    SUPPORT_SETS = "support_sets"
    KP_CENTRALITY = "kp_centrality"
    GRASSHOPPER = "grasshopper"


class SupportKind(str, Enum):
    THRESHOLD = "threshold"
    CARDINALITY = "cardinality"


class SummarizationError(RuntimeError):
    """Numerical failure inside an algorithm (e.g. a singular visit system)."""


@dataclass(frozen=True)
class AlgorithmConfig:
    """Per-algorithm parameters; defaults follow common practice for each method."""

    lambda_mmr: float = 0.5
    lexrank_threshold: float = 0.1
    damping_d: float = 0.85
    convergence_eps: float = 1e-6
    max_iterations: int = 200
    support_kind: SupportKind = SupportKind.THRESHOLD
    support_threshold: float = 0.5
    support_cardinality: int = 2
    similarity: SimilarityKind = SimilarityKind.COSINE
    kp_count: int = 10
    lambda_grasshopper: float = 0.85
    lsa_rank: int | None = None  # None = one topic per budgeted sentence
    grasshopper_cap: int | None = None  # optional input-size cap, off by default

    def __post_init__(self):
        if not 0.0 <= self.lambda_mmr <= 1.0:
            raise ValueError("lambda_mmr must be in [0, 1]")
        if not 0.0 <= self.lexrank_threshold <= 1.0:
            raise ValueError("lexrank_threshold must be in [0, 1]")
        if not 0.0 < self.damping_d < 1.0:
            raise ValueError("damping_d must be in (0, 1)")
        if self.convergence_eps <= 0.0:
            raise ValueError("convergence_eps must be positive")
        if self.max_iterations < 1:
            raise ValueError("max_iterations must be >= 1")
        if not 0.0 <= self.support_threshold <= 1.0:
            raise ValueError("support_threshold must be in [0, 1]")
        if self.support_cardinality < 1:
            raise ValueError("support_cardinality must be >= 1")
        if self.kp_count < 0:
            raise ValueError("kp_count must be >= 0")
        if not 0.0 <= self.lambda_grasshopper <= 1.0:
            raise ValueError("lambda_grasshopper must be in [0, 1]")
        if self.lsa_rank is not None and self.lsa_rank < 1:
            raise ValueError("lsa_rank must be >= 1 or None")
        if self.grasshopper_cap is not None and self.grasshopper_cap < 1:
            raise ValueError("grasshopper_cap must be >= 1 or None")


@dataclass(frozen=True)
class Summary:
    """Selected sentence indices in document order, plus realized word count."""

    selected: tuple[int, ...]
    word_count: int
    scores: dict[int, float] | None = None


@dataclass(frozen=True)
class SupportSet:
    """The passages semantically supporting one owner passage."""

    owner: int
    members: frozenset[int]

    def __post_init__(self):
        if self.owner in self.members:
            raise ValueError("a passage cannot support itself")


def _check_inputs(doc: Document, budget: int) -> int:
    n = len(doc.sentences)
    if n == 0:
        raise ValueError("cannot summarize an empty document")
    if budget < 1:
        raise ValueError("budget must be >= 1")
    return n


def _make_summary(doc: Document, picked: Iterable[int], scores: dict[int, float] | None = None) -> Summary:
    selected = tuple(sorted(set(picked)))
    word_count = sum(doc.sentences[i].word_count for i in selected)
    return Summary(selected, word_count, scores)


def _prefix_summary(doc: Document, budget: int) -> Summary:
    return _make_summary(doc, range(min(budget, len(doc.sentences))))


def selected_sentences(doc: Document, summary: Summary):
    """The sentences a summary selected, in document order."""
    return [doc.sentences[i] for i in summary.selected]


def mmr(doc: Document, cfg: AlgorithmConfig, budget: int) -> Summary:
    """Maximal marginal relevance with the sentence centroid as query.

    Greedily picks the sentence maximizing
    lambda * sim(sentence, centroid) - (1 - lambda) * max sim(sentence, already picked);
    the novelty term is zero on the first pick.
    """
    n = _check_inputs(doc, budget)
    budget = min(budget, n)
    vectors = build_vectors(doc)
    query = centroid(vectors)
    lam = cfg.lambda_mmr
    relevance = [similarity(v, query, cfg.similarity) for v in vectors]

    picked: list[int] = []
    picked_set: set[int] = set()
    picked_rows: list[list[float]] = []
    scores: dict[int, float] = {}
    while len(picked) < budget:
        best_i = -1
        best_score = -np.inf
        for i in range(n):
            if i in picked_set:
                continue
            novelty = max((row[i] for row in picked_rows), default=0.0)
            mmr_score = lam * relevance[i] - (1.0 - lam) * novelty
            if mmr_score > best_score:
                best_i, best_score = i, mmr_score
        picked.append(best_i)
        picked_set.add(best_i)
        scores[best_i] = best_score
        picked_rows.append([similarity(vectors[best_i], v, cfg.similarity) for v in vectors])
    return _make_summary(doc, picked, scores)


def lexrank(doc: Document, cfg: AlgorithmConfig, budget: int) -> Summary:
    """Graph centrality over the cosine-similarity sentence graph.

    Edges exist where cosine exceeds the threshold (threshold 0 gives the
    continuous-weight variant). Scores start at 1/N and are iterated with
    damping until the largest per-vertex change drops below the tolerance;
    isolated vertices end up at (1-d)/N.
    """
    n = _check_inputs(doc, budget)
    budget = min(budget, n)
    vectors = build_vectors(doc)
    cos = similarity_matrix(vectors, SimilarityKind.COSINE)
    weights = np.where(cos > cfg.lexrank_threshold, cos, 0.0)
    np.fill_diagonal(weights, 0.0)
    colsum = weights.sum(axis=0)
    transfer = np.divide(weights, colsum, out=np.zeros_like(weights), where=colsum > 0)

    d = cfg.damping_d
    base = (1.0 - d) / n
    scores_vec = np.full(n, 1.0 / n)
    for _ in range(cfg.max_iterations):
        updated = base + d * (transfer @ scores_vec)
        delta = float(np.max(np.abs(updated - scores_vec)))
        scores_vec = updated
        if delta < cfg.convergence_eps:
            break

    ranked = sorted(range(n), key=lambda i: (-scores_vec[i], i))[:budget]
    return _make_summary(doc, ranked, {i: float(scores_vec[i]) for i in ranked})


def lexrank_scores(doc: Document, cfg: AlgorithmConfig) -> np.ndarray:
    """Converged per-sentence centrality scores (exposed for analysis/tests)."""
    n = len(doc.sentences)
    full = lexrank(doc, cfg, n)
    assert full.scores is not None
    return np.array([full.scores[i] for i in range(n)])


# term-by-sentence matrices up to this many cells use dense LAPACK SVD;
# larger ones switch to sparse truncated SVD with a fixed start vector
_DENSE_SVD_LIMIT = 4_000_000


def _lsa_decomposition(vectors: Sequence[SentenceVector], want: int):
    vocab = sorted({t for vec in vectors for t in vec})
    t, n = len(vocab), len(vectors)
    col = {term: j for j, term in enumerate(vocab)}
    if t * n <= _DENSE_SVD_LIMIT:
        mat = np.zeros((t, n))
        for j, vec in enumerate(vectors):
            for term, w in vec.items():
                mat[col[term], j] = w
        _, sing, vt = np.linalg.svd(mat, full_matrices=False)
    else:
        import scipy.sparse as sp
        from scipy.sparse.linalg import svds

        rows, cols, data = [], [], []
        for j, vec in enumerate(vectors):
            for term, w in vec.items():
                rows.append(col[term])
                cols.append(j)
                data.append(w)
        mat = sp.csr_matrix((data, (rows, cols)), shape=(t, n))
        k = max(1, min(want, min(t, n) - 1))
        u, sing, vt = svds(mat, k=k, v0=np.ones(min(t, n)))
        order = np.argsort(-sing)
        sing, vt = sing[order], vt[order]
    tol = sing[0] * max(t, n) * np.finfo(float).eps if len(sing) else 0.0
    rank = int((sing > tol).sum())
    return sing, vt, rank


def lsa(doc: Document, cfg: AlgorithmConfig, budget: int) -> Summary:
    """Latent-topic selection via SVD of the term-by-sentence TF-IDF matrix.

    One sentence is picked per leading right singular vector (largest
    absolute coordinate); if the budget exceeds the usable rank, remaining
    slots go to the sentences with largest singular-value-weighted combined
    coordinate norm. An all-zero matrix falls back to the document prefix.
    """
    n = _check_inputs(doc, budget)
    budget = min(budget, n)
    vectors = build_vectors(doc)
    if not any(vectors):
        return _prefix_summary(doc, budget)

    want = budget if cfg.lsa_rank is None else cfg.lsa_rank
    sing, vt, rank = _lsa_decomposition(vectors, want)
    k = min(want, rank, len(sing))
    if k == 0:
        return _prefix_summary(doc, budget)

    picked: list[int] = []
    picked_mask = np.zeros(n, dtype=bool)
    for j in range(k):
        if len(picked) == budget:
            break
        row = np.abs(vt[j]).copy()
        row[picked_mask] = -1.0
        i = int(np.argmax(row))
        picked.append(i)
        picked_mask[i] = True

    combined = np.sqrt(np.sum((sing[:k, None] * vt[:k]) ** 2, axis=0))
    while len(picked) < budget:
        masked = combined.copy()
        masked[picked_mask] = -1.0
        i = int(np.argmax(masked))
        picked.append(i)
        picked_mask[i] = True
    return _make_summary(doc, picked, {i: float(combined[i]) for i in picked})


def build_support_sets(
    sim: np.ndarray,
    kind: SupportKind,
    threshold: float,
    cardinality: int,
    thresholds: Sequence[float] | None = None,
) -> list[SupportSet]:
    """One support set per passage, from a pairwise similarity matrix.

    The support set of passage i holds every other passage beating the
    similarity threshold (threshold variant) or the `cardinality` most
    similar other passages, earlier index winning ties (cardinality
    variant).
    """
    m = sim.shape[0]
    sets = []
    for i in range(m):
        if kind == SupportKind.THRESHOLD:
            eps_i = thresholds[i] if thresholds is not None else threshold
            members = [s for s in range(m) if s != i and sim[i, s] > eps_i]
        else:
            others = sorted((s for s in range(m) if s != i), key=lambda s: (-sim[i, s], s))
            members = others[:cardinality]
        sets.append(SupportSet(i, frozenset(members)))
    return sets


def _support_counts(
    sim: np.ndarray,
    kind: SupportKind,
    threshold: float,
    cardinality: int,
    thresholds: Sequence[float] | None = None,
) -> np.ndarray:
    """How many support sets each passage belongs to."""
    counts = np.zeros(sim.shape[0], dtype=np.int64)
    for support in build_support_sets(sim, kind, threshold, cardinality, thresholds):
        for s in support.members:
            counts[s] += 1
    return counts


def support_sets(
    doc: Document,
    cfg: AlgorithmConfig,
    budget: int,
    thresholds: Sequence[float] | None = None,
) -> Summary:
    """Rank sentences by how many other sentences' support sets contain them.

    `thresholds` optionally overrides the global threshold per passage.
    If every support set is empty (e.g. a strict threshold), the document
    prefix is returned.
    """
    n = _check_inputs(doc, budget)
    budget = min(budget, n)
    if thresholds is not None and len(thresholds) != n:
        raise ValueError("per-passage thresholds must match the sentence count")
    vectors = build_vectors(doc)
    sim = similarity_matrix(vectors, cfg.similarity)
    counts = _support_counts(sim, cfg.support_kind, cfg.support_threshold, cfg.support_cardinality, thresholds)
    if counts.max(initial=0) == 0:
        return _prefix_summary(doc, budget)
    ranked = sorted(range(n), key=lambda i: (-counts[i], i))[:budget]
    return _make_summary(doc, ranked, {i: float(counts[i]) for i in ranked})


def kp_centrality(
    doc: Document,
    cfg: AlgorithmConfig,
    keyphrases: Sequence[Sequence[str]],
    budget: int,
) -> Summary:
    """Support-set centrality over sentences plus keyphrase pseudo-passages.

    Keyphrases are vectorized in the document's TF-IDF space and take part
    in support-set construction like regular passages, but only real
    sentences can be selected. An empty keyphrase list reduces to plain
    support-set ranking.
    """
    n = _check_inputs(doc, budget)
    budget = min(budget, n)
    phrases = [tuple(p) for p in keyphrases if p]
    if not phrases:
        return support_sets(doc, cfg, budget)

    idf = document_idf(doc)
    vectors = build_vectors(doc) + [vectorize_tokens(p, idf) for p in phrases]
    sim = similarity_matrix(vectors, cfg.similarity)
    counts = _support_counts(sim, cfg.support_kind, cfg.support_threshold, cfg.support_cardinality)
    if counts[:n].max(initial=0) == 0:
        return _prefix_summary(doc, budget)
    ranked = sorted(range(n), key=lambda i: (-counts[i], i))[:budget]
    return _make_summary(doc, ranked, {i: float(counts[i]) for i in ranked})


def _stationary_distribution(transition: np.ndarray, eps: float, max_iterations: int) -> np.ndarray:
    n = transition.shape[0]
    pi = np.full(n, 1.0 / n)
    for _ in range(max_iterations):
        updated = transition.T @ pi
        total = updated.sum()
        if total > 0:
            updated = updated / total
        delta = float(np.max(np.abs(updated - pi)))
        pi = updated
        if delta < eps:
            break
    return pi


def grasshopper(
    doc: Document,
    cfg: AlgorithmConfig,
    prior: Sequence[float] | str = "uniform",
    budget: int = 1,
) -> Summary:
    """Diversity-aware ranking by random walks with absorption.

    The walk mixes the row-normalized similarity matrix with a prior
    distribution (uniform unless given). The first sentence is the
    stationary-distribution argmax; each later pick makes the already
    selected sentences absorbing and takes the sentence with the highest
    expected visit count, averaged over all possible starting sentences.
    """
    n = _check_inputs(doc, budget)
    if cfg.grasshopper_cap is not None and n > cfg.grasshopper_cap:
        doc = Document.from_sentences(doc.sentences[: cfg.grasshopper_cap], doc.provenance)
        n = len(doc.sentences)
    budget = min(budget, n)

    if isinstance(prior, str):
        if prior != "uniform":
            raise ValueError(f"unknown prior: {prior!r}")
        r = np.full(n, 1.0 / n)
    else:
        r = np.asarray(prior, dtype=float)
        if r.shape != (n,):
            raise ValueError("prior length must equal the sentence count")
        if np.any(r < 0) or abs(float(r.sum()) - 1.0) > 1e-8:
            raise ValueError("prior must be a probability distribution")

    vectors = build_vectors(doc)
    weights = similarity_matrix(vectors, cfg.similarity)
    rowsum = weights.sum(axis=1)
    safe = np.where(rowsum > 0, rowsum, 1.0)
    normalized = np.where(rowsum[:, None] > 0, weights / safe[:, None], 1.0 / n)
    lam = cfg.lambda_grasshopper
    transition = lam * normalized + (1.0 - lam) * np.outer(np.ones(n), r)

    pi = _stationary_distribution(transition, cfg.convergence_eps, cfg.max_iterations)
    first = int(np.argmax(pi))
    picked = [first]
    scores: dict[int, float] = {first: float(pi[first])}

    while len(picked) < budget:
        remaining = [i for i in range(n) if i not in picked]
        m = len(remaining)
        walk = np.eye(m) - transition[np.ix_(remaining, remaining)]
        try:
            # average expected visits per remaining sentence: column means of
            # the fundamental matrix inv(I - Q), obtained via a single solve
            visits = np.linalg.solve(walk.T, np.full(m, 1.0 / m))
        except np.linalg.LinAlgError as exc:
            where = doc.provenance or "document"
            raise SummarizationError(f"grasshopper: singular visit system for {where}") from exc
        j = int(np.argmax(visits))
        picked.append(remaining[j])
        scores[remaining[j]] = float(visits[j])
    return _make_summary(doc, picked, scores)


def summarize(
    doc: Document,
    algorithm: Algorithm | str,
    cfg: AlgorithmConfig | None = None,
    budget: int = 1,
    keyphrases: Sequence[Sequence[str]] | None = None,
    prior: Sequence[float] | str = "uniform",
    stopwords: set[str] | None = None,
) -> Summary:
    """Run one algorithm by name and enforce the summary contract.

    For keyphrase centrality, phrases are extracted automatically
    (`cfg.kp_count` of them) unless an explicit list is supplied.
    """
    alg = Algorithm(algorithm)
    cfg = cfg if cfg is not None else AlgorithmConfig()
    n = _check_inputs(doc, budget)

    if alg is Algorithm.MMR:
        summary = mmr(doc, cfg, budget)
    elif alg is Algorithm.LEXRANK:
        summary = lexrank(doc, cfg, budget)
    elif alg is Algorithm.LSA:
        summary = lsa(doc, cfg, budget)
    elif alg is Algorithm.SUPPORT_SETS:
        summary = support_sets(doc, cfg, budget)
    elif alg is Algorithm.KP_CENTRALITY:
        if keyphrases is None:
            keyphrases = [kp.tokens for kp in extract_keyphrases(doc, cfg.kp_count, stopwords)]
        summary = kp_centrality(doc, cfg, keyphrases, budget)
    elif alg is Algorithm.GRASSHOPPER:
        summary = grasshopper(doc, cfg, prior, budget)
    else:  # pragma: no cover - Algorithm() above rejects unknown names
        raise ValueError(f"unknown algorithm: {algorithm!r}")

    expected = min(budget, n)
    if alg is Algorithm.GRASSHOPPER and cfg.grasshopper_cap is not None:
        expected = min(budget, n, cfg.grasshopper_cap)
    if len(summary.selected) != expected:
        raise SummarizationError(f"{alg.value}: selected {len(summary.selected)} sentences, expected {expected}")
    if any(not 0 <= i < n for i in summary.selected):
        raise SummarizationError(f"{alg.value}: selected index out of bounds")
    if list(summary.selected) != sorted(set(summary.selected)):
        raise SummarizationError(f"{alg.value}: selection not strictly increasing")
    return summary
