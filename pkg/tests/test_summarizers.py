import numpy as np
import pytest

from extrasum.ingest import Document
from extrasum.summarizers import (
    Algorithm,
    AlgorithmConfig,
    SummarizationError,
    SupportKind,
    grasshopper,
    kp_centrality,
    lexrank,
    lexrank_scores,
    lsa,
    mmr,
    summarize,
    support_sets,
)
from extrasum.textmodel import (
    SimilarityKind,
    build_vectors,
    centroid,
    document_idf,
    similarity,
    vectorize_tokens,
)

from conftest import make_doc, random_doc

DEFAULT = AlgorithmConfig()


def ring_doc(n):
    """n sentences where every pair shares exactly one term: a complete
    similarity graph with all cosines equal to 1/(n-1)."""
    sents = []
    for i in range(n):
        sents.append([f"t{min(i, j)}_{max(i, j)}" for j in range(n) if j != i])
    return make_doc(sents)


def orthogonal_doc(n, tokens_per_sentence=2):
    """Disjoint vocabularies: pairwise-orthogonal nonzero vectors."""
    return make_doc(
        [[f"w{i}_{k}" for k in range(tokens_per_sentence)] for i in range(n)]
    )


# --------------------------------------------------------------------------
# MMR


class TestMmr:
    def test_lambda_one_equals_top_k_by_centroid_similarity(self, rng):
        cfg = AlgorithmConfig(lambda_mmr=1.0)
        for _ in range(25):
            doc = random_doc(rng)
            budget = int(rng.integers(1, len(doc.sentences) + 1))
            vectors = build_vectors(doc)
            query = centroid(vectors)
            rel = [similarity(v, query, cfg.similarity) for v in vectors]
            expected = sorted(
                sorted(range(len(vectors)), key=lambda i: (-rel[i], i))[:budget]
            )
            assert list(mmr(doc, cfg, budget).selected) == expected

    def test_lambda_zero_second_pick_minimizes_similarity_to_first(self, rng):
        cfg = AlgorithmConfig(lambda_mmr=0.0)
        for _ in range(25):
            doc = random_doc(rng, n_sentences=6)
            vectors = build_vectors(doc)
            summary = mmr(doc, cfg, 2)
            # with lambda 0 every first-round score is 0, so pick 0 wins
            first = 0
            assert first in summary.selected
            second = next(i for i in summary.selected if i != first)
            sims = [similarity(vectors[first], v, cfg.similarity) for v in vectors]
            best = min((sims[i], i) for i in range(len(vectors)) if i != first)
            assert sims[second] == best[0]

    def test_twins_and_outlier(self):
        doc = make_doc([["a"], ["a"], ["b"]])
        summary = mmr(doc, AlgorithmConfig(lambda_mmr=0.5), 2)
        assert set(summary.selected) == {0, 2}

    def test_budget_truncates(self, rng):
        doc = random_doc(rng, n_sentences=5)
        assert len(mmr(doc, DEFAULT, 3).selected) == 3
        assert len(mmr(doc, DEFAULT, 99).selected) == 5

    def test_manhattan_variant_runs(self, rng):
        doc = random_doc(rng, n_sentences=5)
        cfg = AlgorithmConfig(similarity=SimilarityKind.MANHATTAN)
        assert len(mmr(doc, cfg, 2).selected) == 2


# --------------------------------------------------------------------------
# LexRank


def lexrank_linear_system(doc, cfg):
    """Independent fixed point: solve (I - d*B) s = (1-d)/n directly."""
    vectors = build_vectors(doc)
    n = len(vectors)
    cos = np.zeros((n, n))
    for i in range(n):
        for j in range(n):
            if i != j:
                cos[i, j] = similarity(vectors[i], vectors[j], SimilarityKind.COSINE)
    weights = np.where(cos > cfg.lexrank_threshold, cos, 0.0)
    colsum = weights.sum(axis=0)
    b = np.divide(weights, colsum, out=np.zeros_like(weights), where=colsum > 0)
    return np.linalg.solve(np.eye(n) - cfg.damping_d * b, np.full(n, (1 - cfg.damping_d) / n))


class TestLexrank:
    def test_complete_equal_graph_scores_uniform(self):
        doc = ring_doc(4)
        cfg = AlgorithmConfig(convergence_eps=1e-10)
        scores = lexrank_scores(doc, cfg)
        assert np.allclose(scores, 0.25, atol=1e-9)
        assert lexrank(doc, cfg, 2).selected == (0, 1)

    def test_no_edges_gives_floor_score_exactly(self):
        doc = orthogonal_doc(5)
        d = DEFAULT.damping_d
        scores = lexrank_scores(doc, DEFAULT)
        assert np.array_equal(scores, np.full(5, (1 - d) / 5))
        assert lexrank(doc, DEFAULT, 2).selected == (0, 1)

    def test_matches_linear_system_oracle(self, rng):
        cfg = AlgorithmConfig(convergence_eps=1e-12, max_iterations=2000)
        for _ in range(20):
            doc = random_doc(rng, n_sentences=10)
            direct = lexrank_linear_system(doc, cfg)
            iterated = lexrank_scores(doc, cfg)
            assert np.max(np.abs(direct - iterated)) < 1e-5

    def test_score_conservation_without_isolated_vertices(self, rng):
        cfg = AlgorithmConfig(lexrank_threshold=0.0, convergence_eps=1e-10)
        checked = 0
        for _ in range(20):
            doc = random_doc(rng, n_sentences=8, min_len=4)
            scores = lexrank_scores(doc, cfg)
            vectors = build_vectors(doc)
            isolated = any(
                all(
                    similarity(vectors[i], vectors[j], SimilarityKind.COSINE) == 0.0
                    for j in range(len(vectors))
                    if j != i
                )
                for i in range(len(vectors))
            )
            if isolated:
                continue
            checked += 1
            assert abs(scores.sum() - 1.0) < 10 * cfg.convergence_eps
        assert checked >= 10

    def test_continuous_variant_differs_from_thresholded(self, rng):
        doc = random_doc(rng, n_sentences=8)
        continuous = lexrank_scores(doc, AlgorithmConfig(lexrank_threshold=0.0))
        thresholded = lexrank_scores(doc, AlgorithmConfig(lexrank_threshold=0.3))
        assert continuous.shape == thresholded.shape

    def test_selection_in_document_order(self, rng):
        doc = random_doc(rng, n_sentences=9)
        selected = lexrank(doc, DEFAULT, 4).selected
        assert list(selected) == sorted(selected)


# --------------------------------------------------------------------------
# LSA


class TestLsa:
    def test_orthogonal_topics_each_get_a_sentence(self):
        doc = orthogonal_doc(3)
        assert lsa(doc, DEFAULT, 3).selected == (0, 1, 2)

    def test_duplicate_plus_distinct(self):
        doc = make_doc([["cats", "purr"], ["cats", "purr"], ["dogs", "bark"]])
        summary = lsa(doc, DEFAULT, 2)
        assert 2 in summary.selected
        assert summary.selected[0] in (0, 1)

    def test_budget_one_picks_dominant_direction(self):
        # orthogonal sentences with distinct norms: the largest-norm sentence
        # owns the leading singular direction
        doc = make_doc([["a", "a", "a"], ["b"], ["c"]])
        assert lsa(doc, DEFAULT, 1).selected == (0,)

    def test_all_zero_matrix_falls_back_to_prefix(self):
        doc = make_doc([["same", "words"]])
        assert lsa(doc, DEFAULT, 1).selected == (0,)
        repeated = make_doc([["x", "y"], ["x", "y"]])  # identical: idf 0 everywhere
        assert lsa(repeated, DEFAULT, 2).selected == (0, 1)

    def test_budget_beyond_rank_fills_up(self):
        doc = make_doc([["a", "b"], ["a", "b", "c"], ["a", "c"], ["b", "c"]])
        summary = lsa(doc, DEFAULT, 4)
        assert summary.selected == (0, 1, 2, 3)

    def test_explicit_rank_cap(self, rng):
        doc = random_doc(rng, n_sentences=6)
        capped = lsa(doc, AlgorithmConfig(lsa_rank=1), 3)
        assert len(capped.selected) == 3

    def test_budget_exactness(self, rng):
        for _ in range(10):
            doc = random_doc(rng)
            budget = int(rng.integers(1, len(doc.sentences) + 2))
            assert len(lsa(doc, DEFAULT, budget).selected) == min(budget, len(doc.sentences))

    def test_sparse_path_agrees_with_dense(self, rng, monkeypatch):
        import extrasum.summarizers as mod

        doc = random_doc(rng, n_sentences=12)
        dense = lsa(doc, DEFAULT, 4)
        monkeypatch.setattr(mod, "_DENSE_SVD_LIMIT", 1)
        sparse = lsa(doc, DEFAULT, 4)
        assert dense.selected == sparse.selected


# --------------------------------------------------------------------------
# Support sets


def brute_support_ranking(doc, cfg):
    """Pure-Python recomputation of support sets and membership ranking."""
    vectors = build_vectors(doc)
    n = len(vectors)
    sets = []
    for i in range(n):
        if cfg.support_kind == SupportKind.THRESHOLD:
            members = {
                s
                for s in range(n)
                if s != i and similarity(vectors[s], vectors[i], cfg.similarity) > cfg.support_threshold
            }
        else:
            order = sorted(
                (s for s in range(n) if s != i),
                key=lambda s: (-similarity(vectors[s], vectors[i], cfg.similarity), s),
            )
            members = set(order[: cfg.support_cardinality])
        sets.append(members)
    counts = [sum(1 for members in sets if s in members) for s in range(n)]
    ranking = sorted(range(n), key=lambda s: (-counts[s], s))
    return counts, ranking


class TestSupportSets:
    def test_identical_sentences_cardinality(self):
        # all-identical sentences: every similarity ties, every support set
        # has exactly `cardinality` members (index tie-break), and the
        # earliest sentences win the selection
        doc = make_doc([["x", "y"]] * 4)
        cfg = AlgorithmConfig(support_kind=SupportKind.CARDINALITY, support_cardinality=2)
        summary = support_sets(doc, cfg, 2)
        assert summary.selected == (0, 1)
        counts, _ = brute_support_ranking(doc, cfg)
        assert sum(counts) == 4 * 2

    def test_twins_and_outlier_threshold(self):
        doc = make_doc([["a"], ["a"], ["b"]])
        cfg = AlgorithmConfig(support_kind=SupportKind.THRESHOLD, support_threshold=0.5)
        summary = support_sets(doc, cfg, 1)
        assert summary.selected == (0,)
        assert summary.scores[0] == 1.0

    def test_strict_threshold_falls_back_to_prefix(self, rng):
        doc = random_doc(rng, n_sentences=5)
        cfg = AlgorithmConfig(support_kind=SupportKind.THRESHOLD, support_threshold=1.0)
        assert support_sets(doc, cfg, 3).selected == (0, 1, 2)

    @pytest.mark.parametrize("kind", list(SupportKind))
    @pytest.mark.parametrize("sim", list(SimilarityKind))
    def test_matches_brute_force(self, rng, kind, sim):
        cfg = AlgorithmConfig(
            support_kind=kind, support_threshold=0.5, support_cardinality=2, similarity=sim
        )
        for _ in range(15):
            doc = random_doc(rng, n_sentences=int(rng.integers(2, 9)))
            n = len(doc.sentences)
            counts, ranking = brute_support_ranking(doc, cfg)
            budget = int(rng.integers(1, n + 1))
            summary = support_sets(doc, cfg, budget)
            if max(counts) == 0:
                assert summary.selected == tuple(range(budget))
            else:
                assert summary.selected == tuple(sorted(ranking[:budget]))

    def test_per_passage_threshold_hook(self):
        doc = make_doc([["a"], ["a"], ["b"]])
        cfg = AlgorithmConfig(support_kind=SupportKind.THRESHOLD, support_threshold=0.5)
        # raising every threshold above 1 empties all sets -> prefix
        assert support_sets(doc, cfg, 1, thresholds=[1.1, 1.1, 1.1]).selected == (0,)
        with pytest.raises(ValueError):
            support_sets(doc, cfg, 1, thresholds=[0.5])

    def test_support_set_owner_never_a_member(self, rng):
        from extrasum.summarizers import SupportSet, build_support_sets
        from extrasum.textmodel import similarity_matrix

        with pytest.raises(ValueError):
            SupportSet(1, frozenset({0, 1}))
        doc = random_doc(rng, n_sentences=7)
        sim = similarity_matrix(build_vectors(doc), SimilarityKind.COSINE)
        for kind in SupportKind:
            for support in build_support_sets(sim, kind, 0.2, 3):
                assert support.owner not in support.members


# --------------------------------------------------------------------------
# KP-centrality


def brute_kp_ranking(doc, phrases, cfg):
    """Support-set ranking recomputed over sentences + phrase pseudo-passages."""
    idf = document_idf(doc)
    vectors = build_vectors(doc) + [vectorize_tokens(p, idf) for p in phrases]
    m = len(vectors)
    n = len(doc.sentences)
    sets = []
    for i in range(m):
        if cfg.support_kind == SupportKind.THRESHOLD:
            members = {
                s
                for s in range(m)
                if s != i and similarity(vectors[s], vectors[i], cfg.similarity) > cfg.support_threshold
            }
        else:
            order = sorted(
                (s for s in range(m) if s != i),
                key=lambda s: (-similarity(vectors[s], vectors[i], cfg.similarity), s),
            )
            members = set(order[: cfg.support_cardinality])
        sets.append(members)
    counts = [sum(1 for members in sets if s in members) for s in range(n)]
    ranking = sorted(range(n), key=lambda s: (-counts[s], s))
    return counts, ranking


class TestKpCentrality:
    def test_empty_phrase_list_reduces_to_support_sets(self, rng):
        for _ in range(5):
            doc = random_doc(rng, n_sentences=6)
            budget = 3
            assert (
                kp_centrality(doc, DEFAULT, [], budget).selected
                == support_sets(doc, DEFAULT, budget).selected
            )

    def test_matching_phrase_boosts_membership(self):
        doc = make_doc(
            [
                ["rockets", "fly", "high"],
                ["gardens", "grow", "slow"],
                ["rivers", "run", "deep"],
                ["rockets", "land", "upright"],
            ]
        )
        cfg = AlgorithmConfig(support_kind=SupportKind.THRESHOLD, support_threshold=0.1)
        base = support_sets(doc, cfg, 4)
        boosted = kp_centrality(doc, cfg, [("rockets",)], 4)
        for i in (0, 3):  # sentences containing the phrase term
            assert boosted.scores[i] >= base.scores.get(i, 0.0)

    @pytest.mark.parametrize("kind", list(SupportKind))
    def test_matches_brute_force_with_phrases(self, rng, kind):
        cfg = AlgorithmConfig(support_kind=kind, support_threshold=0.3, support_cardinality=2)
        for _ in range(10):
            doc = random_doc(rng, n_sentences=4)
            phrases = [tuple(doc.sentences[0].tokens[:2]), (doc.sentences[-1].tokens[0],)]
            counts, ranking = brute_kp_ranking(doc, phrases, cfg)
            budget = 2
            summary = kp_centrality(doc, cfg, phrases, budget)
            if max(counts) == 0:
                assert summary.selected == tuple(range(budget))
            else:
                assert summary.selected == tuple(sorted(ranking[:budget]))

    def test_phrases_not_selectable(self, rng):
        doc = random_doc(rng, n_sentences=4)
        phrases = [("alpha",), ("bravo", "charlie")]
        summary = kp_centrality(doc, DEFAULT, phrases, 4)
        assert all(0 <= i < 4 for i in summary.selected)
        assert len(summary.selected) == 4


# --------------------------------------------------------------------------
# GRASSHOPPER


def stationary_eigen(transition):
    """Stationary distribution via dense eigendecomposition of P^T."""
    eigvals, eigvecs = np.linalg.eig(transition.T)
    idx = int(np.argmin(np.abs(eigvals - 1.0)))
    vec = np.abs(np.real(eigvecs[:, idx]))
    return vec / vec.sum()


def build_transition(doc, cfg):
    vectors = build_vectors(doc)
    n = len(vectors)
    weights = np.zeros((n, n))
    for i in range(n):
        for j in range(n):
            weights[i, j] = similarity(vectors[i], vectors[j], cfg.similarity)
    rowsum = weights.sum(axis=1)
    normalized = np.where(
        rowsum[:, None] > 0, weights / np.where(rowsum > 0, rowsum, 1.0)[:, None], 1.0 / n
    )
    return cfg.lambda_grasshopper * normalized + (1 - cfg.lambda_grasshopper) / n


def brute_grasshopper(doc, cfg, budget):
    """Full independent procedure: eigen-solve stationary distribution, then
    explicit fundamental-matrix inverses and column means."""
    transition = build_transition(doc, cfg)
    n = transition.shape[0]
    picks = [int(np.argmax(stationary_eigen(transition)))]
    while len(picks) < budget:
        remaining = [i for i in range(n) if i not in picks]
        q = transition[np.ix_(remaining, remaining)]
        fundamental = np.linalg.inv(np.eye(len(remaining)) - q)
        visits = fundamental.mean(axis=0)
        picks.append(remaining[int(np.argmax(visits))])
    return picks


class TestGrasshopper:
    def test_two_identical_sentences_tie_break(self):
        doc = make_doc([["x", "y"], ["x", "y"]])
        assert grasshopper(doc, DEFAULT, "uniform", 1).selected == (0,)

    def test_first_pick_matches_eigen_oracle(self, rng):
        cfg = AlgorithmConfig(convergence_eps=1e-10, max_iterations=5000)
        for _ in range(20):
            doc = random_doc(rng, n_sentences=int(rng.integers(2, 11)))
            pi = stationary_eigen(build_transition(doc, cfg))
            pick = grasshopper(doc, cfg, "uniform", 1).selected[0]
            # exact argmax identity unless components are tied within 1e-8
            assert pi[pick] >= pi.max() - 1e-8

    def test_full_procedure_matches_brute_force(self, rng):
        cfg = AlgorithmConfig(convergence_eps=1e-12, max_iterations=5000)
        for _ in range(10):
            doc = random_doc(rng, n_sentences=8)
            budget = 4
            expected = sorted(brute_grasshopper(doc, cfg, budget))
            assert list(grasshopper(doc, cfg, "uniform", budget).selected) == expected

    def test_star_graph_hub_first_then_leaf(self):
        # hub shares a term with every leaf; leaves are mutually disjoint
        doc = make_doc(
            [
                ["h1", "h2", "h3"],
                ["h1", "l1a", "l1b"],
                ["h2", "l2a", "l2b"],
                ["h3", "l3a", "l3b"],
            ]
        )
        assert grasshopper(doc, DEFAULT, "uniform", 1).selected == (0,)
        summary = grasshopper(doc, DEFAULT, "uniform", 2)
        assert 0 in summary.selected
        leaf = next(i for i in summary.selected if i != 0)
        assert leaf in (1, 2, 3)

    def test_explicit_prior(self, rng):
        doc = random_doc(rng, n_sentences=5)
        n = len(doc.sentences)
        prior = np.full(n, 1.0 / n)
        uniform_result = grasshopper(doc, DEFAULT, "uniform", 2)
        explicit_result = grasshopper(doc, DEFAULT, prior, 2)
        assert uniform_result.selected == explicit_result.selected

    def test_prior_validation(self, rng):
        doc = random_doc(rng, n_sentences=4)
        with pytest.raises(ValueError):
            grasshopper(doc, DEFAULT, [0.5, 0.5], 1)
        with pytest.raises(ValueError):
            grasshopper(doc, DEFAULT, [0.7, 0.2, 0.2, -0.1], 1)
        with pytest.raises(ValueError):
            grasshopper(doc, DEFAULT, "zipf", 1)

    def test_skewed_prior_changes_ranking_regime(self):
        doc = orthogonal_doc(4)
        prior = np.array([0.97, 0.01, 0.01, 0.01])
        cfg = AlgorithmConfig(lambda_grasshopper=0.0)
        assert grasshopper(doc, cfg, prior, 1).selected == (0,)

    def test_singular_visit_system_reported(self):
        # lambda 1 with two disconnected twin-pairs: after absorbing the first
        # pick, the other component keeps a stochastic block and I - Q is singular
        doc = make_doc([["a", "b"], ["a", "b"], ["c", "d"], ["c", "d"]])
        cfg = AlgorithmConfig(lambda_grasshopper=1.0)
        with pytest.raises(SummarizationError, match="singular"):
            grasshopper(doc, cfg, "uniform", 2)

    def test_input_cap(self, rng):
        doc = random_doc(rng, n_sentences=10)
        cfg = AlgorithmConfig(grasshopper_cap=4)
        summary = grasshopper(doc, cfg, "uniform", 6)
        assert len(summary.selected) == 4
        assert all(i < 4 for i in summary.selected)


# --------------------------------------------------------------------------
# dispatch and shared invariants


class TestSummarize:
    def test_empty_document_rejected(self):
        empty = Document.from_sentences([])
        with pytest.raises(ValueError):
            summarize(empty, Algorithm.LSA, DEFAULT, 1)

    def test_bad_budget_rejected(self, rng):
        doc = random_doc(rng, n_sentences=3)
        with pytest.raises(ValueError):
            summarize(doc, Algorithm.LSA, DEFAULT, 0)

    def test_unknown_algorithm_rejected(self, rng):
        doc = random_doc(rng, n_sentences=3)
        with pytest.raises(ValueError):
            summarize(doc, "frequency", DEFAULT, 1)

    @pytest.mark.parametrize("algorithm", list(Algorithm))
    def test_budget_at_least_document_returns_everything(self, rng, algorithm):
        doc = random_doc(rng, n_sentences=4)
        summary = summarize(doc, algorithm, DEFAULT, 10)
        assert summary.selected == (0, 1, 2, 3)
        assert summary.word_count == doc.total_words

    @pytest.mark.parametrize("algorithm", list(Algorithm))
    def test_deterministic(self, rng, algorithm):
        doc = random_doc(rng)
        budget = max(1, len(doc.sentences) // 2)
        first = summarize(doc, algorithm, DEFAULT, budget)
        second = summarize(doc, algorithm, DEFAULT, budget)
        assert first.selected == second.selected
        assert first.word_count == second.word_count

    @pytest.mark.parametrize("algorithm", list(Algorithm))
    def test_budget_exactness_and_order(self, rng, algorithm):
        for _ in range(5):
            doc = random_doc(rng)
            n = len(doc.sentences)
            budget = int(rng.integers(1, n + 3))
            summary = summarize(doc, algorithm, DEFAULT, budget)
            assert len(summary.selected) == min(budget, n)
            assert list(summary.selected) == sorted(set(summary.selected))
            assert all(0 <= i < n for i in summary.selected)

    @pytest.mark.parametrize("algorithm", list(Algorithm))
    def test_single_sentence_document(self, algorithm):
        doc = make_doc([["only", "one", "here"]])
        assert summarize(doc, algorithm, DEFAULT, 1).selected == (0,)

    @pytest.mark.parametrize("algorithm", list(Algorithm))
    def test_all_zero_vectors_prefix(self, algorithm):
        doc = make_doc([["x", "y"], ["x", "y"], ["x", "y"]])
        assert summarize(doc, algorithm, DEFAULT, 2).selected == (0, 1)

    @pytest.mark.parametrize("algorithm", list(Algorithm))
    def test_cosine_scale_invariance(self, rng, algorithm):
        # repeating every token scales all term weights uniformly; with
        # cosine similarity no algorithm's selection may change (keyphrases
        # are pinned, as repetition changes which n-grams exist)
        phrases = [("alpha", "bravo"), ("charlie",)]
        for _ in range(5):
            doc = random_doc(rng, n_sentences=6)
            scaled = make_doc([list(s.tokens) * 3 for s in doc.sentences])
            budget = 3
            base = summarize(doc, algorithm, DEFAULT, budget, keyphrases=phrases)
            big = summarize(scaled, algorithm, DEFAULT, budget, keyphrases=phrases)
            assert base.selected == big.selected

    def test_summarize_accepts_string_names(self, rng):
        doc = random_doc(rng, n_sentences=4)
        assert summarize(doc, "lexrank", DEFAULT, 2).selected == summarize(
            doc, Algorithm.LEXRANK, DEFAULT, 2
        ).selected

    def test_config_validation(self):
        with pytest.raises(ValueError):
            AlgorithmConfig(lambda_mmr=1.5)
        with pytest.raises(ValueError):
            AlgorithmConfig(damping_d=1.0)
        with pytest.raises(ValueError):
            AlgorithmConfig(convergence_eps=0.0)
        with pytest.raises(ValueError):
            AlgorithmConfig(support_cardinality=0)
        with pytest.raises(ValueError):
            AlgorithmConfig(lsa_rank=0)

    @pytest.mark.parametrize("algorithm", list(Algorithm))
    def test_vectorized_similarity_path_smoke(self, rng, algorithm):
        # 600 sentences crosses the exact/fast similarity-matrix switch
        doc = random_doc(rng, n_sentences=600, min_len=3, max_len=6)
        summary = summarize(doc, algorithm, DEFAULT, 3)
        assert len(summary.selected) == 3
