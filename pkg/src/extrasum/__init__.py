"""Extractive summarization toolkit.

Six generic sentence-ranking algorithms (MMR, LexRank, LSA, support sets,
keyphrase-augmented centrality, GRASSHOPPER) over a shared TF-IDF sentence
model, plus parsers for SRT subtitles / screenplays / plain text, ROUGE-1/2/SU4
recall scoring, and a batch evaluation harness with a CLI.
"""

from .ingest import (
    Document,
    RawDocument,
    SourceKind,
    SrtParseError,
    SubtitleCue,
    combine_documents,
    cues_to_raw,
    ingest_file,
    normalize,
    parse_script,
    parse_srt,
    segment,
    tokenize,
)
from .keyphrase import KeyPhrase, extract_keyphrases
from .rouge import ReferenceSet, RougeScore, rouge_n, rouge_su4, score
from .summarizers import (
    Algorithm,
    AlgorithmConfig,
    SummarizationError,
    Summary,
    SupportKind,
    SupportSet,
    grasshopper,
    kp_centrality,
    lexrank,
    lsa,
    mmr,
    summarize,
    support_sets,
)
from .textmodel import (
    Sentence,
    SentenceVector,
    SimilarityKind,
    build_vectors,
    centroid,
    similarity,
    similarity_matrix,
)

__version__ = "0.1.0"

__all__ = [
    "Algorithm",
    "AlgorithmConfig",
    "Document",
    "KeyPhrase",
    "RawDocument",
    "ReferenceSet",
    "RougeScore",
    "Sentence",
    "SentenceVector",
    "SimilarityKind",
    "SourceKind",
    "SrtParseError",
    "SubtitleCue",
    "SummarizationError",
    "Summary",
    "SupportKind",
    "SupportSet",
    "build_vectors",
    "centroid",
    "combine_documents",
    "cues_to_raw",
    "extract_keyphrases",
    "grasshopper",
    "ingest_file",
    "kp_centrality",
    "lexrank",
    "lsa",
    "mmr",
    "normalize",
    "parse_script",
    "parse_srt",
    "rouge_n",
    "rouge_su4",
    "score",
    "segment",
    "similarity",
    "similarity_matrix",
    "summarize",
    "support_sets",
    "tokenize",
]
