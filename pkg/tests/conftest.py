import numpy as np
import pytest

from extrasum.ingest import Document
from extrasum.textmodel import Sentence

_VOCAB = [
    "alpha", "bravo", "charlie", "delta", "echo", "foxtrot", "golf",
    "hotel", "india", "juliet", "kilo", "lima", "mike", "november",
    "oscar", "papa", "quebec", "romeo", "sierra", "tango",
]


def make_doc(sentence_tokens, provenance="test"):
    """Build a Document directly from token lists."""
    sentences = [
        Sentence(i, " ".join(tokens) + ".", tuple(tokens))
        for i, tokens in enumerate(sentence_tokens)
    ]
    return Document.from_sentences(sentences, provenance)


def random_doc(rng: np.random.Generator, n_sentences=None, min_len=2, max_len=8, vocab=None):
    vocab = vocab or _VOCAB
    if n_sentences is None:
        n_sentences = int(rng.integers(3, 11))
    sents = []
    for _ in range(n_sentences):
        length = int(rng.integers(min_len, max_len + 1))
        sents.append([vocab[int(j)] for j in rng.integers(0, len(vocab), size=length)])
    return make_doc(sents)


@pytest.fixture
def rng():
    return np.random.default_rng(20240817)
