"""Parsers and normalization for raw summarization inputs.

Supported sources: SRT subtitle files, plain-text screenplays (scene
descriptions kept, dialog stripped), plain-text articles, and reference
summaries. Raw text is normalized (sentence-internal punctuation removed,
whitespace collapsed) and segmented into tokenized sentences; the resulting
`Document` is the unit every ranking algorithm consumes.

All functions here are pure; the returned values are immutable and safe to
share across workers.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum
from importlib import resources
from pathlib import Path
from typing import Callable, Sequence

from .textmodel import Sentence


class SourceKind(str, Enum):
    NEWS = "news"
    SUBTITLES = "subtitles"
    SCRIPT = "script"
    SCRIPT_PLUS_SUBTITLES = "script_plus_subtitles"
    REFERENCE = "reference"


@dataclass(frozen=True)
class SubtitleCue:
    """One SRT block: cue number, timing in milliseconds, and its text."""

    index: int
    start_ms: int
    end_ms: int
    text: str


@dataclass(frozen=True)
class RawDocument:
    source_kind: SourceKind
    text: str
    provenance: str = ""


@dataclass(frozen=True)
class Document:
    """An ordered sequence of tokenized sentences."""

    sentences: tuple[Sentence, ...]
    total_words: int
    provenance: str = ""

    @classmethod
    def from_sentences(cls, sentences: Sequence[Sentence], provenance: str = "") -> "Document":
        sents = tuple(sentences)
        return cls(sents, sum(s.word_count for s in sents), provenance)


class SrtParseError(ValueError):
    """Raised on malformed SRT input; carries the 1-based line number."""

    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


_TIMESTAMP_RE = re.compile(
    r"^\s*(\d{2}):(\d{2}):(\d{2})[,.](\d{3})\s*-->\s*(\d{2}):(\d{2}):(\d{2})[,.](\d{3})(?:\s.*)?$"
)
_TAG_RE = re.compile(r"<[^>]*>")
_WS_RE = re.compile(r"\s+")


def decode_bytes(data: bytes) -> str:
    """Decode UTF-8 (optional BOM) with a Latin-1 fallback for legacy files."""
    try:
        return data.decode("utf-8-sig")
    except UnicodeDecodeError:
        return data.decode("latin-1")


def _timestamp_ms(h: str, m: str, s: str, ms: str) -> int:
    return ((int(h) * 60 + int(m)) * 60 + int(s)) * 1000 + int(ms)


def parse_srt(data: bytes | str) -> list[SubtitleCue]:
    """Parse SRT subtitle content into cues, preserving file order.

    Each block is an index line, a "HH:MM:SS,mmm --> HH:MM:SS,mmm" line,
    and one or more text lines; blocks are separated by blank lines. Text
    lines are joined with a single space and HTML-like tags are stripped.
    An empty file yields an empty list; structural problems raise
    SrtParseError with the offending line number.
    """
    text = decode_bytes(data) if isinstance(data, bytes) else data
    lines = text.splitlines()
    cues: list[SubtitleCue] = []
    i = 0
    while True:
        while i < len(lines) and not lines[i].strip():
            i += 1
        if i >= len(lines):
            break
        index_line = lines[i].strip()
        try:
            index = int(index_line)
        except ValueError:
            raise SrtParseError(f"expected cue index, got {index_line!r}", i + 1) from None
        if index <= 0:
            raise SrtParseError(f"cue index must be positive, got {index}", i + 1)
        i += 1
        if i >= len(lines):
            raise SrtParseError("missing timestamp line", i + 1)
        match = _TIMESTAMP_RE.match(lines[i])
        if match is None:
            raise SrtParseError(f"malformed timestamp line: {lines[i].strip()!r}", i + 1)
        start_ms = _timestamp_ms(*match.group(1, 2, 3, 4))
        end_ms = _timestamp_ms(*match.group(5, 6, 7, 8))
        if start_ms > end_ms:
            raise SrtParseError("cue ends before it starts", i + 1)
        i += 1
        text_lines = []
        while i < len(lines) and lines[i].strip():
            text_lines.append(lines[i].strip())
            i += 1
        if not text_lines:
            raise SrtParseError("cue has no text lines", i + 1)
        cue_text = _WS_RE.sub(" ", _TAG_RE.sub("", " ".join(text_lines))).strip()
        cues.append(SubtitleCue(index, start_ms, end_ms, cue_text))
    return cues


def cues_to_raw(cues: Sequence[SubtitleCue], provenance: str = "") -> RawDocument:
    """Concatenate cue texts in file order; timestamps and indices are discarded."""
    text = " ".join(c.text for c in cues if c.text)
    return RawDocument(SourceKind.SUBTITLES, text, provenance)


def _indent(line: str) -> int:
    expanded = line.expandtabs()
    return len(expanded) - len(expanded.lstrip(" "))


_PARENTHETICAL_RE = re.compile(r"\([^)]*\)")


def _is_cue_line(line: str, scene_indent: int) -> bool:
    stripped = line.strip()
    if not stripped or stripped.startswith(("INT.", "EXT.")):
        return False
    core = _PARENTHETICAL_RE.sub(" ", stripped)
    letters = [ch for ch in core if ch.isalpha()]
    if not letters or not all(ch.isupper() for ch in letters):
        return False
    return _indent(line) > scene_indent or len(stripped) < 40


def parse_script(raw_text: str, provenance: str = "") -> RawDocument:
    """Extract scene-description text from a plain-text screenplay.

    Dialog blocks are dropped: a character-cue line (all alphabetic
    characters uppercase, parentheticals allowed, and either indented more
    than scene text or shorter than 40 characters) plus the following
    more-indented lines up to a blank line. Scene headings (INT./EXT.)
    are kept. This is a layout heuristic; unconventional scripts fall
    through with their full text intact.
    """
    lines = raw_text.splitlines()
    indents = [_indent(ln) for ln in lines if ln.strip()]
    scene_indent = min(indents) if indents else 0

    kept: list[str] = []
    i = 0
    while i < len(lines):
        line = lines[i]
        if not line.strip():
            i += 1
            continue
        if _is_cue_line(line, scene_indent):
            i += 1
            while i < len(lines) and lines[i].strip() and _indent(lines[i]) > scene_indent:
                i += 1
            continue
        kept.append(line.strip())
        i += 1
    text = _WS_RE.sub(" ", " ".join(kept)).strip()
    return RawDocument(SourceKind.SCRIPT, text, provenance)


# Sentence-internal punctuation removed by normalize(); terminal . ! ? are kept.
_INTERNAL_PUNCT_RE = re.compile(r"[,;:'\"“”‘’«»‹›`´()\[\]{}\-–—―_]")


def normalize(raw: RawDocument) -> RawDocument:
    """Remove sentence-internal punctuation and collapse whitespace.

    Commas, semicolons, colons, quotes, parentheses, brackets, and dashes
    are deleted; periods, exclamation and question marks survive wherever
    they appear (abbreviation periods are resolved later, by segmentation).
    Idempotent.
    """
    text = _INTERNAL_PUNCT_RE.sub("", raw.text)
    text = _WS_RE.sub(" ", text).strip()
    return RawDocument(raw.source_kind, text, raw.provenance)


_TOKEN_RE = re.compile(r"[^\W_]+")


def tokenize(
    text: str,
    stopwords: set[str] | None = None,
    stemmer: Callable[[str], str] | None = None,
) -> list[str]:
    """Lowercase and split on non-alphanumeric runs.

    Stopword removal and stemming are off unless explicitly supplied; the
    same tokenizer is used for source documents, references, and keyphrase
    files so the pipelines stay comparable.
    """
    tokens = _TOKEN_RE.findall(text.lower())
    if stopwords:
        tokens = [t for t in tokens if t not in stopwords]
    if stemmer is not None:
        tokens = [stemmer(t) for t in tokens]
    return tokens


def default_abbreviations() -> set[str]:
    """Bundled English and Portuguese abbreviations that never end a sentence."""
    text = resources.files("extrasum").joinpath("data/abbreviations.txt").read_text("utf-8")
    return {line.strip().lower() for line in text.splitlines() if line.strip()}


_BOUNDARY_RE = re.compile(r"[.!?]+(?=\s)")
_INITIALS_RE = re.compile(r"(\w\.)+")
_LAST_WORD_RE = re.compile(r"(\S+)$")


def segment(
    raw: RawDocument,
    abbreviations: set[str] | None = None,
    stopwords: set[str] | None = None,
    stemmer: Callable[[str], str] | None = None,
) -> Document:
    """Split normalized text into tokenized sentences.

    A sentence boundary is a run of . ! ? followed by whitespace and an
    uppercase letter or digit. Splits after known abbreviations ("Mr.",
    "Sra.", ...) and after single-letter initials ("A.B.") are suppressed.
    Sentences with no tokens are dropped.
    """
    if abbreviations is None:
        abbreviations = default_abbreviations()
    text = raw.text
    boundaries: list[tuple[int, int]] = []
    for match in _BOUNDARY_RE.finditer(text):
        end = match.end()
        j = end
        while j < len(text) and text[j].isspace():
            j += 1
        if j >= len(text):
            break
        nxt = text[j]
        if not (nxt.isupper() or nxt.isdigit()):
            continue
        if match.group() == ".":
            word_match = _LAST_WORD_RE.search(text, 0, end)
            word = word_match.group(1).lower() if word_match else ""
            if word in abbreviations or _INITIALS_RE.fullmatch(word):
                continue
        boundaries.append((end, j))

    pieces: list[str] = []
    start = 0
    for end, nxt in boundaries:
        pieces.append(text[start:end])
        start = nxt
    pieces.append(text[start:])

    sentences: list[Sentence] = []
    for piece in pieces:
        piece = piece.strip()
        if not piece:
            continue
        tokens = tokenize(piece, stopwords=stopwords, stemmer=stemmer)
        if not tokens:
            continue
        sentences.append(Sentence(len(sentences), piece, tuple(tokens)))
    return Document.from_sentences(sentences, raw.provenance)


def combine_documents(script_doc: Document, subtitles_doc: Document, provenance: str = "") -> Document:
    """Script sentences followed by subtitle sentences, reindexed.

    Combining at the sentence level (rather than concatenating raw text)
    keeps the combined sentence count exactly additive.
    """
    sentences: list[Sentence] = []
    for sent in list(script_doc.sentences) + list(subtitles_doc.sentences):
        sentences.append(Sentence(len(sentences), sent.text, sent.tokens))
    return Document.from_sentences(sentences, provenance or f"{script_doc.provenance}+{subtitles_doc.provenance}")


def load_raw(path: str | Path, kind: SourceKind) -> RawDocument:
    """Read one source file into a RawDocument according to its kind."""
    path = Path(path)
    data = path.read_bytes()
    if kind == SourceKind.SUBTITLES:
        return cues_to_raw(parse_srt(data), provenance=str(path))
    if kind == SourceKind.SCRIPT:
        return parse_script(decode_bytes(data), provenance=str(path))
    if kind in (SourceKind.NEWS, SourceKind.REFERENCE):
        return RawDocument(kind, decode_bytes(data), provenance=str(path))
    raise ValueError(f"cannot load a file directly as {kind.value}")


def ingest_file(
    path: str | Path,
    kind: SourceKind,
    abbreviations: set[str] | None = None,
    stopwords: set[str] | None = None,
    stemmer: Callable[[str], str] | None = None,
) -> Document:
    """Parse, normalize, and segment one source file."""
    raw = load_raw(path, kind)
    return segment(normalize(raw), abbreviations=abbreviations, stopwords=stopwords, stemmer=stemmer)
