"""Batch experiment runner.

Reads a JSON manifest describing items (source files plus reference
summaries), summarizes every item with the requested algorithms under a
sizing policy, scores candidates against the references with ROUGE, and
reports absolute scores, full-document baselines, and per-metric relative
performance (candidate score / baseline score) as CSV or JSON.
"""

from __future__ import annotations

import csv
import io
import json
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

from .ingest import Document, SourceKind, combine_documents, ingest_file
from .keyphrase import read_keyphrase_file
from .rouge import ReferenceSet, RougeScore, score
from .summarizers import Algorithm, AlgorithmConfig, SummarizationError, SupportKind, summarize
from .textmodel import SimilarityKind

# Named parameter sets mirroring the evaluation setups this tool targets.
PRESETS: dict[str, AlgorithmConfig] = {
    "news": AlgorithmConfig(
        lambda_mmr=0.5,
        similarity=SimilarityKind.MANHATTAN,
        support_kind=SupportKind.CARDINALITY,
        support_cardinality=2,
        kp_count=10,
    ),
    "films": AlgorithmConfig(
        lambda_mmr=0.5,
        similarity=SimilarityKind.COSINE,
        support_kind=SupportKind.THRESHOLD,
        support_threshold=0.5,
        kp_count=50,
    ),
    "docs": AlgorithmConfig(
        lambda_mmr=0.75,
        similarity=SimilarityKind.COSINE,
        support_kind=SupportKind.THRESHOLD,
        support_threshold=0.5,
        kp_count=50,
    ),
}

BASELINE_ALGORITHM = "original"

CSV_COLUMNS = [
    "item_id",
    "algorithm",
    "input_kind",
    "r1",
    "r2",
    "rsu4",
    "word_count",
    "baseline_r1",
    "baseline_r2",
    "baseline_rsu4",
    "relative_r1",
    "relative_r2",
    "relative_rsu4",
]


class ManifestError(ValueError):
    pass


@dataclass(frozen=True)
class SizingPolicy:
    """How many sentences a generated summary gets.

    kinds: "avg" (rounded mean reference length), "synopsis" (mean synopsis
    length, and synopses become the scoring references), "fixed" (constant),
    "fraction" (ceil of a fraction of the source length).
    """

    kind: str
    count: int | None = None
    fraction: float | None = None

    def __post_init__(self):
        if self.kind not in ("avg", "synopsis", "fixed", "fraction"):
            raise ValueError(f"unknown sizing policy: {self.kind!r}")
        if self.kind == "fixed" and (self.count is None or self.count < 1):
            raise ValueError("fixed policy needs a count >= 1")
        if self.kind == "fraction" and not (self.fraction and 0.0 < self.fraction <= 1.0):
            raise ValueError("fraction policy needs a fraction in (0, 1]")

    @classmethod
    def parse(cls, text: str) -> "SizingPolicy":
        if text in ("avg", "synopsis"):
            return cls(text)
        if text.startswith("fixed:"):
            return cls("fixed", count=int(text.split(":", 1)[1]))
        if text.startswith("fraction:"):
            return cls("fraction", fraction=float(text.split(":", 1)[1]))
        raise ValueError(f"cannot parse sizing policy {text!r}")


@dataclass(frozen=True)
class ExperimentResult:
    item_id: str
    algorithm: str
    input_kind: str
    rouge: RougeScore
    word_count: int
    baseline: RougeScore
    relative: tuple[float | None, float | None, float | None]


def compute_budget(doc: Document, ref_docs: Sequence[Document], policy: SizingPolicy) -> int:
    """Sentence budget for one document under the given policy."""
    if policy.kind == "fixed":
        assert policy.count is not None
        return policy.count
    if policy.kind == "fraction":
        assert policy.fraction is not None
        return max(1, math.ceil(policy.fraction * len(doc.sentences)))
    if not ref_docs:
        raise ValueError(f"sizing policy {policy.kind!r} needs reference summaries")
    mean = sum(len(r.sentences) for r in ref_docs) / len(ref_docs)
    return max(1, math.floor(mean + 0.5))  # round half up


def load_manifest(path: str | Path) -> tuple[list[dict], Path]:
    """Load and validate a manifest; returns (items, base directory)."""
    path = Path(path)
    try:
        payload = json.loads(path.read_text("utf-8"))
    except (OSError, json.JSONDecodeError) as exc:
        raise ManifestError(f"cannot read manifest {path}: {exc}") from exc
    items = payload.get("items")
    if not isinstance(items, list) or not items:
        raise ManifestError("manifest must contain a non-empty 'items' list")
    seen: set[str] = set()
    for entry in items:
        if not isinstance(entry, dict) or "id" not in entry:
            raise ManifestError("every item needs an 'id'")
        if entry["id"] in seen:
            raise ManifestError(f"duplicate item id {entry['id']!r}")
        seen.add(entry["id"])
        sources = entry.get("sources")
        if not isinstance(sources, dict) or not sources:
            raise ManifestError(f"item {entry['id']!r}: 'sources' must map kind to path")
        for kind in sources:
            if kind not in ("news", "subtitles", "script"):
                raise ManifestError(f"item {entry['id']!r}: unknown source kind {kind!r}")
        refs = entry.get("references")
        if not isinstance(refs, list) or not refs:
            raise ManifestError(f"item {entry['id']!r}: 'references' must be a non-empty list")
        for ref in refs:
            if not isinstance(ref, dict) or "path" not in ref:
                raise ManifestError(f"item {entry['id']!r}: each reference needs a 'path'")
    return items, path.parent


def _select_references(refs: list[dict], policy: SizingPolicy) -> list[dict]:
    if policy.kind == "synopsis":
        chosen = [r for r in refs if r.get("kind") == "synopsis"]
    else:
        chosen = [r for r in refs if r.get("kind") != "synopsis"]
    if any("class" in r for r in chosen):
        chosen = [r for r in chosen if str(r.get("class", "")).lower() == "informative"]
    return chosen


def _input_documents(entry: dict, base_dir: Path) -> dict[str, Document]:
    sources = entry["sources"]
    docs: dict[str, Document] = {}
    for kind_name in ("news", "subtitles", "script"):
        if kind_name in sources:
            docs[kind_name] = ingest_file(base_dir / sources[kind_name], SourceKind(kind_name))
    if "script" in docs and "subtitles" in docs:
        docs[SourceKind.SCRIPT_PLUS_SUBTITLES.value] = combine_documents(
            docs["script"], docs["subtitles"]
        )
    return docs


def _relative(candidate: RougeScore, baseline: RougeScore) -> tuple[float | None, ...]:
    return tuple(c / b if b > 0 else None for c, b in zip(candidate.as_tuple(), baseline.as_tuple()))


def run_item(
    entry: dict,
    algorithms: Sequence[Algorithm | str],
    cfg: AlgorithmConfig,
    policy: SizingPolicy,
    base_dir: Path,
    jackknife: bool = False,
    check_determinism: bool = False,
) -> list[ExperimentResult]:
    """Summarize and score one manifest item across its input kinds."""
    item_id = entry["id"]
    ref_specs = _select_references(entry["references"], policy)
    if not ref_specs:
        raise ValueError(f"item {item_id!r}: no usable references for policy {policy.kind!r}")
    ref_docs = [ingest_file(base_dir / r["path"], SourceKind.REFERENCE) for r in ref_specs]
    ref_docs = [d for d in ref_docs if d.sentences]
    if not ref_docs:
        raise ValueError(f"item {item_id!r}: references contain no sentences")
    refs = ReferenceSet.from_sentences([[s.tokens for s in d.sentences] for d in ref_docs])

    keyphrases = None
    if entry.get("keyphrases"):
        keyphrases = read_keyphrase_file(base_dir / entry["keyphrases"])

    results: list[ExperimentResult] = []
    for input_kind, doc in _input_documents(entry, base_dir).items():
        if not doc.sentences:
            raise ValueError(f"item {item_id!r}: {input_kind} source has no sentences")
        baseline = score([s.tokens for s in doc.sentences], refs, jackknife=jackknife)
        results.append(
            ExperimentResult(
                item_id=item_id,
                algorithm=BASELINE_ALGORITHM,
                input_kind=input_kind,
                rouge=baseline,
                word_count=doc.total_words,
                baseline=baseline,
                relative=_relative(baseline, baseline),
            )
        )
        budget = compute_budget(doc, ref_docs, policy)
        for algorithm in algorithms:
            alg = Algorithm(algorithm)
            summary = summarize(doc, alg, cfg, budget, keyphrases=keyphrases)
            if check_determinism:
                again = summarize(doc, alg, cfg, budget, keyphrases=keyphrases)
                if again.selected != summary.selected:
                    raise SummarizationError(
                        f"item {item_id!r}: {alg.value} selection is not deterministic"
                    )
            candidate = [doc.sentences[i].tokens for i in summary.selected]
            rouge = score(candidate, refs, jackknife=jackknife)
            results.append(
                ExperimentResult(
                    item_id=item_id,
                    algorithm=alg.value,
                    input_kind=input_kind,
                    rouge=rouge,
                    word_count=summary.word_count,
                    baseline=baseline,
                    relative=_relative(rouge, baseline),
                )
            )
    return results


def run_experiment(
    manifest_path: str | Path,
    algorithms: Sequence[Algorithm | str],
    cfg: AlgorithmConfig,
    policy: SizingPolicy,
    workers: int = 1,
    jackknife: bool = False,
    check_determinism: bool = False,
) -> tuple[list[ExperimentResult], list[tuple[str, str]]]:
    """Run every manifest item; returns (sorted results, per-item errors).

    Item failures never abort the batch; they come back as (item_id,
    message) pairs. Results are sorted, so output is independent of
    worker scheduling.
    """
    items, base_dir = load_manifest(manifest_path)

    def work(entry: dict):
        return run_item(
            entry, algorithms, cfg, policy, base_dir,
            jackknife=jackknife, check_determinism=check_determinism,
        )

    results: list[ExperimentResult] = []
    errors: list[tuple[str, str]] = []
    if workers <= 1:
        outcomes = []
        for entry in items:
            try:
                outcomes.append((entry["id"], work(entry), None))
            except Exception as exc:
                outcomes.append((entry["id"], None, f"{type(exc).__name__}: {exc}"))
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            futures = [(entry["id"], pool.submit(work, entry)) for entry in items]
            outcomes = []
            for item_id, future in futures:
                try:
                    outcomes.append((item_id, future.result(), None))
                except Exception as exc:
                    outcomes.append((item_id, None, f"{type(exc).__name__}: {exc}"))
    for item_id, rows, error in outcomes:
        if error is not None:
            errors.append((item_id, error))
        else:
            results.extend(rows)
    results.sort(key=lambda r: (r.item_id, r.algorithm, r.input_kind))
    errors.sort()
    return results, errors


def aggregate(results: Sequence[ExperimentResult]) -> list[dict]:
    """Per (algorithm, input kind) means of each metric and of the word count."""
    if not results:
        raise ValueError("nothing to aggregate")
    groups: dict[tuple[str, str], list[ExperimentResult]] = {}
    for res in results:
        groups.setdefault((res.algorithm, res.input_kind), []).append(res)
    rows = []
    for (algorithm, input_kind), members in sorted(groups.items()):
        n = len(members)
        rows.append(
            {
                "algorithm": algorithm,
                "input_kind": input_kind,
                "items": n,
                "r1": sum(m.rouge.r1 for m in members) / n,
                "r2": sum(m.rouge.r2 for m in members) / n,
                "rsu4": sum(m.rouge.rsu4 for m in members) / n,
                "word_count": sum(m.word_count for m in members) / n,
            }
        )
    return rows


def _fmt(value: float | None) -> str:
    return "" if value is None else f"{value:.6f}"


def render_csv(results: Sequence[ExperimentResult], timestamp: str | None = None) -> str:
    """Fixed-column CSV, one row per result; optional leading timestamp comment."""
    buf = io.StringIO()
    if timestamp is not None:
        buf.write(f"# generated {timestamp}\r\n")
    writer = csv.writer(buf)
    writer.writerow(CSV_COLUMNS)
    for res in results:
        writer.writerow(
            [
                res.item_id,
                res.algorithm,
                res.input_kind,
                _fmt(res.rouge.r1),
                _fmt(res.rouge.r2),
                _fmt(res.rouge.rsu4),
                res.word_count,
                _fmt(res.baseline.r1),
                _fmt(res.baseline.r2),
                _fmt(res.baseline.rsu4),
                _fmt(res.relative[0]),
                _fmt(res.relative[1]),
                _fmt(res.relative[2]),
            ]
        )
    return buf.getvalue()


def render_json(
    results: Sequence[ExperimentResult],
    timestamp: str | None = None,
    scoring_metadata: dict | None = None,
) -> str:
    """Results nested by item and input kind, plus aggregates and metadata."""
    items: dict = {}
    for res in results:
        record = {
            "r1": res.rouge.r1,
            "r2": res.rouge.r2,
            "rsu4": res.rouge.rsu4,
            "word_count": res.word_count,
            "relative": list(res.relative),
        }
        slot = items.setdefault(res.item_id, {}).setdefault(res.input_kind, {})
        if res.algorithm == BASELINE_ALGORITHM:
            slot["baseline"] = record
        else:
            slot.setdefault("algorithms", {})[res.algorithm] = record
    payload: dict = {"items": items, "aggregate": aggregate(results) if results else []}
    if scoring_metadata:
        payload["scoring"] = scoring_metadata
    if timestamp is not None:
        payload["generated"] = timestamp
    return json.dumps(payload, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def write_errors_sidecar(out_path: str | Path, errors: Sequence[tuple[str, str]]) -> Path | None:
    """Write per-item failures next to the results file; no file when clean."""
    if not errors:
        return None
    sidecar = Path(str(out_path) + ".errors.log")
    sidecar.write_text("".join(f"{item_id}\t{message}\n" for item_id, message in errors), "utf-8")
    return sidecar
