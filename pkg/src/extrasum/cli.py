"""Command-line interface.

Subcommands: `summarize` one document, `evaluate` a candidate against
references, `keyphrases` for a document, and `experiment` to run a full
manifest. A stopword file named by EXTRASUM_STOPWORDS overrides the
bundled lists everywhere.
"""

from __future__ import annotations

import argparse
import sys
from datetime import datetime, timezone
from pathlib import Path

from . import harness
from .ingest import SourceKind, ingest_file
from .keyphrase import extract_keyphrases, read_keyphrase_file
from .rouge import ReferenceSet, score
from .summarizers import Algorithm, AlgorithmConfig, SupportKind, summarize
from .textmodel import SimilarityKind

ALGORITHM_NAMES = [a.value for a in Algorithm]


def _add_config_flags(parser: argparse.ArgumentParser) -> None:
    group = parser.add_argument_group("algorithm parameters")
    group.add_argument("--preset", choices=sorted(harness.PRESETS), help="named parameter set to start from")
    group.add_argument("--lambda", dest="lambda_mmr", type=float, help="relevance/novelty balance for mmr")
    group.add_argument("--threshold", type=float, help="support-set similarity threshold")
    group.add_argument("--lexrank-threshold", type=float, help="cosine edge threshold for lexrank (0 = continuous weights)")
    group.add_argument("--similarity", choices=[k.value for k in SimilarityKind], help="similarity measure")
    group.add_argument("--support", choices=[k.value for k in SupportKind], help="support-set construction rule")
    group.add_argument("--cardinality", type=int, help="support-set size for the cardinality rule")
    group.add_argument("--kp-count", type=int, help="number of keyphrases for kp_centrality")
    group.add_argument("--damping", type=float, help="damping factor for lexrank")
    group.add_argument("--grasshopper-lambda", type=float, help="similarity/prior balance for grasshopper")
    group.add_argument("--eps", type=float, help="convergence tolerance for iterative methods")
    group.add_argument("--max-iterations", type=int, help="iteration cap for iterative methods")
    group.add_argument("--lsa-rank", type=int, help="number of latent topics (default: one per budgeted sentence)")


def _build_config(args: argparse.Namespace) -> AlgorithmConfig:
    base = harness.PRESETS[args.preset] if args.preset else AlgorithmConfig()
    overrides: dict = {}
    mapping = {
        "lambda_mmr": args.lambda_mmr,
        "support_threshold": args.threshold,
        "lexrank_threshold": args.lexrank_threshold,
        "similarity": SimilarityKind(args.similarity) if args.similarity else None,
        "support_kind": SupportKind(args.support) if args.support else None,
        "support_cardinality": args.cardinality,
        "kp_count": args.kp_count,
        "damping_d": args.damping,
        "lambda_grasshopper": args.grasshopper_lambda,
        "convergence_eps": args.eps,
        "max_iterations": args.max_iterations,
        "lsa_rank": args.lsa_rank,
    }
    for name, value in mapping.items():
        if value is not None:
            overrides[name] = value
    if not overrides:
        return base
    from dataclasses import replace

    return replace(base, **overrides)


def _detect_kind(path: Path, kind: str) -> SourceKind:
    if kind != "auto":
        return SourceKind(kind)
    return SourceKind.SUBTITLES if path.suffix.lower() == ".srt" else SourceKind.NEWS


def _cmd_summarize(args: argparse.Namespace) -> int:
    path = Path(args.input)
    try:
        doc = ingest_file(path, _detect_kind(path, args.kind))
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if not doc.sentences:
        print("error: input contains no sentences", file=sys.stderr)
        return 1
    if args.policy:
        policy = harness.SizingPolicy.parse(args.policy)
        if policy.kind in ("avg", "synopsis"):
            print("error: summarize has no references; use --budget, fixed: or fraction:", file=sys.stderr)
            return 2
        budget = harness.compute_budget(doc, [], policy)
    else:
        budget = args.budget
    cfg = _build_config(args)
    keyphrases = read_keyphrase_file(args.keyphrases) if args.keyphrases else None
    summary = summarize(doc, Algorithm(args.algorithm), cfg, budget, keyphrases=keyphrases)
    for index in summary.selected:
        print(doc.sentences[index].text)
    return 0


def _cmd_evaluate(args: argparse.Namespace) -> int:
    try:
        candidate_doc = ingest_file(Path(args.candidate), SourceKind.REFERENCE)
        ref_docs = [ingest_file(Path(p), SourceKind.REFERENCE) for p in args.references]
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    ref_docs = [d for d in ref_docs if d.sentences]
    if not ref_docs:
        print("error: references contain no sentences", file=sys.stderr)
        return 1
    refs = ReferenceSet.from_sentences([[s.tokens for s in d.sentences] for d in ref_docs])
    result = score([s.tokens for s in candidate_doc.sentences], refs, jackknife=args.jackknife)
    if args.format == "json":
        import json

        print(json.dumps({"r1": result.r1, "r2": result.r2, "rsu4": result.rsu4}, indent=2))
    else:
        print(f"R-1   {result.r1:.6f}")
        print(f"R-2   {result.r2:.6f}")
        print(f"R-SU4 {result.rsu4:.6f}")
    return 0


def _cmd_keyphrases(args: argparse.Namespace) -> int:
    path = Path(args.input)
    try:
        doc = ingest_file(path, _detect_kind(path, args.kind))
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    for phrase in extract_keyphrases(doc, args.kp_count if args.kp_count is not None else 10):
        print(" ".join(phrase.tokens))
    return 0


def _cmd_experiment(args: argparse.Namespace) -> int:
    cfg = _build_config(args)
    try:
        policy = harness.SizingPolicy.parse(args.policy)
        algorithms = [Algorithm(name.strip()) for name in args.algorithms.split(",") if name.strip()]
        results, errors = harness.run_experiment(
            args.manifest,
            algorithms,
            cfg,
            policy,
            workers=args.workers,
            jackknife=args.jackknife,
            check_determinism=args.seedless,
        )
    except (harness.ManifestError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    timestamp = None if args.no_timestamp else datetime.now(timezone.utc).isoformat()
    if args.format == "json":
        rendered = harness.render_json(
            results,
            timestamp=timestamp,
            scoring_metadata={
                "normalized": True,
                "lowercased": True,
                "stemming": False,
                "stopwords_removed": False,
                "jackknife": args.jackknife,
            },
        )
    else:
        rendered = harness.render_csv(results, timestamp=timestamp)
    out_path = Path(args.out)
    out_path.write_text(rendered, "utf-8", newline="")
    sidecar = harness.write_errors_sidecar(out_path, errors)

    for item_id, message in errors:
        print(f"error: item {item_id}: {message}", file=sys.stderr)
    if sidecar is not None:
        print(f"wrote {len(errors)} item error(s) to {sidecar}", file=sys.stderr)
    if results:
        print(f"wrote {out_path}")
        print(f"{'algorithm':<14} {'input_kind':<22} {'items':>5} {'R-1':>8} {'R-2':>8} {'R-SU4':>8} {'words':>9}")
        for row in harness.aggregate(results):
            print(
                f"{row['algorithm']:<14} {row['input_kind']:<22} {row['items']:>5} "
                f"{row['r1']:>8.4f} {row['r2']:>8.4f} {row['rsu4']:>8.4f} {row['word_count']:>9.1f}"
            )
    return 1 if errors and not results else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="extrasum", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p_sum = sub.add_parser("summarize", help="summarize one document to stdout")
    p_sum.add_argument("input", help="source file (plain text or .srt)")
    p_sum.add_argument("--kind", choices=["auto", "news", "subtitles", "script"], default="auto")
    p_sum.add_argument("--algorithm", choices=ALGORITHM_NAMES, default="lsa")
    p_sum.add_argument("--budget", type=int, default=5, help="number of sentences to select")
    p_sum.add_argument("--policy", help="sizing policy (fixed:N or fraction:F)")
    p_sum.add_argument("--keyphrases", help="keyphrase override file for kp_centrality")
    _add_config_flags(p_sum)
    p_sum.set_defaults(func=_cmd_summarize)

    p_eval = sub.add_parser("evaluate", help="score a candidate summary against references")
    p_eval.add_argument("candidate", help="candidate summary file")
    p_eval.add_argument("references", nargs="+", help="reference summary files")
    p_eval.add_argument("--jackknife", action="store_true", help="toolkit-style multi-reference averaging")
    p_eval.add_argument("--format", choices=["text", "json"], default="text")
    p_eval.set_defaults(func=_cmd_evaluate)

    p_kp = sub.add_parser("keyphrases", help="extract keyphrases from one document")
    p_kp.add_argument("input", help="source file (plain text or .srt)")
    p_kp.add_argument("--kind", choices=["auto", "news", "subtitles", "script"], default="auto")
    p_kp.add_argument("--kp-count", type=int, default=10)
    p_kp.set_defaults(func=_cmd_keyphrases)

    p_exp = sub.add_parser("experiment", help="run a manifest of items and write CSV/JSON results")
    p_exp.add_argument("manifest", help="manifest JSON file")
    p_exp.add_argument("--algorithms", default=",".join(ALGORITHM_NAMES), help="comma-separated algorithm names")
    p_exp.add_argument("--policy", default="avg", help="avg | synopsis | fixed:N | fraction:F")
    p_exp.add_argument("--workers", type=int, default=1)
    p_exp.add_argument("--out", required=True, help="output file for results")
    p_exp.add_argument("--format", choices=["csv", "json"], default="csv")
    p_exp.add_argument("--no-timestamp", action="store_true", help="omit the generated-at header")
    p_exp.add_argument("--seedless", action="store_true", help="run every selection twice and assert identical output")
    p_exp.add_argument("--jackknife", action="store_true", help="toolkit-style multi-reference averaging")
    _add_config_flags(p_exp)
    p_exp.set_defaults(func=_cmd_experiment)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    raise SystemExit(main())
