"""Command line front end: gen | baseline | evaluate | monitor | simulate."""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .classifier import NearestCentroidClassifier
from .dataio import read_dataset_csv, write_curve_csv, write_dataset_csv
from .degradation import evaluate_batch
from .monitor import SilhouetteDriftMonitor
from .profiles import build_profile, load_profile, save_profile
from .synth import BlobSpec, TimelineSpec, gen_blobs, run_experiment
from .windowing import MonitorConfig


def _positive_int(text):
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be a positive integer, got {text}")
    return value


def _positive_float(text):
    value = float(text)
    if value <= 0.0:
        raise argparse.ArgumentTypeError(f"must be a positive number, got {text}")
    return value


def _fraction(text):
    value = float(text)
    if not 0.0 < value <= 1.0:
        raise argparse.ArgumentTypeError(f"must lie in (0, 1], got {text}")
    return value


def _threshold_parser():
    parser = argparse.ArgumentParser(add_help=False)
    group = parser.add_argument_group("monitoring thresholds")
    group.add_argument(
        "--metric",
        choices=["euclidean", "cosine", "jaccard"],
        default="euclidean",
        help=(
            "distance measure for silhouette computation (default: euclidean); "
            "evaluate/monitor always use the metric stored in the profile"
        ),
    )
    group.add_argument(
        "--eval-trigger-pct",
        type=_fraction,
        default=0.20,
        help="per-class growth that triggers a self-evaluation (default: 0.20)",
    )
    group.add_argument(
        "--overall-threshold",
        type=_fraction,
        default=0.10,
        help="overall degradation that recommends a rebuild (default: 0.10)",
    )
    group.add_argument(
        "--class-threshold",
        type=_fraction,
        default=0.05,
        help="single-class degradation that recommends a rebuild (default: 0.05)",
    )
    group.add_argument(
        "--min-window",
        type=_positive_int,
        default=50,
        help="smallest window the trigger fires on (default: 50)",
    )
    return parser


def _config_from(args) -> MonitorConfig:
    return MonitorConfig(
        eval_trigger_pct=args.eval_trigger_pct,
        overall_rebuild_threshold=args.overall_threshold,
        class_rebuild_threshold=args.class_threshold,
        min_window=args.min_window,
        metric=args.metric,
    )


def _resolve_assigned(dataset, args, batch_path):
    """Assigned labels from the batch's own column, else from a --train classifier."""
    if dataset.assigned is not None:
        return dataset.assigned
    if args.train is None:
        raise ValueError(
            f"{batch_path}: no 'assigned' column; pass --train to classify with the "
            "built-in nearest-centroid model"
        )
    train = read_dataset_csv(args.train)
    if train.labels is None:
        raise ValueError(f"{args.train}: training data needs a 'label' column")
    clf = NearestCentroidClassifier(metric=args.metric)
    clf.fit(train.samples, train.labels)
    return clf.predict(dataset.samples)


def _dump_report(report, *, compact=False) -> str:
    doc = report.to_dict()
    if compact:
        return json.dumps(doc, separators=(",", ":"))
    return json.dumps(doc, indent=2)


def _export_curves(out_dir, prefix, curves) -> None:
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    for class_id in sorted(curves):
        write_curve_csv(out_dir / f"{prefix}_class_{class_id}.csv", curves[class_id])


def _cmd_gen(args) -> int:
    spec = BlobSpec(
        n_classes=args.k,
        n_per_class=args.n,
        dimension=args.d,
        std=args.std,
        seed=args.seed,
    )
    X, y = gen_blobs(spec)
    write_dataset_csv(args.out, X, labels=y)
    print(f"wrote {len(X)} samples ({args.k} classes, {args.d} features) to {args.out}",
          file=sys.stderr)
    return 0


def _cmd_baseline(args) -> int:
    dataset = read_dataset_csv(args.train)
    if dataset.labels is None:
        raise ValueError(f"{args.train}: training data needs a 'label' column")
    profile = build_profile(dataset.samples, dataset.labels, args.metric)
    save_profile(profile, args.out)
    print(
        f"baseline over {profile.n_train} samples, classes "
        f"{list(profile.class_ids)} -> {args.out}",
        file=sys.stderr,
    )
    return 0


def _cmd_evaluate(args) -> int:
    profile = load_profile(args.profile)
    dataset = read_dataset_csv(args.batch)
    assigned = _resolve_assigned(dataset, args, args.batch)
    config = _config_from(args)
    report, curves = evaluate_batch(
        profile,
        dataset.samples,
        assigned,
        step_id=args.step_id,
        config=config,
        trigger={"mode": "manual"},
        return_curves=True,
    )
    if args.export_curves is not None:
        _export_curves(args.export_curves, "baseline",
                       {c.class_id: c for c in profile.curves})
        _export_curves(args.export_curves, "current", curves)
    print(_dump_report(report))
    return 0


def _cmd_monitor(args) -> int:
    profile = load_profile(args.profile)
    mon = SilhouetteDriftMonitor.from_profile(
        profile,
        eval_trigger_pct=args.eval_trigger_pct,
        overall_threshold=args.overall_threshold,
        class_threshold=args.class_threshold,
        min_window=args.min_window,
    )
    emitted = 0
    for batch_path in args.batches:
        dataset = read_dataset_csv(batch_path)
        assigned = _resolve_assigned(dataset, args, batch_path)
        reports = mon.observe(dataset.samples, assigned)
        for report in reports:
            print(_dump_report(report, compact=True))
            emitted += 1
        print(
            f"{batch_path}: +{len(dataset)} samples, window={len(mon.window_)}, "
            f"reports={len(reports)}",
            file=sys.stderr,
        )
    print(f"monitor done: {emitted} evaluation(s) over {len(args.batches)} batch(es)",
          file=sys.stderr)
    return 0


def _cmd_simulate(args) -> int:
    out_dir = Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    blob_spec = BlobSpec(
        n_classes=args.k,
        n_per_class=args.n,
        dimension=args.d,
        std=args.std,
        seed=args.seed,
    )
    unknown = () if args.no_drift else (args.unknown_class,)
    timeline_spec = TimelineSpec(
        known_classes=(0, 1),
        unknown_classes=unknown,
        train_fraction=args.train_fraction,
        drift_increment=args.drift_increment,
        seed=args.seed,
    )
    config = _config_from(args)
    summary = []

    def on_baseline(profile):
        _export_curves(out_dir, "baseline", {c.class_id: c for c in profile.curves})

    def on_step(step_id, report, curves):
        (out_dir / f"report_{step_id}.json").write_text(
            _dump_report(report) + "\n", encoding="utf-8"
        )
        _export_curves(out_dir, f"current_{step_id}", curves)
        summary.append(
            {
                "step_id": step_id,
                "window_size": report.window_size,
                "overall": report.overall,
                "rebuild_recommended": report.rebuild_recommended,
                "indeterminate": report.indeterminate,
            }
        )
        print(
            f"{step_id}: window={report.window_size} overall={report.overall:+.6f} "
            f"rebuild={report.rebuild_recommended}",
            file=sys.stderr,
        )

    run_experiment(blob_spec, timeline_spec, config, on_baseline=on_baseline, on_step=on_step)
    print(json.dumps(summary, indent=2))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sildrift",
        description=(
            "Detect class-based concept drift by comparing per-class silhouette "
            "curves of newly classified data against a training-set baseline."
        ),
    )
    thresholds = _threshold_parser()
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="generate a seeded Gaussian-blob dataset CSV")
    gen.add_argument("--k", type=_positive_int, default=4, help="number of classes")
    gen.add_argument("--n", type=_positive_int, default=2000, help="samples per class")
    gen.add_argument("--d", type=_positive_int, default=10, help="feature dimension")
    gen.add_argument("--std", type=_positive_float, default=1.0, help="class std deviation")
    gen.add_argument("--seed", type=int, default=0)
    gen.add_argument("--out", required=True, help="output CSV path")
    gen.set_defaults(func=_cmd_gen)

    baseline = sub.add_parser(
        "baseline", parents=[thresholds], help="build a baseline profile from labeled training data"
    )
    baseline.add_argument("--train", required=True, help="training CSV with a 'label' column")
    baseline.add_argument("--out", required=True, help="output profile JSON path")
    baseline.set_defaults(func=_cmd_baseline)

    evaluate = sub.add_parser(
        "evaluate", parents=[thresholds], help="evaluate one batch against a baseline profile"
    )
    evaluate.add_argument("--profile", required=True, help="baseline profile JSON")
    evaluate.add_argument("--batch", required=True, help="batch CSV with an 'assigned' column")
    evaluate.add_argument(
        "--train",
        default=None,
        help="labeled training CSV; classifies the batch when it has no 'assigned' column",
    )
    evaluate.add_argument("--step-id", default=None, help="identifier echoed in the report")
    evaluate.add_argument(
        "--export-curves", default=None, metavar="DIR",
        help="also write baseline/current curve CSVs into DIR",
    )
    evaluate.set_defaults(func=_cmd_evaluate)

    monitor = sub.add_parser(
        "monitor", parents=[thresholds], help="stream batches through the trailing window"
    )
    monitor.add_argument("--profile", required=True, help="baseline profile JSON")
    monitor.add_argument(
        "--train",
        default=None,
        help="labeled training CSV; classifies batches lacking an 'assigned' column",
    )
    monitor.add_argument("batches", nargs="+", help="batch CSV files, in arrival order")
    monitor.set_defaults(func=_cmd_monitor)

    simulate = sub.add_parser(
        "simulate", parents=[thresholds],
        help="run the staged drift-injection experiment and export reports/curves",
    )
    simulate.add_argument("--out-dir", required=True, help="directory for reports and curves")
    simulate.add_argument("--k", type=_positive_int, default=4, help="number of classes")
    simulate.add_argument("--n", type=_positive_int, default=2000, help="samples per class")
    simulate.add_argument("--d", type=_positive_int, default=10, help="feature dimension")
    simulate.add_argument("--std", type=_positive_float, default=1.0)
    simulate.add_argument("--seed", type=int, default=0)
    simulate.add_argument(
        "--unknown-class", type=int, default=2,
        help="class injected from step t5 onward (default: 2)",
    )
    simulate.add_argument(
        "--no-drift", action="store_true",
        help="control run: no unknown-class samples are ever injected",
    )
    simulate.add_argument("--train-fraction", type=_fraction, default=0.60)
    simulate.add_argument("--drift-increment", type=_fraction, default=0.20)
    simulate.set_defaults(func=_cmd_simulate)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
