"""Command-line interface: train, recognize, eval, serve, synth."""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .config import EngineConfig
from .evaluate import dichotomous_eval, kfold_cv
from .ink import load_dataset, symbol_from_json
from .recognizer import recognize
from .synth import make_dataset
from .templates import build_model, load_model, save_model


def _cmd_train(args) -> int:
    config = EngineConfig(cluster_threshold=args.threshold)
    dataset = load_dataset(args.data, expected_classes=args.classes)
    model = build_model(dataset, config)
    save_model(model, args.out)
    for label in sorted(model.classes):
        for group in sorted(model.classes[label]):
            for region in sorted(model.classes[label][group], key=lambda r: r.value):
                n = len(model.classes[label][group][region])
                print(f"class {label} strokes {group} region {region.value}: {n} templates")
    print(f"saved {model.template_count()} templates to {args.out}")
    return 0


def _cmd_recognize(args) -> int:
    model = load_model(args.model)
    obj = json.loads(Path(args.ink).read_text(encoding="utf-8").strip().splitlines()[0])
    symbol = symbol_from_json(obj)
    result = recognize(symbol, model, topk=args.topk)
    print(json.dumps(result.to_dict(), indent=2))
    return 0


def _cmd_eval(args) -> int:
    dataset = load_dataset(args.data)
    if args.protocol == "dichotomous":
        report = dichotomous_eval(
            dataset, train_writers=args.train_writers, seed=args.seed, prune=not args.no_lb
        )
    else:
        report = kfold_cv(dataset, k=args.k, seed=args.seed, prune=not args.no_lb)
    print(
        f"{args.protocol}: error {report.error_rate:.2f}% "
        f"({report.misrecognized} misrecognized, {report.rejected} rejected, "
        f"{report.total} tested), {report.mean_time_per_char * 1000:.1f} ms/char, "
        f"{report.full_dtw_calls}/{report.candidates_seen} full alignments"
    )
    if args.report:
        Path(args.report).write_text(json.dumps(report.to_dict(), indent=2), encoding="utf-8")
        print(f"report written to {args.report}")
    return 0


def _cmd_serve(args) -> int:
    from .service import serve

    serve(args.model, args.bind)
    return 0


def _cmd_synth(args) -> int:
    from .ink import save_dataset

    dataset = make_dataset(
        classes=args.classes,
        writers=args.writers,
        repeats=args.repeats,
        noise=args.noise,
        seed=args.seed,
    )
    save_dataset(dataset, args.out)
    print(f"wrote {len(dataset)} symbols ({dataset.class_count} classes, "
          f"{len(dataset.writer_ids)} writers) to {args.out}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="inkmatch")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("train", help="build a template model from labeled ink")
    p.add_argument("--data", required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--threshold", type=float, default=EngineConfig().cluster_threshold,
                   help="cluster merge threshold (normalized distance)")
    p.add_argument("--classes", type=int, default=None,
                   help="declared class count (default: inferred from labels)")
    p.set_defaults(func=_cmd_train)

    p = sub.add_parser("recognize", help="classify one ink symbol file")
    p.add_argument("--model", required=True)
    p.add_argument("--ink", required=True)
    p.add_argument("--topk", type=int, default=5)
    p.set_defaults(func=_cmd_recognize)

    p = sub.add_parser("eval", help="run an evaluation protocol")
    p.add_argument("--data", required=True)
    p.add_argument("--protocol", choices=["dichotomous", "kfold"], default="kfold")
    p.add_argument("--k", type=int, default=5)
    p.add_argument("--train-writers", type=int, default=15)
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--report", default=None)
    p.add_argument("--no-lb", action="store_true",
                   help="disable lower-bound pruning (exhaustive matching)")
    p.set_defaults(func=_cmd_eval)

    p = sub.add_parser("serve", help="run the recognition service")
    p.add_argument("--model", default=None, help="model file (or INKMATCH_MODEL env)")
    p.add_argument("--bind", default="127.0.0.1:8600")
    p.set_defaults(func=_cmd_serve)

    p = sub.add_parser("synth", help="generate a synthetic labeled dataset")
    p.add_argument("--out", required=True)
    p.add_argument("--classes", type=int, default=10)
    p.add_argument("--writers", type=int, default=20)
    p.add_argument("--repeats", type=int, default=2)
    p.add_argument("--noise", type=float, default=0.02)
    p.add_argument("--seed", type=int, default=7)
    p.set_defaults(func=_cmd_synth)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
