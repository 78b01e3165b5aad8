"""Command-line entry points: attack-train (one dataset) and attack-campaign
(a manifest of dataset groups tabulated into a success-rate table)."""
import argparse
import dataclasses
import json
import sys

from .campaign import format_table, load_manifest, run_campaign, write_results_csv
from .dataio import load_dataset
from .features import build_features
from .network import AttackConfig, train_attack


def _config_from_args(args) -> AttackConfig:
    overrides = {}
    if args.max_epochs is not None:
        overrides["max_epochs"] = args.max_epochs
    if args.batch_size is not None:
        overrides["batch_size"] = args.batch_size
    return dataclasses.replace(AttackConfig(), **overrides)


def train_main(argv=None) -> int:
    parser = argparse.ArgumentParser(prog="attack-train", description=__doc__)
    parser.add_argument("--dataset", required=True)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--max-epochs", type=int, dest="max_epochs")
    parser.add_argument("--batch-size", type=int, dest="batch_size")
    parser.add_argument("--out", help="write the result record as JSON")
    args = parser.parse_args(argv)

    data = load_dataset(args.dataset)
    config = _config_from_args(args)
    result = train_attack(build_features(data), data.responses, config,
                          seed=args.seed, dataset_id=args.dataset)
    print(f"dataset {args.dataset}: {data.count} CRPs (n={data.n}, m={data.m}, "
          f"mode={data.mode})")
    print(f"test accuracy {result.test_accuracy:.4f} "
          f"({'success' if result.success else 'below the success threshold'}), "
          f"{result.epochs_run} epochs, {result.seconds:.1f}s")
    if args.out:
        with open(args.out, "w") as fh:
            json.dump(result.to_dict(), fh, indent=2, sort_keys=True)
            fh.write("\n")
    return 0


def campaign_main(argv=None) -> int:
    parser = argparse.ArgumentParser(prog="attack-campaign", description=__doc__)
    parser.add_argument("--manifest", required=True,
                        help='JSON: [{"label": ..., "datasets": [...]}, ...]')
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--max-epochs", type=int, dest="max_epochs")
    parser.add_argument("--batch-size", type=int, dest="batch_size")
    parser.add_argument("--out", help="write the success-rate table as CSV")
    args = parser.parse_args(argv)

    groups = load_manifest(args.manifest)
    config = _config_from_args(args)

    def progress(label, path, result):
        print(f"[{label}] {path}: accuracy {result.test_accuracy:.4f} "
              f"({result.epochs_run} epochs, {result.seconds:.0f}s)", flush=True)

    results = run_campaign(groups, config, seed=args.seed, progress=progress)
    print(format_table(results))
    if args.out:
        write_results_csv(results, args.out, config)
        print(f"results written to {args.out}")
    ran_any = any(row.instances for row in results)
    return 0 if ran_any else 1


if __name__ == "__main__":
    sys.exit(train_main())
