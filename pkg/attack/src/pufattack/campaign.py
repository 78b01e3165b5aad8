"""Attack campaigns: many (instance, dataset) runs tabulated as success rates."""
import csv
import json
import os
from dataclasses import dataclass

from .dataio import load_dataset
from .features import build_features
from .network import AttackConfig, train_attack


@dataclass
class GroupResult:
    label: str
    crp_count: int
    instances: int
    successes: int
    skipped: list
    accuracies: list

    @property
    def success_rate(self) -> float:
        return self.successes / self.instances if self.instances else float("nan")


def load_manifest(path) -> list:
    """Manifest: [{"label": str, "datasets": [paths...]}, ...]; relative paths
    resolve against the manifest's directory."""
    with open(path) as fh:
        groups = json.load(fh)
    base = os.path.dirname(os.path.abspath(path))
    resolved = []
    for group in groups:
        paths = [p if os.path.isabs(p) else os.path.join(base, p)
                 for p in group["datasets"]]
        resolved.append({"label": group["label"], "datasets": paths})
    return resolved


def run_campaign(groups, config: AttackConfig = AttackConfig(), seed: int = 0,
                 progress=None) -> list:
    results = []
    for group in groups:
        accuracies = []
        skipped = []
        successes = 0
        crp_count = 0
        for index, path in enumerate(group["datasets"]):
            if not os.path.exists(path):
                skipped.append(path)
                continue
            data = load_dataset(path)
            crp_count = data.count
            result = train_attack(build_features(data), data.responses, config,
                                  seed=seed + index, dataset_id=str(path))
            accuracies.append(result.test_accuracy)
            successes += result.success
            if progress:
                progress(group["label"], path, result)
        results.append(GroupResult(
            label=group["label"],
            crp_count=crp_count,
            instances=len(accuracies),
            successes=successes,
            skipped=skipped,
            accuracies=accuracies,
        ))
    return results


def write_results_csv(results, path, config: AttackConfig) -> None:
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["label", "crp_count", "instances", "successes",
                         "success_rate", "accuracies", "skipped", "config"])
        config_json = json.dumps(config.to_dict(), sort_keys=True)
        for row in results:
            writer.writerow([
                row.label, row.crp_count, row.instances, row.successes,
                f"{row.success_rate:.2f}" if row.instances else "",
                ";".join(f"{a:.4f}" for a in row.accuracies),
                ";".join(row.skipped),
                config_json,
            ])


def format_table(results) -> str:
    lines = [f"{'label':24s} {'CRPs':>9s} {'runs':>5s} {'success rate':>13s}  accuracies"]
    for row in results:
        rate = f"{100 * row.success_rate:.0f}%" if row.instances else "n/a"
        accs = " ".join(f"{a:.3f}" for a in row.accuracies)
        lines.append(f"{row.label:24s} {row.crp_count:>9d} {row.instances:>5d} "
                     f"{rate:>13s}  {accs}")
        for path in row.skipped:
            lines.append(f"{'':24s} skipped: {path}")
    return "\n".join(lines)
