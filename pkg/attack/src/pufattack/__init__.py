"""Neural-network modeling attack on bit-packed PUF CRP datasets."""

from .dataio import CrpDataset, DatasetFormatError, load_dataset, load_sidecar
from .features import build_features, features_from_bits
from .network import AttackConfig, AttackResult, train_attack
from .campaign import load_manifest, run_campaign, write_results_csv

__version__ = "0.1.0"
