"""Feature construction: challenge bits to the +/-1 suffix-product vectors
the modeling network trains on."""
import numpy as np

from .dataio import CrpDataset, DatasetFormatError


def features_from_bits(bits: np.ndarray) -> np.ndarray:
    """Row-wise suffix products of (2b - 1): feature i is the product of the
    +/-1-mapped bits from position i to the end."""
    pm1 = (2 * bits.astype(np.int8) - 1)
    out = np.cumprod(pm1[:, ::-1], axis=1, dtype=np.int8)[:, ::-1]
    return np.ascontiguousarray(out)


def build_features(dataset: CrpDataset, expected_width: int = None) -> np.ndarray:
    """Feature matrix of a loaded dataset, as float32 for training."""
    if expected_width is not None and dataset.width != expected_width:
        raise DatasetFormatError(
            f"dataset width {dataset.width}, expected {expected_width}")
    return features_from_bits(dataset.challenge_bits).astype(np.float32)
