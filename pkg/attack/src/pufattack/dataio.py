"""Reader for the bit-packed CRP dataset format and its JSON sidecar.

Implemented independently against the documented byte layout (eight 8-byte
little-endian header fields, then fixed-size records of packed challenge +
response byte) so this package depends only on the file contract, not on the
simulator's code. Header layout:

    offset  0  magic "PUFCRPS1"      offset 32  count (u64)
    offset  8  width = n + m (u64)   offset 40  seed (u64)
    offset 16  n (u64)               offset 48  mode tag (8 bytes)
    offset 24  m (u64)               offset 56  noise sigma (f64)

Records start at offset 64: ceil(width/8) challenge bytes, LSB-first
(logical bit 1 in bit 0 of byte 0), then one response byte.
"""
import json
from dataclasses import dataclass

import numpy as np

MAGIC = b"PUFCRPS1"
HEADER_BYTES = 64
MODES = {b"UNIFORM\x00": "uniform", b"LFSRTRCE": "trace"}


class DatasetFormatError(ValueError):
    pass


@dataclass(frozen=True)
class CrpDataset:
    width: int
    n: int
    m: int
    count: int
    seed: int
    mode: str
    noise_sigma: float
    packed_challenges: np.ndarray  # uint8 (count, ceil(width/8))
    responses: np.ndarray          # uint8 (count,)

    @property
    def challenge_bits(self) -> np.ndarray:
        return np.unpackbits(self.packed_challenges, axis=1, count=self.width,
                             bitorder="little")


def load_dataset(path) -> CrpDataset:
    with open(path, "rb") as fh:
        raw = fh.read()
    if len(raw) < HEADER_BYTES:
        raise DatasetFormatError(f"{path}: {len(raw)} bytes is too short for a header")
    if raw[:8] != MAGIC:
        raise DatasetFormatError(f"{path}: bad magic {raw[:8]!r}")
    fields = [int.from_bytes(raw[o:o + 8], "little") for o in (8, 16, 24, 32, 40)]
    width, n, m, count, seed = fields
    tag = raw[48:56]
    if tag not in MODES:
        raise DatasetFormatError(f"{path}: unknown mode tag {tag!r}")
    noise_sigma = float(np.frombuffer(raw[56:64], dtype="<f8")[0])
    if width != n + m:
        raise DatasetFormatError(f"{path}: width {width} != n+m = {n + m}")
    challenge_bytes = (width + 7) // 8
    record_bytes = challenge_bytes + 1
    body = raw[HEADER_BYTES:]
    if len(body) != count * record_bytes:
        raise DatasetFormatError(
            f"{path}: expected {count * record_bytes} record bytes, found {len(body)}")
    records = np.frombuffer(body, dtype=np.uint8).reshape(count, record_bytes)
    return CrpDataset(
        width=width, n=n, m=m, count=count, seed=seed, mode=MODES[tag],
        noise_sigma=noise_sigma,
        packed_challenges=records[:, :challenge_bytes],
        responses=records[:, challenge_bytes].copy(),
    )


def load_sidecar(path) -> dict:
    """The optional metadata file written next to a dataset."""
    with open(path) as fh:
        return json.load(fh)
