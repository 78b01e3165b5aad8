"""The modeling-attack network and its training loop.

A small dense net over the +/-1 features: tanh hidden layers, sigmoid output,
binary cross-entropy under Adam with its default adaptive-moment schedule.
Training stops early once validation accuracy reaches the configured bar;
otherwise it runs the full epoch budget. Failure to converge is a result
(accuracy near 0.5), never an exception.
"""
import os
import time
from dataclasses import asdict, dataclass, field

import numpy as np

os.environ.setdefault("TF_CPP_MIN_LOG_LEVEL", "2")


@dataclass(frozen=True)
class AttackConfig:
    hidden_layers: tuple = (64, 32, 32, 64)
    hidden_activation: str = "tanh"
    output_activation: str = "sigmoid"
    loss: str = "binary_crossentropy"
    optimizer: str = "adam"
    batch_size: int = 100_000
    max_epochs: int = 500
    early_stop_val_accuracy: float = 0.98
    split: tuple = (0.84, 0.01, 0.15)
    success_threshold: float = 0.80

    def effective_batch_size(self, record_count: int) -> int:
        """The nominal batch, scaled down to a tenth of small datasets."""
        return max(1, min(self.batch_size, record_count // 10))

    def to_dict(self) -> dict:
        return asdict(self)


@dataclass
class AttackResult:
    dataset: str
    seed: int
    test_accuracy: float
    success: bool
    epochs_run: int
    seconds: float
    train_records: int
    config: dict = field(repr=False)

    def to_dict(self) -> dict:
        return {
            "dataset": self.dataset,
            "seed": self.seed,
            "test_accuracy": self.test_accuracy,
            "success": self.success,
            "epochs_run": self.epochs_run,
            "seconds": round(self.seconds, 2),
            "train_records": self.train_records,
            "config": self.config,
        }


def split_indices(count: int, split, seed: int):
    order = np.random.default_rng(seed).permutation(count)
    n_train = round(split[0] * count)
    n_val = round(split[1] * count)
    return (order[:n_train], order[n_train:n_train + n_val], order[n_train + n_val:])


def _build_model(width: int, config: AttackConfig):
    import tensorflow as tf

    layers = [tf.keras.layers.Input((width,))]
    for size in config.hidden_layers:
        layers.append(tf.keras.layers.Dense(size, activation=config.hidden_activation,
                                            kernel_initializer="random_normal"))
    layers.append(tf.keras.layers.Dense(1, activation=config.output_activation,
                                        kernel_initializer="random_normal"))
    model = tf.keras.Sequential(layers)
    model.compile(optimizer=config.optimizer, loss=config.loss, metrics=["accuracy"])
    return model


class _StopAtValAccuracy:
    """Keras callback facade built lazily to keep tensorflow optional."""

    def __new__(cls, threshold: float):
        import tensorflow as tf

        class Stop(tf.keras.callbacks.Callback):
            def __init__(self):
                super().__init__()
                self.epochs_run = 0

            def on_epoch_end(self, epoch, logs=None):
                self.epochs_run = epoch + 1
                if logs and logs.get("val_accuracy", 0.0) >= threshold:
                    self.model.stop_training = True

        return Stop()


def train_attack(features: np.ndarray, responses: np.ndarray,
                 config: AttackConfig = AttackConfig(), seed: int = 0,
                 dataset_id: str = "") -> AttackResult:
    """Fit the network and report held-out test accuracy.

    The split is drawn from `seed`, which also seeds the framework; repeated
    runs with one seed are stable to within framework nondeterminism.
    """
    import tensorflow as tf

    count = features.shape[0]
    train_idx, val_idx, test_idx = split_indices(count, config.split, seed)
    x = features.astype(np.float32, copy=False)
    y = responses.astype(np.float32, copy=False)
    tf.keras.utils.set_random_seed(seed + 1)
    model = _build_model(features.shape[1], config)
    stopper = _StopAtValAccuracy(config.early_stop_val_accuracy)
    started = time.perf_counter()
    model.fit(
        x[train_idx], y[train_idx],
        validation_data=(x[val_idx], y[val_idx]) if len(val_idx) else None,
        epochs=config.max_epochs,
        batch_size=config.effective_batch_size(count),
        callbacks=[stopper],
        verbose=0,
    )
    elapsed = time.perf_counter() - started
    predicted = (model.predict(x[test_idx], batch_size=config.batch_size,
                               verbose=0)[:, 0] >= 0.5)
    accuracy = float(np.mean(predicted == (y[test_idx] >= 0.5)))
    return AttackResult(
        dataset=dataset_id,
        seed=seed,
        test_accuracy=accuracy,
        success=accuracy >= config.success_threshold,
        epochs_run=stopper.epochs_run,
        seconds=elapsed,
        train_records=int(len(train_idx)),
        config=config.to_dict(),
    )
