"""Embedding-based metric scores for MT evaluation datasets.

Reads the pipeline's JSONL dataset, scores each hypothesis/reference pair
with a transformer checkpoint, and writes the external-scores JSON that the
samscore pipeline ingests. File formats are the only coupling; neither
package imports the other.
"""

from .compute import METRICS, BridgeOutput, compute_scores, write_output
from .dataset import SegmentPair, read_dataset
from .encoder import TextEncoder
from .errors import BridgeError, DatasetError, ModelError
from .scores import clip_unit, greedy_f1, mean_pool_cosine

__version__ = "0.1.0"

__all__ = [
    "BridgeError",
    "BridgeOutput",
    "DatasetError",
    "METRICS",
    "ModelError",
    "SegmentPair",
    "TextEncoder",
    "clip_unit",
    "compute_scores",
    "greedy_f1",
    "mean_pool_cosine",
    "read_dataset",
    "write_output",
    "__version__",
]
