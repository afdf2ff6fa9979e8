"""Turn sentences into per-token embedding matrices with a local transformer."""

from typing import List, Sequence

import numpy as np
import torch

from .errors import ModelError


class TextEncoder:
    """Wraps a transformers checkpoint and strips special/padding positions.

    ``encode`` returns one float64 array of shape (n_tokens, dim) per input
    text, containing only real content positions. CPU only, eval mode, no
    gradients; results are deterministic for a fixed checkpoint.
    """

    def __init__(self, model_id: str, batch_size: int = 16):
        # import here so a missing torch/transformers surfaces as ModelError
        try:
            from transformers import AutoModel, AutoTokenizer

            self.tokenizer = AutoTokenizer.from_pretrained(model_id)
            self.model = AutoModel.from_pretrained(model_id)
        except Exception as exc:
            raise ModelError(f"cannot load model {model_id!r}: {exc}") from exc
        self.model_id = model_id
        self.batch_size = batch_size
        self.model.eval()

    def encode(self, texts: Sequence[str]) -> List[np.ndarray]:
        out = []
        for start in range(0, len(texts), self.batch_size):
            batch = list(texts[start:start + self.batch_size])
            enc = self.tokenizer(
                batch,
                return_tensors="pt",
                padding=True,
                truncation=True,
                return_special_tokens_mask=True,
            )
            with torch.no_grad():
                hidden = self.model(
                    input_ids=enc["input_ids"],
                    attention_mask=enc["attention_mask"],
                ).last_hidden_state
            keep = (enc["attention_mask"] == 1) & (enc["special_tokens_mask"] == 0)
            for i in range(len(batch)):
                out.append(hidden[i][keep[i]].numpy().astype(np.float64))
        return out
