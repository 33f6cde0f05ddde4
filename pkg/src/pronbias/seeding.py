import hashlib
import random

DEFAULT_SEED = 17


def derive_seed(global_seed: int, record_id: str) -> int:
    """Stable per-record seed; independent of corpus order and PYTHONHASHSEED."""
    digest = hashlib.sha256(f"{global_seed}\x1f{record_id}".encode("utf-8")).digest()
    return int.from_bytes(digest[:8], "big")


def record_rng(global_seed: int, record_id: str, stream: str = "") -> random.Random:
    return random.Random(derive_seed(global_seed, f"{stream}:{record_id}" if stream else record_id))
