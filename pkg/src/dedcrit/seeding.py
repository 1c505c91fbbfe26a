"""Deterministic RNG derivation, so randomized internals replay bit for bit."""

import hashlib
import random


def seeded_rng(*tokens) -> random.Random:
    """Return a PRNG whose state is a pure function of the given tokens.

    Tokens should be ints, strings, or (nested) tuples of those; their repr
    is hashed, so the stream never depends on interpreter hash randomization.
    """
    blob = repr(tokens).encode("utf-8")
    digest = hashlib.blake2b(blob, digest_size=8).digest()
    return random.Random(int.from_bytes(digest, "big"))
