import random

from flatbasket import BraidWord

# Golden 8-letter input for the encoder pipeline, with its frozen outputs.
GOLDEN_W_TEXT = "-2 -1 -2 -3 1 -2 3 -2"
GOLDEN_STRANDS = 4
GOLDEN_LABELS = (3, 1, 4, 7, 2, 5, 8, 6)
GOLDEN_C1 = (1, 2, 3, 1, 4, 2, 5, 6, 3, 4, 7, 5, 8, 6, 7, 8)
GOLDEN_CODE = (
    1, 2, 3, 1, 4, 10, 9, 2, 10, 9, 5, 6,
    3, 4, 7, 5, 8, 6, 7, 12, 11, 8, 12, 11,
)


def random_braids(count: int, seed: int, max_strands: int = 5, max_length: int = 12):
    """Seeded sample of braid words with n <= max_strands, length <= max_length."""
    rng = random.Random(seed)
    braids = []
    for _ in range(count):
        n = rng.randint(1, max_strands)
        length = rng.randint(0, max_length) if n > 1 else 0
        letters = tuple(
            rng.choice((1, -1)) * rng.randint(1, n - 1) for _ in range(length)
        )
        braids.append(BraidWord(n, letters))
    return braids
