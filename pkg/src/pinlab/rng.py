"""SplitMix64 pseudo-random generator.

Every sampled quantity in the package is drawn from this recurrence so a
seed reproduces the same stream in any language:

    state  <- (state + 0x9E3779B97F4A7C15) mod 2**64
    z      <- state
    z      <- (z XOR (z >> 30)) * 0xBF58476D1CE4E5B9 mod 2**64
    z      <- (z XOR (z >> 27)) * 0x94D049BB133111EB mod 2**64
    output <- z XOR (z >> 31)

``below(k)`` returns ``next() % k`` (the modulo bias is irrelevant at the
ranges used here and keeps the mapping trivially portable).
"""

MASK64 = (1 << 64) - 1
GOLDEN_GAMMA = 0x9E3779B97F4A7C15
MIX1 = 0xBF58476D1CE4E5B9
MIX2 = 0x94D049BB133111EB


class SplitMix64:
    __slots__ = ("state",)

    def __init__(self, seed: int):
        self.state = seed & MASK64

    def next(self) -> int:
        self.state = (self.state + GOLDEN_GAMMA) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * MIX1) & MASK64
        z = ((z ^ (z >> 27)) * MIX2) & MASK64
        return z ^ (z >> 31)

    def below(self, k: int) -> int:
        if k <= 0:
            raise ValueError("bound must be positive")
        return self.next() % k

    def between(self, lo: int, hi: int) -> int:
        """Uniform integer in the closed range [lo, hi]."""
        return lo + self.below(hi - lo + 1)

    def chance(self, num: int, den: int) -> bool:
        return self.below(den) < num

    def choice(self, seq):
        return seq[self.below(len(seq))]

    def shuffle(self, items: list) -> list:
        # Fisher-Yates from the top
        for i in range(len(items) - 1, 0, -1):
            j = self.below(i + 1)
            items[i], items[j] = items[j], items[i]
        return items

    def sample(self, seq, k: int) -> list:
        return self.shuffle(list(seq))[:k]

    def fork(self, salt: int) -> "SplitMix64":
        """Independent child stream; used to partition work deterministically."""
        return SplitMix64(self.next() ^ (salt * GOLDEN_GAMMA & MASK64))
