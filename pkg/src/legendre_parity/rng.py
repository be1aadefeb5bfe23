"""Deterministic counter-based random streams (SplitMix64 flavour).

Every experiment derives one SubStream per trial from (seed, trial index),
so a trial's draws are a closed-form function of (seed, index, draw number):

    draw_j(seed, i) = mix64(base(seed, i) + j * GAMMA)   (mod 2**64)

That makes results independent of execution order and of how trials are
partitioned across workers, and lets vectorised code reproduce the scalar
draw sequence exactly.
"""

MASK64 = (1 << 64) - 1
GAMMA = 0x9E3779B97F4A7C15
STREAM_SALT = 0xD1B54A32D192ED03

# Stream index reserved for drawing witness sets / auxiliary data, far above
# any plausible trial count so trial substreams never collide with it.
AUX_STREAM = 1 << 62


def mix64(z: int) -> int:
    """SplitMix64 finaliser: avalanche a 64-bit value."""
    z &= MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
    return z ^ (z >> 31)


def stream_base(seed: int, index: int) -> int:
    """State shared by scalar and vectorised draw paths for one substream."""
    return mix64((seed + (index + 1) * STREAM_SALT) & MASK64)


class SubStream:
    """Independent random stream number `index` under a 64-bit `seed`."""

    __slots__ = ("_base", "_count")

    def __init__(self, seed: int, index: int = 0):
        self._base = stream_base(seed, index)
        self._count = 0

    def next64(self) -> int:
        self._count += 1
        return mix64((self._base + self._count * GAMMA) & MASK64)

    def bits(self, k: int) -> int:
        """Uniform k-bit integer; consumes ceil(k/64) words."""
        if k <= 0:
            raise ValueError("bit count must be positive")
        value = 0
        for word in range((k + 63) // 64):
            value |= self.next64() << (64 * word)
        return value & ((1 << k) - 1)

    def below(self, bound: int) -> int:
        """Uniform integer in [0, bound) by rejection on bit blocks.

        Blocks of bound.bit_length() bits are drawn and rejected while
        >= bound; acceptance probability exceeds 1/2 per block, and the
        result is exactly uniform (no modulo bias).
        """
        if bound <= 0:
            raise ValueError("bound must be positive")
        if bound == 1:
            return 0
        k = bound.bit_length()
        while True:
            value = self.bits(k)
            if value < bound:
                return value

    def distinct_below(self, bound: int, count: int) -> list[int]:
        """`count` distinct uniform values in [0, bound), in draw order."""
        if count > bound:
            raise ValueError(f"cannot draw {count} distinct values below {bound}")
        seen: set[int] = set()
        out: list[int] = []
        while len(out) < count:
            v = self.below(bound)
            if v not in seen:
                seen.add(v)
                out.append(v)
        return out
