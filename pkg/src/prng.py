"""
Zählerbasierter Zufallsgenerator SplitMix64.

Der i-te Ausgabewert (i = 1, 2, ...) ist mix(seed + i * GOLDEN_GAMMA); jeder Wert
hängt also nur von seed und Zähler ab und kann blockweise mit numpy
berechnet werden. Referenzfolge für seed 1234567:
6457827717110365317, 3203168211198807973, 9817491932198370423,
4593380528125082431, 16408922859458223821.
"""

import numpy as np

MASK64 = (1 << 64) - 1
GOLDEN_GAMMA = np.uint64(0x9E3779B97F4A7C15)
_MIX_1 = np.uint64(0xBF58476D1CE4E5B9)
_MIX_2 = np.uint64(0x94D049BB133111EB)


def splitmix64(seed: int, start: int, count: int) -> np.ndarray:
    """Ausgabewerte start+1 .. start+count als uint64-Feld."""
    counters = np.arange(start + 1, start + count + 1, dtype=np.uint64)
    with np.errstate(over="ignore"):
        z = np.uint64(seed & MASK64) + counters * GOLDEN_GAMMA
        z = (z ^ (z >> np.uint64(30))) * _MIX_1
        z = (z ^ (z >> np.uint64(27))) * _MIX_2
        return z ^ (z >> np.uint64(31))


def derive_seed(seed: int, index: int) -> int:
    """Eigener Startwert für die index-te Stichprobe eines Laufs."""
    return int(splitmix64(seed, index, 1)[0])


class SplitMix64:
    """Fortlaufender Strom über splitmix64 mit einfachen Ziehhilfen."""

    def __init__(self, seed: int):
        self.seed = seed & MASK64
        self._counter = 0

    def raw(self, count: int) -> np.ndarray:
        block = splitmix64(self.seed, self._counter, count)
        self._counter += count
        return block

    def integers(self, bound: int, count: int) -> np.ndarray:
        """count Werte in {0, ..., bound-1} (Reduktion modulo bound)."""
        return (self.raw(count) % np.uint64(bound)).astype(np.int64)

    def below(self, bound: int) -> int:
        return int(self.integers(bound, 1)[0])

    def shuffled(self, items) -> list:
        """Fisher-Yates-Mischung einer Kopie von items."""
        result = list(items)
        for i in range(len(result) - 1, 0, -1):
            j = self.below(i + 1)
            result[i], result[j] = result[j], result[i]
        return result
