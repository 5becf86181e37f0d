"""Golden measurement counts from an independent mt19937_64 implementation.

Mirrors the sampler contract: u = (draw >> 11) * 2^-53, bucket = first index
whose normalized cumulative probability exceeds u.
"""
import bisect
import math


class MT19937_64:
    def __init__(self, seed):
        self.mt = [0] * 312
        self.index = 312
        self.mt[0] = seed & 0xFFFFFFFFFFFFFFFF
        for i in range(1, 312):
            prev = self.mt[i - 1]
            self.mt[i] = (6364136223846793005 * (prev ^ (prev >> 62)) + i) & 0xFFFFFFFFFFFFFFFF

    def _twist(self):
        upper, lower = 0xFFFFFFFF80000000, 0x7FFFFFFF
        for i in range(312):
            x = (self.mt[i] & upper) | (self.mt[(i + 1) % 312] & lower)
            xa = x >> 1
            if x & 1:
                xa ^= 0xB5026F5AA96619E9
            self.mt[i] = self.mt[(i + 156) % 312] ^ xa
        self.index = 0

    def __call__(self):
        if self.index >= 312:
            self._twist()
        y = self.mt[self.index]
        self.index += 1
        y ^= (y >> 29) & 0x5555555555555555
        y ^= (y << 17) & 0x71D67FFFEDA60000
        y ^= (y << 37) & 0xFFF7EEE000000000
        y ^= y >> 43
        return y & 0xFFFFFFFFFFFFFFFF


def counts(probs, shots, seed):
    exact = [math.sqrt(p) ** 2 for p in probs]
    cdf, acc = [], 0.0
    for p in exact:
        acc += p
        cdf.append(acc)
    cdf = [c / acc for c in cdf]
    rng = MT19937_64(seed)
    out = [0] * len(probs)
    for _ in range(shots):
        u = (rng() >> 11) * 2.0 ** -53
        i = min(bisect.bisect_right(cdf, u), len(cdf) - 1)
        out[i] += 1
    return out


if __name__ == "__main__":
    assert MT19937_64(5489)() == 14514284786278117030  # reference first draw
    states = {
        "uniform2": [0.5, 0.5],
        "skewed3": [0.7, 0.2, 0.1],
        "ramp4": [0.1, 0.2, 0.3, 0.4],
    }
    for name, probs in states.items():
        for shots in (10000, 40000):
            print(name, shots, counts(probs, shots, 20240601))
