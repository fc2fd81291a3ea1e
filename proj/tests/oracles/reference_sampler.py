#!/usr/bin/env python3
"""Reference implementation of the annotation sampler.

MT19937-64 is written out here rather than borrowed, and checked against the
value the C++ standard requires of std::mt19937_64 (10000th output for the
default seed). The printed selections are frozen into test_corpus_match.cpp.
"""

MASK64 = (1 << 64) - 1


class MT19937_64:
    N, M = 312, 156
    MATRIX_A = 0xB5026F5AA96619E9
    UPPER, LOWER = 0xFFFFFFFF80000000, 0x7FFFFFFF

    def __init__(self, seed):
        self.mt = [0] * self.N
        self.mt[0] = seed & MASK64
        for i in range(1, self.N):
            prev = self.mt[i - 1]
            self.mt[i] = (6364136223846793005 * (prev ^ (prev >> 62)) + i) & MASK64
        self.index = self.N

    def _twist(self):
        for i in range(self.N):
            x = (self.mt[i] & self.UPPER) | (self.mt[(i + 1) % self.N] & self.LOWER)
            xa = x >> 1
            if x & 1:
                xa ^= self.MATRIX_A
            self.mt[i] = self.mt[(i + self.M) % self.N] ^ xa
        self.index = 0

    def next(self):
        if self.index >= self.N:
            self._twist()
        y = self.mt[self.index]
        self.index += 1
        y ^= (y >> 29) & 0x5555555555555555
        y ^= (y << 17) & 0x71D67FFFEDA60000
        y ^= (y << 37) & 0xFFF7EEE000000000
        y ^= y >> 43
        return y & MASK64


def below(rng, bound):
    threshold = (1 << 64) % bound
    while True:
        w = rng.next()
        if w >= threshold:
            return w % bound


def sample(instances, n, seed):
    items = sorted(instances)
    rng = MT19937_64(seed)
    for i in range(n):
        j = i + below(rng, len(items) - i)
        items[i], items[j] = items[j], items[i]
    return sorted(items[:n])


CANDIDATES = ["راكونتير", "اومليت", "بورجوازي", "كافي", "كاميون"]


def fixture_instances():
    out = []
    for c, cand in enumerate(CANDIDATES):
        for k in range(20):
            out.append((1 + (k * 7 + c * 3) % 50, (k + c) % 6, cand))
    return out


def self_check():
    rng = MT19937_64(5489)
    for _ in range(9999):
        rng.next()
    assert rng.next() == 9981545732273789042


if __name__ == "__main__":
    self_check()
    for seed, n in ((42, 20), (7, 1), (2026, 100)):
        picked = sample(fixture_instances(), n, seed)
        print(f"seed={seed} n={n}")
        print("  " + ", ".join(f"{{{line}, {tok}, {CANDIDATES.index(c)}}}"
                               for line, tok, c in picked))
    rng = MT19937_64(123)
    print("below(1000) x5 seed=123:", [below(rng, 1000) for _ in range(5)])
    rng = MT19937_64(0)
    print("below(3) x5 seed=0:", [below(rng, 3) for _ in range(5)])
