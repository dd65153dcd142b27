"""Brute-force reference implementations for the test suite.

Everything here works straight from the definitions (enumerate couples,
trial everything) and shares no code with the library paths it checks.
"""

import math
import random
from collections import Counter


def brute_spectrum(terms):
    counts = Counter()
    for x in terms:
        for y in terms:
            counts[x + y] += 1
    return dict(counts)


def brute_rep_count(terms, n):
    return sum(1 for x in terms for y in terms if x + y == n)


def brute_s_max(terms):
    counts = brute_spectrum(terms)
    best = max(counts.values())
    return best, sorted(s for s, c in counts.items() if c == best)


def brute_two_squares_count(n):
    count = 0
    x = 1
    while x * x < n:
        y = n - x * x
        r = math.isqrt(y)
        if r * r == y:
            count += 1
        x += 1
    return count


def random_prefix(rng: random.Random, max_k: int, max_term: int) -> list[int]:
    k = rng.randint(1, min(max_k, max_term + 1))
    seen = set()
    while len(seen) < k:
        seen.add(rng.randint(0, max_term))
    return sorted(seen)
