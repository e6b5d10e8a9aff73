"""Independent count of |F(5,4,9)|.

Enumerates weights on K4 first, then vectorizes over the four edges to
vertex 4. Prints 421495.
"""
import itertools

import numpy as np

Q = 9
PAIRS = list(itertools.combinations(range(4), 2))


def count_five(q=Q):
    spokes = np.array(list(itertools.product(range(q + 1), repeat=4)))
    total = 0
    for w in itertools.product(range(q + 1), repeat=6):
        if sum(w) > q:
            continue
        weight = dict(zip(PAIRS, w))
        ok = np.ones(len(spokes), bool)
        for tri in itertools.combinations(range(4), 3):
            inner = sum(weight[p] for p in itertools.combinations(tri, 2))
            ok &= spokes[:, list(tri)].sum(1) + inner <= q
        total += int(ok.sum())
    return total


if __name__ == "__main__":
    print(count_five())
