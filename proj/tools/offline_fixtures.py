#!/usr/bin/env python3
"""Regenerate the bundled offline OEIS fixtures under data/oeis/.

The build environment has no route to oeis.org, so each fixture is computed
here directly from the sequence's definition, by code that shares nothing with
the C++ library. Files use the b-file layout ("index value" per line, '#'
comments). Once a machine is online, `permxray oeis fetch <id>` stores the
real b-file in the cache, which takes precedence over these files.
"""

import itertools
import os
import sys

OUT = os.path.join(os.path.dirname(os.path.abspath(__file__)), "..", "data", "oeis")


def nondecreasing_differences(n):
    # A019589: distinct sorted multisets {i - s(i)} over all s in S_n.
    seen = set()
    for s in itertools.permutations(range(1, n + 1)):
        seen.add(tuple(sorted(i + 1 - v for i, v in enumerate(s))))
    return len(seen)


def zero_sum_arrays(m):
    # A002047: 3 x m arrays, first row fixed ascending, every row a permutation
    # of -(m-1)/2..(m-1)/2, all column sums zero.
    h = (m - 1) // 2
    vals = list(range(-h, h + 1))
    target = set(vals)
    count = 0
    for row2 in itertools.permutations(vals):
        row3 = [-(a + b) for a, b in zip(vals, row2)]
        if set(row3) == target:
            count += 1
    return count


def landau_count(n, points):
    # Nondecreasing score vectors with sum_{i<=k} s_i >= points*C(k,2) and
    # equality at k = n (Landau/Moon condition, integer splits of `points`).
    total = points * n * (n - 1) // 2
    count = 0

    def rec(k, prev, acc):
        nonlocal count
        if k == n:
            if acc == total:
                count += 1
            return
        for s in range(prev, total - acc + 1):
            nxt = acc + s
            if nxt < points * (k + 1) * k // 2:
                continue
            # remaining entries are >= s
            if nxt + s * (n - k - 1) > total:
                break
            rec(k + 1, s, nxt)

    rec(0, 0, 0)
    return count


def brute_generalized_tournaments(n, points):
    pairs = list(itertools.combinations(range(n), 2))
    seqs = set()
    for split in itertools.product(range(points + 1), repeat=len(pairs)):
        score = [0] * n
        for (a, b), w in zip(pairs, split):
            score[a] += w
            score[b] += points - w
        seqs.add(tuple(sorted(score)))
    return len(seqs)


def involutions(n):
    a = [1, 1]
    for k in range(2, n + 1):
        a.append(a[k - 1] + (k - 1) * a[k - 2])
    return a[n]


def rotation_invariant(n):
    # Permutation matrices fixed by a quarter turn: p(p(n+1-i)) = i.
    count = 0
    for s in itertools.permutations(range(1, n + 1)):
        if all(s[s[n - 1 - i] - 1] == i + 1 for i in range(n)):
            count += 1
    return count


def jacobsthal_odd(k):
    # A007583: (2^(2k+1) + 1) / 3
    return (2 ** (2 * k + 1) + 1) // 3


def write(seq_id, offset, terms, header):
    os.makedirs(OUT, exist_ok=True)
    path = os.path.join(OUT, "b%s.txt" % seq_id[1:])
    with open(path, "w") as f:
        f.write("# %s offline fixture\n" % seq_id)
        for line in header:
            f.write("# %s\n" % line)
        for j, t in enumerate(terms):
            f.write("%d %d\n" % (offset + j, t))
    print(path, terms)


def main():
    max_brute = int(sys.argv[1]) if len(sys.argv) > 1 else 9

    write("A019589", 1, [nondecreasing_differences(n) for n in range(1, max_brute + 1)],
          ["Number of nondecreasing differences e - s over S_n.",
           "Computed by exhaustive enumeration in tools/offline_fixtures.py."])

    write("A002047", 0, [zero_sum_arrays(2 * k + 1) for k in range(0, 5)],
          ["Number of 3 x (2k+1) zero-sum arrays with the first row fixed.",
           "Computed by exhaustive enumeration in tools/offline_fixtures.py."])

    for n in range(1, 6):
        assert landau_count(n, 1) == brute_generalized_tournaments(n, 1), n
    write("A000571", 0, [1] + [landau_count(n, 1) for n in range(1, 16)],
          ["Number of score sequences of tournaments on n vertices.",
           "Landau criterion, cross-checked by brute force over all tournaments for n <= 5."])

    write("A000085", 0, [involutions(n) for n in range(0, 21)],
          ["Number of involutions in S_n: a(n) = a(n-1) + (n-1) a(n-2)."])

    rot = [1] + [rotation_invariant(n) for n in range(1, max_brute + 1)]
    for seq_id in ("A037224", "A097296"):
        write(seq_id, 0, rot,
              ["Permutation matrices invariant under a quarter-turn rotation.",
               "Computed by exhaustive enumeration in tools/offline_fixtures.py."])

    write("A007583", 0, [jacobsthal_odd(k) for k in range(0, 25)],
          ["a(k) = (2^(2k+1) + 1) / 3."])

    for n in range(1, 5):
        assert landau_count(n, 3) == brute_generalized_tournaments(n, 3), n
    write("A047729", 1, [landau_count(n, 3) for n in range(1, 13)],
          ["Score sequences of n-player round robins, 3 points split per game",
           "(integer splits 3-0, 2-1, 1-2, 0-3). Landau-Moon criterion,",
           "cross-checked by brute force for n <= 4. Definition not checked",
           "against oeis.org; replace via `permxray oeis fetch A047729` online."])


if __name__ == "__main__":
    main()
