"""Brute-force references, independent of the package's fast paths.

These only use the definitions: an indecomposable is a (d+1)-subset of
{1, ..., n+2d+1} with no two cyclically adjacent vertices; a cluster tilting
object is a maximal family of pairwise non-intertwining indecomposables.
"""

from __future__ import annotations

import itertools


def polygon_size(n: int, d: int) -> int:
    return n + 2 * d + 1


def brute_indecs(n: int, d: int) -> list:
    m = polygon_size(n, d)
    out = []
    for subset in itertools.combinations(range(1, m + 1), d + 1):
        vs = set(subset)
        if any((v % m) + 1 in vs for v in vs):
            continue
        out.append(subset)
    return out


def brute_intertwines(x, y) -> bool:
    """Strict alternation, checked by walking the labelled circle."""
    if set(x) & set(y):
        return False
    marks = sorted([(v, "x") for v in x] + [(v, "y") for v in y])
    return all(marks[i][1] != marks[i + 1][1] for i in range(len(marks) - 1)) and \
        marks[0][1] != marks[-1][1]


def brute_tiltings(n: int, d: int) -> list:
    """All maximal compatible families, found by filtering every subset family."""
    objects = brute_indecs(n, d)
    families = []
    for r in range(len(objects) + 1):
        for fam in itertools.combinations(objects, r):
            if all(not brute_intertwines(a, b) for a, b in itertools.combinations(fam, 2)):
                families.append(frozenset(fam))
    compatible = set(families)
    maximal = []
    for fam in families:
        if not any(fam | {x} in compatible for x in objects if x not in fam):
            maximal.append(tuple(sorted(fam)))
    return sorted(maximal)


def brute_hom(x, y, m: int) -> int:
    """Hom(x, y) != 0 iff x and the inverse shift of y intertwine."""
    back = tuple(sorted((v % m) + 1 for v in y))
    return int(brute_intertwines(x, back))
