"""Decision procedures for the lattice property zoo.

Every check is an exhaustive scan over pairs or triples.  That is slow in
the asymptotic sense and exactly what we want here: these functions are
the trusted oracles that the rest of the library (and the atlas) is
validated against, so no shortcuts.
"""

from dataclasses import dataclass

import numpy as np

from .irreducibles import length


@dataclass(frozen=True)
class Violation:
    kind: str  # "distributive" | "join_semidistributive" | "meet_semidistributive" | "left_modular"
    elements: tuple

    def as_json(self):
        return {"kind": self.kind, "elements": list(self.elements)}


def is_distributive(L):
    """Check both distributive laws over all triples.

    Returns (flag, violation): the first offending triple in row-major
    order when the laws fail.
    """
    n, join, meet = L.n, L.join, L.meet
    for a in range(n):
        lhs = meet[np.ix_(join[a], join[a])]  # (a v b) ^ (a v c)
        rhs = join[a][meet]                   # a v (b ^ c)
        bad = lhs != rhs
        if bad.any():
            b, c = map(int, np.argwhere(bad)[0])
            return False, Violation("distributive", (a, b, c))
        lhs = join[np.ix_(meet[a], meet[a])]  # (a ^ b) v (a ^ c)
        rhs = meet[a][join]                   # a ^ (b v c)
        bad = lhs != rhs
        if bad.any():
            b, c = map(int, np.argwhere(bad)[0])
            return False, Violation("distributive", (a, b, c))
    return True, None


def is_join_semidistributive(L):
    "a v b = a v c must force a v b = a v (b ^ c); first violating triple otherwise."
    n, join, meet = L.n, L.join, L.meet
    for a in range(n):
        row = join[a]
        same = row[:, None] == row[None, :]
        collapsed = row[meet] == row[:, None]
        bad = same & ~collapsed
        if bad.any():
            b, c = map(int, np.argwhere(bad)[0])
            return False, Violation("join_semidistributive", (a, b, c))
    return True, None


def is_meet_semidistributive(L):
    "The dual condition: a ^ b = a ^ c must force a ^ b = a ^ (b v c)."
    n, join, meet = L.n, L.join, L.meet
    for a in range(n):
        row = meet[a]
        same = row[:, None] == row[None, :]
        collapsed = row[join] == row[:, None]
        bad = same & ~collapsed
        if bad.any():
            b, c = map(int, np.argwhere(bad)[0])
            return False, Violation("meet_semidistributive", (a, b, c))
    return True, None


def is_semidistributive(L):
    jsd, v = is_join_semidistributive(L)
    if not jsd:
        return False, v
    return is_meet_semidistributive(L)


def left_modular_element_violation(L, a):
    "First pair b < c with (b v a) ^ c != b v (a ^ c), or None."
    strict = L.leq & ~np.eye(L.n, dtype=bool)
    lhs = L.meet[L.join[:, a]]        # rows: b, cols: c
    rhs = L.join[:, L.meet[a]]
    bad = strict & (lhs != rhs)
    if bad.any():
        b, c = map(int, np.argwhere(bad)[0])
        return Violation("left_modular", (a, b, c))
    return None


def left_modular_elements(L):
    "All elements a with (b v a) ^ c = b v (a ^ c) whenever b < c."
    return [
        a for a in range(L.n) if left_modular_element_violation(L, a) is None
    ]


def left_modular_chain(L):
    """Lexicographically least maximum-length maximal chain of left-modular elements.

    Returns the chain as a tuple, or None when no maximal chain of length
    len(L) stays inside the left-modular elements.  Depth-first walk over
    cover edges restricted to left-modular elements, pruned by the longest
    remaining path.
    """
    lm = set(left_modular_elements(L))
    if L.bot not in lm or L.top not in lm:
        return None
    k = length(L)
    # Longest left-modular cover path from each element up to the top.
    reach = {L.top: 0}
    for v in reversed(L.poset.topological_order):
        if v not in lm or v == L.top:
            continue
        best = -1
        for w in L.upper_covers[v]:
            if w in reach:
                best = max(best, reach[w] + 1)
        if best >= 0:
            reach[v] = best
    if reach.get(L.bot, -1) < k:
        return None

    path = [L.bot]

    def walk(v, depth):
        if v == L.top:
            return depth == k
        for w in L.upper_covers[v]:
            if reach.get(w, -1) < k - depth - 1:
                continue
            path.append(w)
            if walk(w, depth + 1):
                return True
            path.pop()
        return False

    if walk(L.bot, 0):
        return tuple(path)
    return None
