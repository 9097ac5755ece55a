"""Edge labelings, the left-modular labeling, and EL-shellability.

An edge labeling maps every covering pair to an integer; only the relative
order of labels carries meaning.  A labeling is EL when every interval has
exactly one strictly increasing maximal chain, and that chain's label
vector is lexicographically smallest in the interval.

The exact shellability decision searches the weak orders induced on the
cover set: labelings inducing the same weak order are interchangeable, and
every weak order on m edges is realized by labels in 1..m, so enumerating
weak orders (with per-interval pruning) is sound and complete.
"""

from dataclasses import dataclass

from .errors import (
    ChainNotLeftModular,
    ChainNotMaximumLength,
    InvariantViolation,
    PartialLabelingError,
)
from .irreducibles import (
    check_maximal_chain,
    gamma,
    join_irreducibles,
    length,
)
from .properties import left_modular_elements

DEFAULT_EL_BUDGET = 10_000_000


def lm_labeling(L, chain):
    """Edge labeling induced by a maximum-length left-modular chain.

    Cover (a, b) gets the smallest chain index of a join irreducible j
    with a v j = b.  The candidate set is never empty (each cover has a
    perspectivity witness below its upper element); this is asserted.
    """
    chain = check_maximal_chain(L, chain)
    if len(chain) - 1 != length(L):
        raise ChainNotMaximumLength(
            f"chain has length {len(chain) - 1}, lattice has {length(L)}"
        )
    lm = set(left_modular_elements(L))
    for c in chain:
        if c not in lm:
            raise ChainNotLeftModular(c)
    gam = {ji.j: gamma(L, chain, ji.j) for ji in join_irreducibles(L)}
    labels = {}
    for a, b in L.covers:
        candidates = [s for j, s in gam.items() if L.join[a, j] == b]
        if not candidates:
            raise InvariantViolation(
                f"no join irreducible generates the cover {(a, b)}"
            )
        labels[(a, b)] = min(candidates)
    return labels


def label_vector(labeling, chain):
    "Labels along consecutive pairs of a chain."
    return tuple(labeling[(a, b)] for a, b in zip(chain, chain[1:]))


def is_increasing(vector):
    return all(x < y for x, y in zip(vector, vector[1:]))


def format_labeling(labeling):
    "One 'a b label' line per cover, in cover order."
    return "\n".join(f"{a} {b} {v}" for (a, b), v in sorted(labeling.items()))


@dataclass(frozen=True)
class ELVerdict:
    status: str  # "is_el" | "not_el"
    interval: tuple | None = None
    reason: str | None = None  # "no_increasing_chain" | "multiple_increasing_chains" | "increasing_not_lex_min"
    chains: tuple | None = None

    def __bool__(self):
        return self.status == "is_el"


def _interval_chains(L, a, b):
    out = []
    path = [a]

    def walk(v):
        if v == b:
            out.append(tuple(path))
            return
        for w in L.upper_covers[v]:
            if L.leq[w, b]:
                path.append(w)
                walk(w)
                path.pop()

    walk(a)
    return out


def _intervals_by_size(L):
    "(a, b) pairs with a < b, smallest intervals first."
    pairs = []
    for a in range(L.n):
        for b in range(L.n):
            if a != b and L.leq[a, b]:
                size = int((L.leq[a, :] & L.leq[:, b]).sum())
                pairs.append((size, a, b))
    return [(a, b) for _, a, b in sorted(pairs)]


def is_el_labeling(L, labeling, strict_lex=False):
    """Verify the EL condition on every interval.

    Weak reading by default: the unique increasing chain's vector must be
    <= every other chain's vector.  strict_lex additionally forbids any
    other chain from tying it.
    """
    missing = set(L.covers) - set(labeling)
    if missing:
        raise PartialLabelingError(missing)
    for a, b in _intervals_by_size(L):
        chains = _interval_chains(L, a, b)
        vectors = [label_vector(labeling, ch) for ch in chains]
        rising = [i for i, v in enumerate(vectors) if is_increasing(v)]
        if not rising:
            return ELVerdict(
                "not_el", (a, b), "no_increasing_chain", tuple(chains)
            )
        if len(rising) > 1:
            return ELVerdict(
                "not_el",
                (a, b),
                "multiple_increasing_chains",
                tuple(chains[i] for i in rising),
            )
        best = vectors[rising[0]]
        for i, v in enumerate(vectors):
            if i == rising[0]:
                continue
            if v < best or (strict_lex and v == best):
                return ELVerdict(
                    "not_el",
                    (a, b),
                    "increasing_not_lex_min",
                    (chains[rising[0]], chains[i]),
                )
    return ELVerdict("is_el")


@dataclass(frozen=True)
class ELSearchResult:
    status: str  # "shellable" | "not_shellable" | "unknown"
    labeling: dict | None
    nodes: int
    budget: int

    def __bool__(self):
        return self.status == "shellable"


class _BudgetExhausted(Exception):
    pass


def _search_plan(L, direction):
    """Edge order plus the interval constraints hooked onto each edge.

    direction "up" labels covers from the bottom of the lattice upward,
    "down" from the top downward; neither dominates, so the search runs
    both.  Every interval is fully re-verified the moment its last edge
    receives a label (completes[t]); it is also partially checked whenever
    any of its edges does (touches[t]), which catches interval failures
    that are already unavoidable.
    """
    interval_edges = []
    for a, b in _intervals_by_size(L):
        chains = _interval_chains(L, a, b)
        if len(chains) == 1 and len(chains[0]) == 2:
            continue  # single cover: nothing to constrain
        interval_edges.append(chains)
    levels = L.levels
    if direction == "up":
        key = lambda e: (levels[e[1]], levels[e[0]], e)
    else:
        key = lambda e: (-levels[e[1]], -levels[e[0]], e)
    edge_order = sorted(L.covers, key=key)
    index = {e: i for i, e in enumerate(edge_order)}
    touches = [[] for _ in edge_order]
    completes = [[] for _ in edge_order]
    for chains in interval_edges:
        chain_ix = [
            tuple(index[(u, v)] for u, v in zip(ch, ch[1:])) for ch in chains
        ]
        members = sorted({e for ch in chain_ix for e in ch})
        for e in members[:-1]:
            touches[e].append(chain_ix)
        completes[members[-1]].append(chain_ix)
    return edge_order, touches, completes


def _check_chain_set(values, chain_ix, strict_lex):
    "Exact interval verdict once all of its edges carry labels."
    vectors = [tuple(values[e] for e in ch) for ch in chain_ix]
    rising = [i for i, v in enumerate(vectors) if is_increasing(v)]
    if len(rising) != 1:
        return False
    best = vectors[rising[0]]
    for i, v in enumerate(vectors):
        if i == rising[0]:
            continue
        if v < best or (strict_lex and v == best):
            return False
    return True


def _partial_chain_set_ok(values, chain_ix):
    """Can this interval still obtain its unique increasing chain?

    A chain with two adjacent labeled edges not ascending is dead for
    good: later assignments never reorder existing labels.  All chains
    dead, or two fully-labeled increasing chains, doom every completion.
    """
    complete_rising = 0
    any_alive = False
    for ch in chain_ix:
        dead = False
        complete = True
        for k in range(len(ch)):
            if values[ch[k]] == 0:
                complete = False
            if k and values[ch[k - 1]] and values[ch[k]]:
                if values[ch[k - 1]] >= values[ch[k]]:
                    dead = True
                    break
        if dead:
            continue
        any_alive = True
        if complete:
            complete_rising += 1
            if complete_rising > 1:
                return False
    return any_alive


def _run_plan(plan, budget, strict_lex):
    "One complete backtracking pass; returns (status, nodes_used, labeling)."
    edges, touches, completes = plan
    m = len(edges)
    values = [0] * m
    nodes = 0

    def assign(t, v):
        nonlocal nodes
        if t == m:
            return {edges[i]: values[i] for i in range(m)}
        for choice in range(2 * v + 1):
            nodes += 1
            if nodes > budget:
                raise _BudgetExhausted
            if choice % 2 == 0:
                gap = choice // 2
                bumped = [i for i in range(t) if values[i] > gap]
                for i in bumped:
                    values[i] += 1
                values[t] = gap + 1
                next_v = v + 1
            else:
                bumped = ()
                values[t] = (choice + 1) // 2
                next_v = v
            if all(
                _check_chain_set(values, cs, strict_lex)
                for cs in completes[t]
            ) and all(
                _partial_chain_set_ok(values, cs) for cs in touches[t]
            ):
                found = assign(t + 1, next_v)
                if found is not None:
                    for i in bumped:
                        values[i] -= 1
                    values[t] = 0
                    return found
            for i in bumped:
                values[i] -= 1
            values[t] = 0
        return None

    try:
        labeling = assign(0, 0)
    except _BudgetExhausted:
        return "unknown", nodes, None
    if labeling is None:
        return "not_shellable", nodes, None
    return "shellable", nodes, labeling


_INITIAL_SLICE = 4096
_SLICE_GROWTH = 16


def el_search(L, budget=DEFAULT_EL_BUDGET, strict_lex=False):
    """Exact EL-shellability decision with a node budget.

    Backtracks over the weak orders on the cover set: each new edge either
    joins an existing label class or starts a new class in any gap, which
    realizes every weak order exactly once.  Intervals are re-verified the
    moment they are fully labeled; relative order of already-labeled edges
    never changes afterwards, so those verdicts are stable.

    The lattice is canonicalized first, so the outcome depends only on its
    isomorphism class, and two edge orders (bottom-up and top-down) run
    under iteratively deepened node slices, since either can be far faster
    on a given instance.  Nodes are counted across all passes; exceeding
    the budget returns status "unknown".
    """
    from .poset import canonical_relabeling

    perm = canonical_relabeling(L.poset)
    if any(perm[i] != i for i in range(L.n)):
        result = el_search(L.relabel(perm), budget, strict_lex)
        if result.labeling is None:
            return result
        labeling = {
            (a, b): result.labeling[(perm[a], perm[b])] for a, b in L.covers
        }
        return ELSearchResult(result.status, labeling, result.nodes, budget)

    if not L.covers:
        return ELSearchResult("shellable", {}, 0, budget)
    plans = [_search_plan(L, "down"), _search_plan(L, "up")]
    spent = 0
    slice_budget = _INITIAL_SLICE
    while spent < budget:
        for plan in plans:
            if spent >= budget:
                break
            status, used, labeling = _run_plan(
                plan, min(slice_budget, budget - spent), strict_lex
            )
            spent += used
            if status == "unknown":
                continue
            if status == "shellable":
                verdict = is_el_labeling(L, labeling, strict_lex)
                if not verdict:
                    raise InvariantViolation(
                        "search produced a labeling rejected by the "
                        f"verifier: {verdict}"
                    )
            return ELSearchResult(status, labeling, spent, budget)
        slice_budget *= _SLICE_GROWTH
    return ELSearchResult("unknown", None, spent, budget)
