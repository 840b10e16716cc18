# Ground-truth checks for uniquely restricted matchings: the brute-force
# "unique perfect matching on V(M)" oracle, alternating cycle enumeration and
# the fast pairwise checks that hold on interval and bipartite permutation
# graphs.

import itertools

import exception
import graph
import models

MAX_ORACLE_VERTICES = 40
MAX_BRUTEFORCE_EDGES = 24
MAX_CYCLE_VERTICES = 24


def _check_edges_in_graph(g, matching):
    for e in matching:
        if not (0 <= e.a < g.n and 0 <= e.b < g.n) or not g.has_edge(e.a, e.b):
            raise exception.InvalidInput(
                "edge (%d,%d) is not an edge of the graph" % (e.a, e.b))


def is_matching(g, matching):
    """Returns True if no two edges of matching share a vertex.

    :raises exception.InvalidInput if an edge is not an edge of g
    """
    _check_edges_in_graph(g, matching)
    seen = set()
    for e in matching:
        if e.a in seen or e.b in seen:
            return False
        seen.add(e.a)
        seen.add(e.b)
    return True


def check_matching(g, matching):
    if not is_matching(g, matching):
        raise exception.InvalidInput("edge set is not a matching")


def count_perfect_matchings(g, cap):
    """Counts perfect matchings of g, stopping once the count reaches cap.

    Branches on the lowest-id uncovered vertex. Sub-results are memoized by
    the bitmask of uncovered vertices and saturate at cap too.
    """
    if g.n % 2:
        return 0
    adj = [0] * g.n
    for u in range(g.n):
        for v in g.adjacency[u]:
            adj[u] |= 1 << v
    memo = {0: 1}

    def count(mask):
        if mask in memo:
            return memo[mask]
        low = mask & -mask
        u = low.bit_length() - 1
        rest = mask ^ low
        cand = adj[u] & rest
        total = 0
        while cand:
            bit = cand & -cand
            cand ^= bit
            total += count(rest ^ bit)
            if total >= cap:
                total = cap
                break
        memo[mask] = total
        return total

    return count((1 << g.n) - 1)


def is_ur_oracle(g, matching):
    """Returns True iff matching is the only perfect matching of the subgraph
    induced by its own vertices.
    """
    check_matching(g, matching)
    vertices = matching.vertices
    if len(vertices) > MAX_ORACLE_VERTICES:
        raise exception.BoundExceeded(
            "the uniquely restricted oracle", len(vertices),
            MAX_ORACLE_VERTICES, hint="Use a structural verification method.")
    sub, _ = graph.induced_subgraph(g, vertices)
    return count_perfect_matchings(sub, 2) == 1


def pair_has_alt_c4(g, e, f):
    """Returns True if e and f lie on a common alternating cycle of length 4,
    which is the case iff every endpoint of either edge has a neighbour among
    the endpoints of the other.
    """
    if set(e) & set(f):
        raise exception.InvalidInput(
            "edges %r and %r share a vertex" % (e, f))
    for x in e:
        if not (g.has_edge(x, f.a) or g.has_edge(x, f.b)):
            return False
    for y in f:
        if not (g.has_edge(y, e.a) or g.has_edge(y, e.b)):
            return False
    return True


def find_alt_c4_pair(g, matching):
    check_matching(g, matching)
    edges = matching.sorted_edges()
    for e, f in itertools.combinations(edges, 2):
        if pair_has_alt_c4(g, e, f):
            return e, f
    return None


def is_ur_c4free(g, matching):
    """Pairwise test, only valid on interval and bipartite permutation
    graphs, where a matching is uniquely restricted iff no two of its edges
    span an alternating 4-cycle.
    """
    return find_alt_c4_pair(g, matching) is None


def find_consecutive_violation(g, ordering, matching, pair_pred):
    """Sorts the matching by the ordering position of each edge's left
    endpoint and returns the first adjacent pair (e, f) for which
    pair_pred(e, f) is False, or None.
    """
    check_matching(g, matching)
    pos = ordering.pos
    edges = sorted(matching, key=lambda e: pos[ordering.left(e)])
    for e, f in zip(edges, edges[1:]):
        if not pair_pred(e, f):
            return e, f
    return None


def is_ur_consecutive(g, ordering, matching, pair_pred):
    return find_consecutive_violation(g, ordering, matching, pair_pred) is None


def all_matchings(g):
    """Yields every matching of g, the empty one first, as edge-id sorted
    Matching objects in lexicographic edge-id order.
    """
    edges = g.edges
    stack = [((), 0, frozenset())]
    while stack:
        chosen, start, used = stack.pop()
        yield models.Matching(edges[i] for i in chosen)
        # Push in reverse so that the lowest next edge id pops first
        for i in range(len(edges) - 1, start - 1, -1):
            e = edges[i]
            if e.a in used or e.b in used:
                continue
            stack.append((chosen + (i,), i + 1, used | {e.a, e.b}))


def max_urm_bruteforce(g, bound=MAX_BRUTEFORCE_EDGES):
    """Returns a maximum uniquely restricted matching by exhaustive search.

    Among maximum ones, returns the lexicographically smallest edge-id set.
    Any subset of a uniquely restricted matching is uniquely restricted, so
    branches are cut as soon as the partial matching fails the oracle.

    :raises exception.BoundExceeded if g has more than bound edges
    """
    if g.m > bound:
        raise exception.BoundExceeded(
            "brute-force search", g.m, bound,
            hint="The search enumerates every matching.")
    edges = g.edges
    best = [()]

    def search(chosen, start, used):
        if len(chosen) > len(best[0]):
            best[0] = chosen
        room = min(len(edges) - start, (g.n - len(used)) // 2)
        if len(chosen) + room <= len(best[0]):
            return
        for i in range(start, len(edges)):
            e = edges[i]
            if e.a in used or e.b in used:
                continue
            nxt = chosen + (i,)
            if not is_ur_oracle(g, models.Matching(edges[j] for j in nxt)):
                continue
            search(nxt, i + 1, used | {e.a, e.b})

    search((), 0, frozenset())
    return models.Matching(edges[i] for i in best[0])


def enumerate_alternating_cycles(g, matching, max_len):
    """Returns every simple alternating cycle with respect to matching of
    length at most max_len, each once, sorted by (length, vertices).

    A cycle is reported starting at its smallest vertex, followed by the
    smaller of that vertex's two cycle neighbours.
    """
    check_matching(g, matching)
    if g.n > MAX_CYCLE_VERTICES:
        raise exception.BoundExceeded(
            "alternating cycle enumeration", g.n, MAX_CYCLE_VERTICES)
    mate = [None] * g.n
    for e in matching:
        mate[e.a] = e.b
        mate[e.b] = e.a

    found = []
    for s in range(g.n):
        if mate[s] is None:
            # Every vertex of an alternating cycle is matched
            continue
        for v in g.adjacency[s]:
            if v < s or mate[v] is None:
                continue
            first = mate[s] == v
            # stack entries: (path, in_path, type of the last path edge)
            stack = [([s, v], {s, v}, first)]
            while stack:
                path, in_path, last = stack.pop()
                x = path[-1]
                if (len(path) >= 4 and len(path) % 2 == 0 and
                        path[1] < path[-1] and g.has_edge(x, s)):
                    closing = mate[x] == s
                    if closing != last and closing != first:
                        found.append(models.AlternatingCycle(path))
                if len(path) >= max_len:
                    continue
                if last:
                    nxt = [y for y in g.adjacency[x]
                           if y > s and y not in in_path and
                           mate[y] is not None and y != mate[x]]
                else:
                    y = mate[x]
                    nxt = [y] if y > s and y not in in_path else []
                for y in nxt:
                    stack.append((path + [y], in_path | {y}, not last))
    found.sort(key=lambda c: (len(c), c.vertices))
    return found
