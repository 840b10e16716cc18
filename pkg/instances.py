# Fixed example instances, seeded random generators for each graph class,
# the unique long alternating cycle family and the consecutive-edge baseline
#
# NOTE: the fixtures come from drawings that label vertices 1..n. Label k is
# stored as vertex id k - 1.

import collections
import random

import exception
import graph
import models
import proper

Fixture = collections.namedtuple(
    'Fixture', ['graph', 'ordering', 'expected_size', 'matching'])

# Proper interval example, drawn along its proper vertex ordering
FIG1_EDGES = ((1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (1, 3), (1, 4),
              (2, 4), (3, 5), (4, 6), (4, 7), (5, 7))
FIG1_MATCHING = ((1, 2), (3, 5), (6, 7))
FIG1_LEFTS = (0, 10, 90, 100, 150, 195, 200)
FIG1_LENGTH = 100

# Bipartite permutation example under a transitive vertex ordering, and a
# permutation whose graph is isomorphic to it
FIG2_EDGES = ((1, 2), (1, 3), (1, 5), (1, 6), (4, 5), (4, 6), (4, 7), (4, 8))
FIG2_PERMUTATION = (2, 3, 5, 6, 1, 7, 8, 4)

BASELINE_LABEL = 'baseline-per-caption'
FIG1_CAPTION = (
    "proper interval graph on 7 vertices where a uniquely restricted "
    "matching of consecutive-vertex edges has at most 2 edges but the "
    "maximum uniquely restricted matching has 3")


def _from_labels(pairs):
    return [(u - 1, v - 1) for u, v in pairs]


def fig1():
    g = models.UndirectedGraph.from_edges(7, _from_labels(FIG1_EDGES))
    return Fixture(g, models.VertexOrdering.identity(7), 3,
                   models.Matching.of(*_from_labels(FIG1_MATCHING)))


def fig1_intervals():
    """Unit intervals whose intersection graph is the fig1 graph, with the
    lefts in drawing order.
    """
    return models.IntervalRep(
        FIG1_LEFTS, [x + FIG1_LENGTH for x in FIG1_LEFTS])


def fig2():
    g = models.UndirectedGraph.from_edges(8, _from_labels(FIG2_EDGES))
    return Fixture(g, models.VertexOrdering.identity(8), 2, None)


def fig2_permutation():
    return models.PermutationSpec(FIG2_PERMUTATION)


def gen_unit_intervals(n, seed, span, length=100, connected=False):
    """Returns n normalized intervals of equal length with pseudorandom lefts
    in [0, span].

    With connected set, each left is at most length past the previous one
    so the intersection graph is connected; span is then ignored.
    """
    rng = random.Random(seed)
    if connected:
        lefts = []
        x = 0
        for _ in range(n):
            lefts.append(x)
            x += rng.randint(0, length)
    else:
        lefts = [rng.randint(0, span) for _ in range(n)]
    rep = models.IntervalRep(lefts, [x + length for x in lefts])
    return graph.normalize_intervals(rep)


def gen_intervals(n, seed, span, max_length=None):
    """Returns n normalized intervals with random endpoints in [0, span];
    containment is allowed.

    :param max_length: when set, each right endpoint is at most this far
                       past its left one instead of independent of it
    """
    rng = random.Random(seed)
    pairs = []
    for _ in range(n):
        if max_length is None:
            x, y = rng.randint(0, span), rng.randint(0, span)
        else:
            x = rng.randint(0, span)
            y = x + rng.randint(0, max_length)
        pairs.append((min(x, y), max(x, y)))
    return graph.normalize_intervals(models.IntervalRep.from_pairs(pairs))


def gen_bipperm(p, q, seed, reach=2, validate=True):
    """Returns (graph, ordering) of a bipartite permutation graph with p left
    and q right vertices under a transitive vertex ordering.

    The ordering interleaves the sides, starting with a left vertex and
    ending with a right one. Every left vertex is joined to a contiguous run
    of right vertices starting at the first right vertex after it; run ends
    never decrease along the ordering and cover every right vertex placed
    before the next left vertex. Vertex ids are shuffled against the
    ordering.

    :param reach: how many extra right vertices a run may take beyond the
                  ones it must cover
    :param validate: run the transitive ordering validator on the result
                     (only up to graph.TRANSITIVE_VALIDATION_LIMIT vertices)
    """
    if p < 1 or q < 1:
        raise exception.InvalidInput("p and q must be at least 1")
    rng = random.Random(seed)
    middle = ['L'] * (p - 1) + ['R'] * (q - 1)
    rng.shuffle(middle)
    sides = ['L'] + middle + ['R']
    n = p + q
    ids = list(range(n))
    rng.shuffle(ids)

    rights = [ids[i] for i, s in enumerate(sides) if s == 'R']
    # For every left vertex in ordering order: the index of the first right
    # vertex after it and of the last right vertex before the next left one
    runs = []
    seen_rights = 0
    for i, s in enumerate(sides):
        if s == 'R':
            seen_rights += 1
            if runs:
                runs[-1][1] = seen_rights - 1
        else:
            runs.append([seen_rights, seen_rights - 1, ids[i]])

    edges = []
    end = 0
    for k, (start, covered, u) in enumerate(runs):
        lo = max(start, covered, end)
        if k == len(runs) - 1:
            end = q - 1
        else:
            end = min(q - 1, lo + rng.randint(0, reach))
        for j in range(start, end + 1):
            edges.append((u, rights[j]))

    g = models.UndirectedGraph.from_edges(n, edges)
    ordering = models.VertexOrdering(ids)
    if validate and n <= graph.TRANSITIVE_VALIDATION_LIMIT:
        ok, witness, condition = graph.validate_transitive_ordering(
            g, ordering)
        if not ok:
            raise exception.InternalAssertion(
                "generated ordering fails condition %s at %r" % (
                    condition, witness))
    return g, ordering


def permutation_graph(spec):
    """Returns (G_pi, identity ordering): vertex i - 1 for every position i,
    with an edge between positions i < j iff pi(i) > pi(j).
    """
    pi = spec.pi
    n = spec.n
    edges = [(i, j) for i in range(n) for j in range(i + 1, n)
             if pi[i] > pi[j]]
    return (models.UndirectedGraph.from_edges(n, edges),
            models.VertexOrdering.identity(n))


def gen_permutation(n, seed):
    rng = random.Random(seed)
    pi = list(range(1, n + 1))
    rng.shuffle(pi)
    return models.PermutationSpec(pi)


def gen_nest(n, seed, span, max_length=None):
    """Returns a nest representation of n vertices whose four endpoints are
    sorted random integers in [0, span], so collisions are likely on small
    spans.

    :param max_length: when set, every S interval spans at most this much
    """
    rng = random.Random(seed)
    quads = []
    for _ in range(n):
        if max_length is None:
            quads.append(sorted(rng.randint(0, span) for _ in range(4)))
        else:
            x = rng.randint(0, span)
            quads.append(sorted(x + rng.randint(0, max_length)
                                for _ in range(4)))
    return models.NestRep.from_quads(quads)


def _family_cycle_edges(k):
    if not isinstance(k, int) or k < 4 or k % 2:
        raise exception.InvalidInput(
            "family size must be an even integer >= 4, got %r" % (k,))
    # Labels 1, 2, 4, ..., k, k - 1, k - 3, ..., 3
    cycle = [1] + list(range(2, k + 1, 2)) + list(range(k - 1, 2, -2))
    return [(cycle[i], cycle[(i + 1) % k]) for i in range(k)]


def gen_family(k):
    """Returns the FamilyInstance whose only alternating cycle with respect
    to its matching is a Hamiltonian cycle of length k.

    The graph is the cycle 1, 2, 4, ..., k, k - 1, ..., 3 plus the rungs
    (2i, 2i + 1) for 1 <= i < k/2; k = 4 is the plain 4-cycle. The matching
    takes every second cycle edge starting with 12.
    """
    cycle_edges = _family_cycle_edges(k)
    edges = list(cycle_edges)
    if k > 4:
        edges.extend((2 * i, 2 * i + 1) for i in range(1, k // 2))
    g = models.UndirectedGraph.from_edges(k, _from_labels(edges))
    matching = models.Matching.of(*_from_labels(cycle_edges[0::2]))
    return models.FamilyInstance(k, g, matching)


def family_other_phase(k):
    """The complementary matching of gen_family(k): the cycle edges it
    leaves out.
    """
    cycle_edges = _family_cycle_edges(k)
    return models.Matching.of(*_from_labels(cycle_edges[1::2]))


def consecutive_heuristic_baseline(g, ordering):
    """Largest uniquely restricted matching that only uses edges between
    vertices adjacent in the ordering.

    The ordering must be proper, so checking neighbouring edges of the
    matching in left endpoint order is enough. Ties go to the earliest
    edges.
    """
    order = ordering.order
    ctx = proper.ProperContext(g, ordering)
    slots = [models.Edge(order[i], order[i + 1])
             if g.has_edge(order[i], order[i + 1]) else None
             for i in range(len(order) - 1)]
    # best[i], prev[i]: longest chain ending at slot i and its previous slot
    best = [0] * len(slots)
    prev = [None] * len(slots)
    for i, e in enumerate(slots):
        if e is None:
            continue
        best[i] = 1
        for j in range(i - 1):
            if slots[j] is None or best[j] + 1 <= best[i]:
                continue
            if ctx.pair_is_ur(slots[j], e):
                best[i] = best[j] + 1
                prev[i] = j
    if not any(best):
        return models.Matching()
    i = best.index(max(best))
    edges = []
    while i is not None:
        edges.append(slots[i])
        i = prev[i]
    edges.reverse()
    return models.Matching(edges)
