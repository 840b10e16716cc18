# Graph, interval representation and vertex ordering operations shared by
# all of the solvers

import collections

import exception
import models

# The transitive ordering validator is a desk-scale tool. Above this many
# vertices callers skip it and rely on the necessary-condition checks in
# bipperm.
TRANSITIVE_VALIDATION_LIMIT = 2000

# Endpoint kinds, in the order they rank at an equal coordinate. Lefts
# before rights keeps touching closed intervals intersecting.
_LEFT = 0
_RIGHT = 1


def _endpoint_events(rep):
    events = []
    for u in range(rep.n):
        events.append((rep.left[u], _LEFT, u))
        events.append((rep.right[u], _RIGHT, u))
    events.sort()
    return events


def normalize_intervals(rep):
    """Returns an IntervalRep with the same intersection graph whose 2n
    endpoints are the distinct integers 1..2n.

    At an equal coordinate all left endpoints rank before all right
    endpoints, and within one endpoint kind the lower vertex id ranks first.
    """
    left = [0] * rep.n
    right = [0] * rep.n
    for rank, (_coord, kind, u) in enumerate(_endpoint_events(rep), 1):
        if kind == _LEFT:
            left[u] = rank
        else:
            right[u] = rank
    return models.IntervalRep(left, right)


def intersection_graph(rep):
    """Returns the intersection graph of the closed intervals in rep, built by
    sweeping the endpoints in normalized rank order.
    """
    nbrs = [[] for _ in range(rep.n)]
    active = set()
    for _coord, kind, u in _endpoint_events(rep):
        if kind == _LEFT:
            for v in active:
                nbrs[u].append(v)
                nbrs[v].append(u)
            active.add(u)
        else:
            active.discard(u)
    return models.UndirectedGraph(
        rep.n, tuple(tuple(sorted(vs)) for vs in nbrs))


def ordering_from_proper_rep(rep):
    """Returns the ordering of the vertices by left endpoint.

    :raises exception.NotProperRepresentation if one interval strictly
            contains another
    """
    by_left = sorted(range(rep.n),
                     key=lambda u: (rep.left[u], rep.right[u], u))
    for prev, cur in zip(by_left, by_left[1:]):
        pl, pr = rep.interval(prev)
        cl, cr = rep.interval(cur)
        if (pl, pr) == (cl, cr):
            continue
        if pl == cl:
            # Equal lefts, prev has the smaller right
            raise exception.NotProperRepresentation(outer=cur, inner=prev)
        if cr <= pr:
            raise exception.NotProperRepresentation(outer=prev, inner=cur)
    return models.VertexOrdering(by_left)


def compute_lambda_rho(g, ordering):
    """Returns, for each vertex u, the first and last vertex of N(u) + {u}
    under the ordering.
    """
    pos = ordering.pos
    lam = list(range(g.n))
    rho = list(range(g.n))
    for u in range(g.n):
        nbrs = g.adjacency[u]
        if not nbrs:
            continue
        lo = min(nbrs, key=pos.__getitem__)
        hi = max(nbrs, key=pos.__getitem__)
        if pos[lo] < pos[u]:
            lam[u] = lo
        if pos[hi] > pos[u]:
            rho[u] = hi
    return models.LambdaRho(lam, rho)


def validate_proper_ordering(g, ordering):
    """Checks that every neighbourhood is the contiguous ordering range
    between lambda(u) and rho(u).

    Returns a tuple of (True, None) or (False, (u, v, w)) where u < v < w in
    the ordering, uw is an edge and uv or vw is not.
    """
    if len(ordering) != g.n:
        raise exception.InvalidInput(
            "ordering covers %d vertices, graph has %d" % (len(ordering), g.n))
    pos = ordering.pos
    order = ordering.order
    lr = compute_lambda_rho(g, ordering)
    for u in order:
        lo = pos[lr.lam[u]]
        hi = pos[lr.rho[u]]
        if g.degree(u) == hi - lo:
            continue
        nbrs = set(g.adjacency[u])
        for i in range(lo, hi + 1):
            x = order[i]
            if x == u or x in nbrs:
                continue
            if i > pos[u]:
                return False, (u, x, lr.rho[u])
            return False, (lr.lam[u], x, u)
    return True, None


def check_proper_ordering(g, ordering):
    ok, witness = validate_proper_ordering(g, ordering)
    if not ok:
        raise exception.NotProperOrdering(witness)


def proper_triple_violation(g, ordering):
    """Direct cubic scan for a u < v < w with uw an edge and uv or vw not an
    edge. Returns the first such triple in ordering order, or None.
    """
    order = ordering.order
    n = len(order)
    for i in range(n):
        u = order[i]
        for k in range(i + 2, n):
            w = order[k]
            if not g.has_edge(u, w):
                continue
            for j in range(i + 1, k):
                v = order[j]
                if not (g.has_edge(u, v) and g.has_edge(v, w)):
                    return u, v, w
    return None


def validate_transitive_ordering(g, ordering):
    """Checks both transitive vertex ordering conditions for every u < v < w:

      (a) uv and vw edges imply uw is an edge;
      (b) uw an edge implies uv or vw is an edge.

    Returns (True, None, None) or (False, (u, v, w), condition).
    """
    if len(ordering) != g.n:
        raise exception.InvalidInput(
            "ordering covers %d vertices, graph has %d" % (len(ordering), g.n))
    pos = ordering.pos
    order = ordering.order
    nbrs = [set(a) for a in g.adjacency]

    for v in order:
        before = sorted((x for x in nbrs[v] if pos[x] < pos[v]),
                        key=pos.__getitem__)
        after = sorted((x for x in nbrs[v] if pos[x] > pos[v]),
                       key=pos.__getitem__)
        for u in before:
            for w in after:
                if w not in nbrs[u]:
                    return False, (u, v, w), 'a'

    for u in order:
        for w in sorted((x for x in nbrs[u] if pos[x] > pos[u]),
                        key=pos.__getitem__):
            for i in range(pos[u] + 1, pos[w]):
                v = order[i]
                if v not in nbrs[u] and v not in nbrs[w]:
                    return False, (u, v, w), 'b'
    return True, None, None


def check_transitive_ordering(g, ordering):
    ok, witness, condition = validate_transitive_ordering(g, ordering)
    if not ok:
        raise exception.NotTransitiveOrdering(witness, condition)


def connected_components(g):
    """Returns the components as ascending lists of vertex ids, ordered by
    their smallest vertex.
    """
    seen = [False] * g.n
    components = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        comp = [s]
        queue = collections.deque([s])
        while queue:
            u = queue.popleft()
            for v in g.adjacency[u]:
                if not seen[v]:
                    seen[v] = True
                    comp.append(v)
                    queue.append(v)
        comp.sort()
        components.append(comp)
    return components


def induced_subgraph(g, vertices):
    """Returns (subgraph, vertices) where vertices is the ascending list of
    original ids; new id i stands for vertices[i].
    """
    vertices = sorted(vertices)
    new_id = {u: i for i, u in enumerate(vertices)}
    adjacency = tuple(
        tuple(new_id[v] for v in g.adjacency[u] if v in new_id)
        for u in vertices
    )
    return models.UndirectedGraph(len(vertices), adjacency), vertices


def restrict_ordering(ordering, vertices):
    """Restricts ordering to the ascending id list vertices, relabelling
    vertices[i] as i like induced_subgraph does.
    """
    new_id = {u: i for i, u in enumerate(vertices)}
    return models.VertexOrdering(
        new_id[u] for u in ordering.order if u in new_id)


def split_ordering(ordering, components):
    """Restricts ordering to every component at once, in one pass over the
    ordering. Returns one VertexOrdering per component, relabelled the way
    restrict_ordering relabels it.

    :param components: disjoint ascending id lists covering every vertex
    """
    n = len(ordering)
    comp_of = [0] * n
    local = [0] * n
    for c, comp in enumerate(components):
        for i, u in enumerate(comp):
            comp_of[u] = c
            local[u] = i
    buckets = [[] for _ in components]
    for u in ordering.order:
        buckets[comp_of[u]].append(local[u])
    return [models.VertexOrdering(b) for b in buckets]


def is_bipartite(g):
    """Returns (True, None) or (False, u) where u closes an odd cycle."""
    side = [-1] * g.n
    for s in range(g.n):
        if side[s] != -1:
            continue
        side[s] = 0
        queue = collections.deque([s])
        while queue:
            u = queue.popleft()
            for v in g.adjacency[u]:
                if side[v] == -1:
                    side[v] = 1 - side[u]
                    queue.append(v)
                elif side[v] == side[u]:
                    return False, v
    return True, None
