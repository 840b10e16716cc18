# Maximum uniquely restricted matching in proper interval graphs, given a
# proper vertex ordering

import collections

import exception
import graph
import models

# Memo entry for one edge: size of the chain starting at the edge and the
# successor edge it continues with (None at the end of a chain).
UEntry = collections.namedtuple('UEntry', ['size', 'best'])


class ChainContext(object):
    """A graph under a vertex ordering with a memo of best chains U(e).

    Subclasses define successors(e), which returns the two candidate next
    edges of a chain. U(e) is e followed by the larger of the candidates'
    chains; ties go to the first candidate.
    """
    def __init__(self, g, ordering):
        self.g = g
        self.ordering = ordering
        self.lr = graph.compute_lambda_rho(g, ordering)
        # dict, keyed by Edge, of UEntry
        self.memo = {}

    def left(self, e):
        return self.ordering.left(e)

    def right(self, e):
        return self.ordering.right(e)

    def successors(self, e):
        raise NotImplementedError

    def compute_u(self, e):
        """Fills the memo for e and every edge its chain depends on and
        returns the UEntry for e. Uses an explicit stack; no edge is computed
        twice.
        """
        memo = self.memo
        if e in memo:
            return memo[e]
        expanding = set()
        stack = [e]
        while stack:
            cur = stack[-1]
            if cur in memo:
                stack.pop()
                continue
            first, second = self.successors(cur)
            pending = [s for s in (first, second)
                       if s is not None and s not in memo]
            if pending:
                if cur in expanding:
                    raise exception.InternalAssertion(
                        "successor of %r is still being computed" % (cur,))
                for s in pending:
                    if s in expanding:
                        raise exception.InternalAssertion(
                            "successor cycle through %r" % (s,))
                expanding.add(cur)
                stack.extend(pending)
                continue
            expanding.discard(cur)
            stack.pop()
            if first is not None and second is not None:
                best = first if memo[first].size >= memo[second].size \
                    else second
            else:
                best = first if first is not None else second
            size = 1 if best is None else 1 + memo[best].size
            memo[cur] = UEntry(size, best)
        return memo[e]

    def chain(self, e):
        """Materializes U(e) as a list of edges in chain order."""
        self.compute_u(e)
        edges = []
        while e is not None:
            edges.append(e)
            e = self.memo[e].best
        return edges


class ProperContext(ChainContext):
    """Read-only view of a graph under a proper vertex ordering plus the
    private memo of one solve.

    successors assumes the graph is connected; pair_is_ur does not.
    """
    def pair_is_ur(self, e, f):
        """Two edges form a uniquely restricted matching iff they are
        disjoint and either their left endpoints or their right endpoints
        are nonadjacent.
        """
        if e == f or set(e) & set(f):
            return False
        g = self.g
        return (not g.has_edge(self.left(e), self.left(f)) or
                not g.has_edge(self.right(e), self.right(f)))

    def successors(self, e):
        """Returns (sigma_l(e), sigma_r(e)), either of which may be None.

        With v_i = rho(l(e)), sigma_l(e) is v_{i+1} v_{i+2}. With
        v_j = rho(r(e)), sigma_r(e) is lambda(v_{j+1}) v_{j+1}.
        """
        order = self.ordering.order
        pos = self.ordering.pos
        n = len(order)
        sigma_l = sigma_r = None
        i = pos[self.lr.rho[self.left(e)]]
        if i < n - 2:
            sigma_l = models.Edge(order[i + 1], order[i + 2])
        j = pos[self.lr.rho[self.right(e)]]
        if j < n - 1:
            u = order[j + 1]
            sigma_r = models.Edge(self.lr.lam[u], u)
        return sigma_l, sigma_r


def pair_is_ur_proper(ctx, e, f):
    return ctx.pair_is_ur(e, f)


def successors(ctx, e):
    return ctx.successors(e)


def compute_u(ctx, e):
    return ctx.compute_u(e)


def pair_predicate(g, ordering):
    """Returns a pair_pred(e, f) callable for oracle.is_ur_consecutive."""
    return ProperContext(g, ordering).pair_is_ur


def solve_components(g, ordering, make_context, first_edge):
    """Solves every connected component with at least one edge on its own
    and returns the union of the chains as a Matching sorted by the ordering
    position of each edge's left endpoint.

    :param make_context: callable(graph, ordering) -> ChainContext
    :param first_edge: callable(context) -> Edge starting the component's
                       chain
    """
    components = graph.connected_components(g)
    if len(components) > 1:
        sub_orderings = graph.split_ordering(ordering, components)
    edges = []
    for c, comp in enumerate(components):
        if len(comp) < 2:
            continue
        if len(components) == 1:
            sub, sub_ordering, ids = g, ordering, None
        else:
            sub, ids = graph.induced_subgraph(g, comp)
            sub_ordering = sub_orderings[c]
        ctx = make_context(sub, sub_ordering)
        for e in ctx.chain(first_edge(ctx)):
            if ids is not None:
                e = models.Edge(ids[e.a], ids[e.b])
            edges.append(e)
    edges.sort(key=lambda e: ordering.pos[ordering.left(e)])
    return models.Matching(edges)


def _first_two(ctx):
    order = ctx.ordering.order
    return models.Edge(order[0], order[1])


def solve_proper(g, ordering, validate=True):
    """Returns a maximum uniquely restricted matching of g: per component,
    the chain U(v1 v2) of its first two vertices.

    :param g: UndirectedGraph
    :param ordering: proper VertexOrdering of g
    :param validate: check that the ordering is proper first
    :raises exception.NotProperOrdering with a witness triple
    """
    if validate:
        graph.check_proper_ordering(g, ordering)
    return solve_components(g, ordering, ProperContext, _first_two)
