# Maximum uniquely restricted matching in bipartite permutation graphs, given
# a transitive vertex ordering

import exception
import graph
import models
import proper

LEFT = 'left'
RIGHT = 'right'


def classify_sides(g, ordering):
    """Returns a list, indexed by vertex id, of LEFT or RIGHT.

    A vertex is a left vertex when all of its neighbours come after it and a
    right vertex when all of them come before it.

    :raises exception.NotBipartitePermutation for a vertex with neighbours on
            both sides of it, or an isolated vertex
    """
    pos = ordering.pos
    sides = [None] * g.n
    for u in range(g.n):
        nbrs = g.adjacency[u]
        if not nbrs:
            raise exception.NotBipartitePermutation(
                u, "isolated vertex has no side")
        before = any(pos[v] < pos[u] for v in nbrs)
        after = any(pos[v] > pos[u] for v in nbrs)
        if before and after:
            raise exception.NotBipartitePermutation(
                u, "vertex has neighbours both before and after it in the "
                   "ordering")
        sides[u] = RIGHT if before else LEFT
    return sides


class BipPermContext(proper.ChainContext):
    """A connected bipartite permutation graph without isolated vertices
    under a transitive vertex ordering.
    """
    def __init__(self, g, ordering):
        super(BipPermContext, self).__init__(g, ordering)
        pos = ordering.pos
        self.sides = classify_sides(g, ordering)
        # gamma(u), the first neighbour after u; None for right vertices
        self.gamma = [None] * g.n
        for u in range(g.n):
            if self.sides[u] == LEFT:
                self.gamma[u] = min(g.adjacency[u], key=pos.__getitem__)
        # nu(u), the first left vertex strictly after u, by one backward
        # sweep
        self.nu = [None] * g.n
        nxt = None
        for u in reversed(ordering.order):
            self.nu[u] = nxt
            if self.sides[u] == LEFT:
                nxt = u

    def is_left(self, u):
        return self.sides[u] == LEFT

    def pair_is_ur(self, e, f):
        """With pos(l(e)) < pos(l(f)): true when r(e) comes before l(f),
        otherwise true iff r(e) comes before r(f) and l(e) r(f) is not an
        edge.
        """
        if e == f or set(e) & set(f):
            return False
        pos = self.ordering.pos
        if pos[self.left(f)] < pos[self.left(e)]:
            e, f = f, e
        if pos[self.right(e)] < pos[self.left(f)]:
            return True
        if pos[self.right(e)] < pos[self.right(f)]:
            return not self.g.has_edge(self.left(e), self.right(f))
        return False

    def successors(self, e):
        """Returns (x(e), y(e)), either of which may be None."""
        order = self.ordering.order
        pos = self.ordering.pos
        x = y = None
        i = pos[self.lr.rho[self.left(e)]]
        if i < len(order) - 1:
            u = order[i + 1]
            if self.is_left(u):
                u = self.gamma[u]
            x = models.Edge(self.lr.lam[u], u)
        u = self.nu[self.right(e)]
        if u is not None:
            y = models.Edge(u, self.gamma[u])
        return x, y


def pair_is_ur_bp(ctx, e, f):
    return ctx.pair_is_ur(e, f)


def xy_edges(ctx, e):
    return ctx.successors(e)


def compute_u_bp(ctx, e):
    return ctx.compute_u(e)


def pair_predicate(g, ordering):
    """Returns a pair_pred(e, f) callable for oracle.is_ur_consecutive.

    Isolated vertices are dropped first since they have no side.
    """
    comp = [u for u in range(g.n) if g.degree(u)]
    sub, ids = graph.induced_subgraph(g, comp)
    ctx = BipPermContext(sub, graph.restrict_ordering(ordering, ids))
    new_id = {u: i for i, u in enumerate(ids)}

    def pred(e, f):
        return ctx.pair_is_ur(models.Edge(new_id[e.a], new_id[e.b]),
                              models.Edge(new_id[f.a], new_id[f.b]))
    return pred


def check_fast(g, ordering):
    """Necessary conditions only: bipartite, and every non-isolated vertex
    has all its neighbours on one side of it in the ordering.
    """
    ok, u = graph.is_bipartite(g)
    if not ok:
        raise exception.NotBipartitePermutation(u, "graph is not bipartite")
    pos = ordering.pos
    for u in range(g.n):
        nbrs = g.adjacency[u]
        if nbrs and min(pos[v] for v in nbrs) < pos[u] < max(
                pos[v] for v in nbrs):
            raise exception.NotBipartitePermutation(
                u, "vertex has neighbours both before and after it in the "
                   "ordering")


def _first_left_edge(ctx):
    v1 = ctx.ordering.order[0]
    return models.Edge(v1, ctx.gamma[v1])


def solve_bipperm(g, ordering, validate=True, trust_ordering=False):
    """Returns a maximum uniquely restricted matching of g: per component,
    the chain U(v1 gamma(v1)) of its first vertex.

    :param g: UndirectedGraph
    :param ordering: transitive VertexOrdering of g
    :param validate: check the ordering before solving
    :param trust_ordering: only run the fast necessary-condition checks
                           instead of the full transitive ordering validator,
                           which is also skipped above
                           graph.TRANSITIVE_VALIDATION_LIMIT vertices
    :raises exception.NotTransitiveOrdering or
            exception.NotBipartitePermutation
    """
    if validate:
        if trust_ordering or g.n > graph.TRANSITIVE_VALIDATION_LIMIT:
            check_fast(g, ordering)
        else:
            graph.check_transitive_ordering(g, ordering)
            ok, u = graph.is_bipartite(g)
            if not ok:
                raise exception.NotBipartitePermutation(
                    u, "graph is not bipartite")
    return proper.solve_components(g, ordering, BipPermContext,
                                   _first_left_edge)
