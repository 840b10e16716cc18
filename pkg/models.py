# value objects shared by the solvers, verifiers and file formats

import bisect
import collections

import exception


class Edge(collections.namedtuple('Edge', ['a', 'b'])):
    """An undirected edge stored canonically with a < b."""
    __slots__ = ()

    def __new__(cls, u, v):
        if u == v:
            raise exception.InvalidInput("loop edge on vertex %d" % u)
        if v < u:
            u, v = v, u
        return super(Edge, cls).__new__(cls, u, v)

    def other(self, u):
        return self.b if u == self.a else self.a

    def __repr__(self):
        return "Edge(%d,%d)" % (self.a, self.b)


class UndirectedGraph(object):
    """A simple undirected graph on the vertex ids 0..n-1.

    adjacency is a tuple, indexed by vertex id, of strictly increasing tuples
    of neighbour ids.
    """
    def __init__(self, n, adjacency):
        self.n = n
        self.adjacency = adjacency
        self.m = sum(len(nbrs) for nbrs in adjacency) // 2
        self._edges = None

    @classmethod
    def from_edges(cls, n, edges):
        """Builds a graph from an iterable of (u, v) pairs. Duplicate pairs
        collapse to one edge.
        """
        nbrs = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise exception.InvalidInput(
                    "edge (%d,%d) has a vertex outside 0..%d" % (u, v, n - 1))
            if u == v:
                raise exception.InvalidInput("loop edge on vertex %d" % u)
            nbrs[u].add(v)
            nbrs[v].add(u)
        return cls(n, tuple(tuple(sorted(s)) for s in nbrs))

    @property
    def vertices(self):
        return range(self.n)

    @property
    def edges(self):
        """Sorted list of Edge objects. The index of an edge in this list is
        its edge id.
        """
        if self._edges is None:
            self._edges = [
                Edge(u, v)
                for u in range(self.n) for v in self.adjacency[u] if u < v
            ]
        return self._edges

    def neighbors(self, u):
        return self.adjacency[u]

    def degree(self, u):
        return len(self.adjacency[u])

    def has_edge(self, u, v):
        nbrs = self.adjacency[u]
        i = bisect.bisect_left(nbrs, v)
        return i < len(nbrs) and nbrs[i] == v

    def __eq__(self, other):
        return (isinstance(other, UndirectedGraph) and
                self.n == other.n and self.adjacency == other.adjacency)

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self.n, self.adjacency))

    def __repr__(self):
        return "UndirectedGraph(n=%d,m=%d)" % (self.n, self.m)


class VertexOrdering(object):
    """A total order on the vertices 0..n-1 with constant-time rank lookup."""
    def __init__(self, order):
        order = tuple(order)
        n = len(order)
        pos = [-1] * n
        for i, u in enumerate(order):
            if not 0 <= u < n or pos[u] != -1:
                raise exception.InvalidInput(
                    "ordering is not a permutation of 0..%d" % (n - 1))
            pos[u] = i
        self.order = order
        self.pos = tuple(pos)

    @classmethod
    def identity(cls, n):
        return cls(range(n))

    def __len__(self):
        return len(self.order)

    def __iter__(self):
        return iter(self.order)

    def __eq__(self, other):
        return isinstance(other, VertexOrdering) and self.order == other.order

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash(self.order)

    def left(self, e):
        """l(e): the endpoint of e that comes first in this ordering."""
        return e.a if self.pos[e.a] < self.pos[e.b] else e.b

    def right(self, e):
        """r(e): the endpoint of e that comes last in this ordering."""
        return e.b if self.pos[e.a] < self.pos[e.b] else e.a

    def __repr__(self):
        return "VertexOrdering(%s)" % (list(self.order),)


class IntervalRep(object):
    """Closed interval [left[u], right[u]] for every vertex u."""
    def __init__(self, left, right):
        left = tuple(left)
        right = tuple(right)
        if len(left) != len(right):
            raise exception.InvalidInput(
                "interval representation has %d left and %d right "
                "endpoints" % (len(left), len(right)))
        for u, (lo, hi) in enumerate(zip(left, right)):
            if lo > hi:
                raise exception.InvalidInput(
                    "interval of vertex %d has left %d > right %d" % (
                        u, lo, hi))
        self.left = left
        self.right = right

    @classmethod
    def from_pairs(cls, pairs):
        pairs = list(pairs)
        return cls([p[0] for p in pairs], [p[1] for p in pairs])

    @property
    def n(self):
        return len(self.left)

    def interval(self, u):
        return self.left[u], self.right[u]

    def __eq__(self, other):
        return (isinstance(other, IntervalRep) and
                self.left == other.left and self.right == other.right)

    def __ne__(self, other):
        return not self == other

    def __repr__(self):
        return "IntervalRep(%s)" % (
            list(zip(self.left, self.right)),)


class NestRep(object):
    """Interval pair (S_u, T_u) = ([L_u, R_u], [l_u, r_u]) for every vertex u,
    with T_u nested inside S_u.
    """
    def __init__(self, L, l, r, R):
        L, l, r, R = tuple(L), tuple(l), tuple(r), tuple(R)
        if not len(L) == len(l) == len(r) == len(R):
            raise exception.InvalidInput(
                "nest representation endpoint lists differ in length")
        for u in range(len(L)):
            if not l[u] <= r[u]:
                raise exception.InvalidNestRepresentation(
                    u, "T is empty (l=%d > r=%d)" % (l[u], r[u]))
            if not (L[u] <= l[u] and r[u] <= R[u]):
                raise exception.InvalidNestRepresentation(
                    u, "T=[%d,%d] is not within S=[%d,%d]" % (
                        l[u], r[u], L[u], R[u]))
        self.L = L
        self.l = l
        self.r = r
        self.R = R

    @classmethod
    def from_quads(cls, quads):
        quads = list(quads)
        return cls(*[[q[i] for q in quads] for i in range(4)])

    @property
    def n(self):
        return len(self.L)

    def quad(self, u):
        return self.L[u], self.l[u], self.r[u], self.R[u]

    def has_arc(self, u, v):
        """(u, v) is an arc iff S_u intersects T_v."""
        return max(self.L[u], self.l[v]) <= min(self.R[u], self.r[v])

    def __eq__(self, other):
        return (isinstance(other, NestRep) and
                (self.L, self.l, self.r, self.R) ==
                (other.L, other.l, other.r, other.R))

    def __ne__(self, other):
        return not self == other

    def __repr__(self):
        return "NestRep(%s)" % ([self.quad(u) for u in range(self.n)],)


class LambdaRho(object):
    """Per-vertex first and last member of N(u) + {u} under an ordering."""
    def __init__(self, lam, rho):
        self.lam = tuple(lam)
        self.rho = tuple(rho)

    def __repr__(self):
        return "LambdaRho(lambda=%s,rho=%s)" % (list(self.lam), list(self.rho))


class Matching(object):
    """A set of edges. Whether the edges are pairwise vertex-disjoint is
    decided by oracle.is_matching; solvers only ever produce disjoint sets.
    """
    def __init__(self, edges=()):
        self.edges = tuple(edges)

    @classmethod
    def of(cls, *pairs):
        return cls(Edge(u, v) for u, v in pairs)

    @property
    def vertices(self):
        return frozenset(x for e in self.edges for x in e)

    def sorted_edges(self):
        return sorted(self.edges)

    def __len__(self):
        return len(self.edges)

    def __iter__(self):
        return iter(self.edges)

    def __contains__(self, e):
        return e in self.edges

    def __eq__(self, other):
        return (isinstance(other, Matching) and
                frozenset(self.edges) == frozenset(other.edges))

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash(frozenset(self.edges))

    def __repr__(self):
        return "Matching(%s)" % self.sorted_edges()


class AlternatingCycle(object):
    """Cyclic vertex sequence u1..uk, stored starting at its smallest vertex
    with the smaller of that vertex's two cycle neighbours second.
    """
    def __init__(self, vertices):
        self.vertices = tuple(vertices)

    def __len__(self):
        return len(self.vertices)

    def edges(self):
        k = len(self.vertices)
        return [Edge(self.vertices[i], self.vertices[(i + 1) % k])
                for i in range(k)]

    def __eq__(self, other):
        return (isinstance(other, AlternatingCycle) and
                self.vertices == other.vertices)

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash(self.vertices)

    def __repr__(self):
        return "AlternatingCycle(%s)" % (list(self.vertices),)


class PermutationSpec(object):
    """A permutation pi of 1..n, stored as the tuple (pi(1), ..., pi(n))."""
    def __init__(self, pi):
        pi = tuple(pi)
        if sorted(pi) != list(range(1, len(pi) + 1)):
            raise exception.InvalidInput(
                "%s is not a permutation of 1..%d" % (list(pi), len(pi)))
        self.pi = pi

    @property
    def n(self):
        return len(self.pi)

    def __repr__(self):
        return "PermutationSpec(%s)" % (list(self.pi),)


class FamilyInstance(object):
    def __init__(self, k, graph, matching):
        self.k = k
        self.graph = graph
        self.matching = matching

    def __repr__(self):
        return "FamilyInstance(k=%d,graph=%s,matching=%s)" % (
            self.k, self.graph, self.matching)


class RunReport(object):
    """One line of benchmark or solve output."""
    SCHEMA = 'v1'

    def __init__(self, instance, klass, size_param, matching_size, wall_time,
                 verified=None):
        self.instance = instance
        self.klass = klass
        self.size_param = size_param
        self.matching_size = matching_size
        self.wall_time = wall_time
        # None when verification was not requested
        self.verified = verified

    def to_dict(self):
        d = dict(
            schema=self.SCHEMA,
            instance=self.instance,
            klass=self.klass,
            size_param=self.size_param,
            matching_size=self.matching_size,
            wall_time=round(self.wall_time, 6),
        )
        if self.verified is not None:
            d['verified'] = self.verified
        return d

    def to_text(self):
        line = "instance=%s class=%s n=%d size=%d time=%.6f" % (
            self.instance, self.klass, self.size_param, self.matching_size,
            self.wall_time)
        if self.verified is not None:
            line += " verified=%s" % ('yes' if self.verified else 'no')
        return line

    def __repr__(self):
        return "RunReport(%s)" % self.to_text()
