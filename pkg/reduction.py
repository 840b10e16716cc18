# Maximum uniquely restricted matching in interval graphs by turning every
# edge uv into the nest (I_u + I_v, I_u & I_v) and solving maximum strong
# independent set on the resulting interval nest digraph

import itertools

import exception
import graph
import models
import nest
import oracle

DEFAULT_MAX_EDGES = 2000
MAX_FAITHFUL_EDGES = 16


class EdgeNestMap(object):
    """Bijection between the edges of an interval graph and the vertices of
    its edge nest digraph.

    edges is a list, indexed by nest vertex id, of Edge; index is the
    inverse dict.
    """
    def __init__(self, edges):
        self.edges = list(edges)
        self.index = {e: i for i, e in enumerate(self.edges)}

    def __len__(self):
        return len(self.edges)

    def to_nest(self, matching):
        return sorted(self.index[e] for e in matching)

    def to_matching(self, vertices):
        return models.Matching(sorted(self.edges[i] for i in vertices))

    def __repr__(self):
        return "EdgeNestMap(m=%d)" % len(self.edges)


def build_nest_from_intervals(rep, g):
    """Returns (NestRep, EdgeNestMap) for the edges of g = the intersection
    graph of the normalized rep.

    Nest vertex ids follow the edges sorted by (L_e, R_e, a, b) so the
    result only depends on rep.
    """
    quads = {}
    for e in g.edges:
        lu, ru = rep.interval(e.a)
        lv, rv = rep.interval(e.b)
        inner_l, inner_r = max(lu, lv), min(ru, rv)
        if inner_l > inner_r:
            raise exception.InternalAssertion(
                "intervals of edge %r do not intersect" % (e,))
        quads[e] = (min(lu, lv), inner_l, inner_r, max(ru, rv))
    edges = sorted(g.edges, key=lambda e: (quads[e][0], quads[e][3], e))
    emap = EdgeNestMap(edges)
    raw = models.NestRep.from_quads(quads[e] for e in edges)
    return nest.normalize_nest(raw), emap


def solve_interval_urm(rep, max_edges=DEFAULT_MAX_EDGES, force=False):
    """Returns a maximum uniquely restricted matching of the intersection
    graph of rep.

    :param max_edges: refuse graphs with more edges unless force is set
    :raises exception.BoundExceeded
    """
    norm = graph.normalize_intervals(rep)
    g = graph.intersection_graph(norm)
    if g.m > max_edges and not force:
        raise exception.BoundExceeded(
            "the interval reduction", g.m, max_edges,
            hint="The strong independent set program takes O(m^4) time on "
                 "the edge digraph; use --force to run it anyway.")
    if not g.m:
        return models.Matching()
    digraph, emap = build_nest_from_intervals(norm, g)
    return emap.to_matching(nest.max_sis(digraph))


def reduction_faithful(rep, g, sample_sets):
    """Checks that each sampled edge set is a strong independent set of the
    edge digraph exactly when it is a uniquely restricted matching of g.

    :param rep: interval representation of g
    :param sample_sets: iterable of edge iterables
    """
    if g.m > MAX_FAITHFUL_EDGES:
        raise exception.BoundExceeded(
            "the reduction check", g.m, MAX_FAITHFUL_EDGES)
    norm = graph.normalize_intervals(rep)
    digraph, emap = build_nest_from_intervals(norm, g)
    for edges in sample_sets:
        matching = models.Matching(edges)
        sis = nest.is_strong_independent(digraph, emap.to_nest(matching))
        urm = (oracle.is_matching(g, matching) and
               oracle.is_ur_oracle(g, matching))
        if sis != urm:
            return False
    return True


def small_edge_sets(g, matching):
    """The empty set, every single edge and pair of edges, and matching."""
    sets = [(), tuple(matching)]
    sets.extend((e,) for e in g.edges)
    sets.extend(itertools.combinations(g.edges, 2))
    return sets
