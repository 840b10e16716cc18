# Readers and writers for the plain text instance and result formats:
#
#   .graph     "n m", an optional "order: id ... id" line, then m "u v" lines
#   .ivg       "n", then n "id left right" lines
#   .nest      "n", then n "id L l r R" lines
#   .matching  "size k", then k "u v" lines with u < v, sorted by u
#
# Lines starting with '#' and blank lines are ignored everywhere.

import os

import exception
import models

_ORDER_PREFIX = 'order:'


def read_file(path):
    if not os.path.exists(path):
        raise exception.ParseError(path, 0, "file does not exist")
    with open(path, 'r') as f:
        return f.read()


def _content_lines(text):
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.strip()
        if not line or line.startswith('#'):
            continue
        yield lineno, line


def _ints(path, lineno, tokens, count=None):
    if count is not None and len(tokens) != count:
        raise exception.ParseError(
            path, lineno, "expected %d fields, found %d" % (
                count, len(tokens)))
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise exception.ParseError(
            path, lineno, "expected integers, found %r" % ' '.join(tokens))


def _header(path, lines, count):
    try:
        lineno, line = next(lines)
    except StopIteration:
        raise exception.ParseError(path, 0, "missing header line")
    values = _ints(path, lineno, line.split(), count)
    for v in values:
        if v < 0:
            raise exception.ParseError(
                path, lineno, "header values must be non-negative")
    return lineno, values


def _check_vertex(path, lineno, u, n):
    if not 0 <= u < n:
        raise exception.ParseError(
            path, lineno, "vertex %d is outside 0..%d" % (u, n - 1))


def read_graph(text, path='<graph>'):
    """Parses a .graph document.

    Returns a tuple of (UndirectedGraph, VertexOrdering or None).
    """
    lines = _content_lines(text)
    lineno, (n, m) = _header(path, lines, 2)
    ordering = None
    edges = []
    last = lineno
    for lineno, line in lines:
        last = lineno
        if line.startswith(_ORDER_PREFIX):
            if edges:
                raise exception.ParseError(
                    path, lineno, "order line must precede the edge lines")
            if ordering is not None:
                raise exception.ParseError(
                    path, lineno, "duplicate order line")
            ids = _ints(path, lineno, line[len(_ORDER_PREFIX):].split(), n)
            for u in ids:
                _check_vertex(path, lineno, u, n)
            if len(set(ids)) != n:
                raise exception.ParseError(
                    path, lineno, "order line repeats a vertex")
            ordering = models.VertexOrdering(ids)
            continue
        u, v = _ints(path, lineno, line.split(), 2)
        _check_vertex(path, lineno, u, n)
        _check_vertex(path, lineno, v, n)
        if u == v:
            raise exception.ParseError(
                path, lineno, "loop edge on vertex %d" % u)
        edges.append((u, v))
    if len(edges) != m:
        raise exception.ParseError(
            path, last, "header declares %d edges, found %d" % (
                m, len(edges)))
    return models.UndirectedGraph.from_edges(n, edges), ordering


def parse_graph(text, path='<graph>'):
    return read_graph(text, path)[0]


def _read_rows(text, path, width):
    # Shared body of the .ivg and .nest readers: n rows of an id followed by
    # width integers, every id exactly once. Returns (rows, linenos), both
    # indexed by vertex id.
    lines = _content_lines(text)
    lineno, (n,) = _header(path, lines, 1)
    rows = [None] * n
    linenos = [0] * n
    seen = 0
    last = lineno
    for lineno, line in lines:
        last = lineno
        values = _ints(path, lineno, line.split(), width + 1)
        u = values[0]
        _check_vertex(path, lineno, u, n)
        if rows[u] is not None:
            raise exception.ParseError(
                path, lineno, "vertex %d listed twice" % u)
        rows[u] = values[1:]
        linenos[u] = lineno
        seen += 1
    if seen != n:
        raise exception.ParseError(
            path, last, "header declares %d vertices, found %d" % (n, seen))
    return rows, linenos


def read_intervals(text, path='<ivg>'):
    rows, linenos = _read_rows(text, path, 2)
    for u, (lo, hi) in enumerate(rows):
        if lo > hi:
            raise exception.ParseError(
                path, linenos[u],
                "interval of vertex %d has left %d > right %d" % (u, lo, hi))
    return models.IntervalRep.from_pairs(rows)


def read_nest(text, path='<nest>'):
    rows, _linenos = _read_rows(text, path, 4)
    return models.NestRep.from_quads(rows)


def read_matching(text, path='<matching>'):
    lines = _content_lines(text)
    try:
        lineno, line = next(lines)
    except StopIteration:
        raise exception.ParseError(path, 0, "missing size line")
    tokens = line.split()
    if len(tokens) != 2 or tokens[0] != 'size':
        raise exception.ParseError(path, lineno, "expected 'size k'")
    k = _ints(path, lineno, tokens[1:])[0]
    edges = []
    last = lineno
    for lineno, line in lines:
        last = lineno
        u, v = _ints(path, lineno, line.split(), 2)
        if u == v:
            raise exception.ParseError(
                path, lineno, "loop edge on vertex %d" % u)
        edges.append(models.Edge(u, v))
    if len(edges) != k:
        raise exception.ParseError(
            path, last, "size line declares %d edges, found %d" % (
                k, len(edges)))
    return models.Matching(edges)


def read_vertex_set(text, path='<vertices>'):
    lines = _content_lines(text)
    try:
        lineno, line = next(lines)
    except StopIteration:
        raise exception.ParseError(path, 0, "missing size line")
    tokens = line.split()
    if len(tokens) != 2 or tokens[0] != 'size':
        raise exception.ParseError(path, lineno, "expected 'size k'")
    k = _ints(path, lineno, tokens[1:])[0]
    ids = []
    last = lineno
    for lineno, line in lines:
        last = lineno
        ids.append(_ints(path, lineno, line.split(), 1)[0])
    if len(ids) != k:
        raise exception.ParseError(
            path, last, "size line declares %d vertices, found %d" % (
                k, len(ids)))
    return sorted(ids)


def write_graph(g, ordering=None):
    out = ["%d %d" % (g.n, g.m)]
    if ordering is not None:
        out.append("%s %s" % (_ORDER_PREFIX, ' '.join(map(str, ordering))))
    out.extend("%d %d" % (e.a, e.b) for e in g.edges)
    return '\n'.join(out) + '\n'


def write_intervals(rep):
    out = ["%d" % rep.n]
    out.extend("%d %d %d" % (u, rep.left[u], rep.right[u])
               for u in range(rep.n))
    return '\n'.join(out) + '\n'


def write_nest(rep):
    out = ["%d" % rep.n]
    out.extend("%d %d %d %d %d" % ((u,) + rep.quad(u)) for u in range(rep.n))
    return '\n'.join(out) + '\n'


def write_matching(matching):
    edges = matching.sorted_edges()
    out = ["size %d" % len(edges)]
    out.extend("%d %d" % (e.a, e.b) for e in edges)
    return '\n'.join(out) + '\n'


def write_vertex_set(vertices):
    vertices = sorted(vertices)
    out = ["size %d" % len(vertices)]
    out.extend("%d" % u for u in vertices)
    return '\n'.join(out) + '\n'
