# Maximum strong independent set in an interval nest digraph, computed from
# its representation by a memoized dynamic program over vertex triples

import itertools

import exception
import models

MAX_BRUTEFORCE_VERTICES = 20

# Endpoint kinds in the order they rank at an equal coordinate: the left
# endpoints L then l before the right endpoints r then R.
_KIND_L = 0
_KIND_SMALL_L = 1
_KIND_SMALL_R = 2
_KIND_R = 3

# Memo choices. A memo entry is (size, choice) where choice says which
# candidate set won; 'xy' entries carry the splitting vertex y.
EMPTY = 'empty'
ETA = 'eta'
TAKE_X = 'x'
TAKE_XY = 'xy'


def normalize_nest(rep):
    """Returns a NestRep with the same arcs and nestings whose 4n endpoints
    are the distinct integers 1..4n.

    At an equal coordinate, L endpoints rank first, then l, then r, then R;
    within one kind the lower vertex id ranks first.
    """
    events = []
    for u in range(rep.n):
        L, l, r, R = rep.quad(u)
        events.append((L, _KIND_L, u))
        events.append((l, _KIND_SMALL_L, u))
        events.append((r, _KIND_SMALL_R, u))
        events.append((R, _KIND_R, u))
    events.sort()
    coords = [[0] * rep.n for _ in range(4)]
    for rank, (_coord, kind, u) in enumerate(events, 1):
        coords[kind][u] = rank
    return models.NestRep(*coords)


def add_dummies(rep):
    """Appends the two sentinel vertices a (id n) and b (id n + 1) to a
    normalized representation. Every original vertex lies strictly between
    r_a and l_b.
    """
    n = rep.n
    top = 4 * n
    return models.NestRep(
        rep.L + (-4, -2),
        rep.l + (-3, top + 1),
        rep.r + (-1, top + 2),
        rep.R + (0, top + 3),
    )


def eta(rep, x):
    """Returns the vertex with the next larger l coordinate after x, or None
    when x has the largest.
    """
    after = [y for y in range(rep.n) if rep.l[y] > rep.l[x]]
    if not after:
        return None
    return min(after, key=lambda y: rep.l[y])


def in_X(rep, u, v, y):
    L, l, r, R = rep.L, rep.l, rep.r, rep.R
    if not (r[u] < l[v] and L[v] < r[u]):
        return False
    return r[u] < L[y] and R[y] < l[v]


def in_Y(rep, u, v, x, y):
    # x only needs l_x < l_v, so Y(u, v, eta(u)) equals X(u, v)
    if not rep.l[x] < rep.l[v]:
        return False
    return rep.l[y] >= rep.l[x] and in_X(rep, u, v, y)


class SisTable(object):
    """Sparse memo of S(u, v, x), the largest strong independent subset of
    Y(u, v, x) found by the recurrence, over a normalized representation with
    dummies added.

    Only the size and the winning choice of each triple is stored; members()
    rebuilds the set.
    """
    def __init__(self, rep):
        self.rep = rep
        self.by_l = sorted(range(rep.n), key=lambda y: rep.l[y])
        self.rank = [0] * rep.n
        for i, y in enumerate(self.by_l):
            self.rank[y] = i
        # dict, keyed by (u, v, x), of (size, choice)
        self.memo = {}

    def eta(self, x):
        i = self.rank[x] + 1
        return self.by_l[i] if i < len(self.by_l) else None

    def in_X(self, u, v, y):
        return in_X(self.rep, u, v, y)

    def window(self, u, v, x):
        """Returns Y(u, v, x) as a list in increasing l order."""
        rep = self.rep
        if x is None or not rep.l[x] < rep.l[v]:
            return []
        if not (rep.r[u] < rep.l[v] and rep.L[v] < rep.r[u]):
            return []
        members = []
        lv = rep.l[v]
        for i in range(self.rank[x], len(self.by_l)):
            y = self.by_l[i]
            if rep.l[y] >= lv:
                break
            if rep.r[u] < rep.L[y] and rep.R[y] < lv:
                members.append(y)
        return members

    def _candidates(self, key):
        # Returns a list of (choice, y, sub-keys) in the order the recurrence
        # tries them, or None when Y(u, v, x) is empty.
        u, v, x = key
        window = self.window(u, v, x)
        if not window:
            return None
        rep = self.rep
        nxt = self.eta(x)
        cands = [(ETA, None, ((u, v, nxt),))]
        if window[0] == x:
            cands.append((TAKE_X, None, ((x, v, nxt),)))
            for y in window[1:]:
                if rep.L[y] < rep.r[x] and rep.R[x] < rep.l[y]:
                    cands.append((TAKE_XY, y, ((x, y, nxt), (u, v, y))))
        return cands

    def size(self, key):
        if key[2] is None:
            return 0
        return self.memo[key][0]

    def compute(self, u, v, x):
        """Fills the memo for (u, v, x) and everything it depends on and
        returns |S(u, v, x)|.

        :raises exception.InternalAssertion if a triple depends on itself
        """
        root = (u, v, x)
        if x is None:
            return 0
        memo = self.memo
        expanding = {}
        stack = [root]
        while stack:
            key = stack[-1]
            if key in memo:
                stack.pop()
                continue
            if key in expanding:
                cands = expanding.pop(key)
            else:
                cands = self._candidates(key)
                if cands is None:
                    memo[key] = (0, EMPTY)
                    stack.pop()
                    continue
                pending = [sub for _c, _y, subs in cands for sub in subs
                           if sub[2] is not None and sub not in memo]
                if pending:
                    for sub in pending:
                        if sub in expanding:
                            raise exception.InternalAssertion(
                                "triple %r depends on itself" % (sub,))
                    expanding[key] = cands
                    stack.extend(pending)
                    continue
            stack.pop()
            best_size = -1
            best = None
            for choice, y, subs in cands:
                size = sum(self.size(sub) for sub in subs)
                if choice != ETA:
                    size += 1
                if size > best_size:
                    best_size = size
                    best = (choice, y)
            memo[key] = (best_size, best)
        return memo[root][0]

    def members(self, u, v, x):
        """Materializes S(u, v, x) as an ascending list of vertex ids."""
        if x is None:
            return []
        self.compute(u, v, x)
        out = []
        stack = [(u, v, x)]
        while stack:
            key = stack.pop()
            if key[2] is None:
                continue
            size, choice = self.memo[key]
            if size == 0:
                continue
            u, v, x = key
            nxt = self.eta(x)
            kind, y = choice
            if kind == ETA:
                stack.append((u, v, nxt))
            elif kind == TAKE_X:
                out.append(x)
                stack.append((x, v, nxt))
            else:
                out.append(x)
                stack.append((x, y, nxt))
                stack.append((u, v, y))
        return sorted(out)


def build_table(rep):
    """Normalizes rep, adds the dummies and returns (table, a, b)."""
    ext = add_dummies(normalize_nest(rep))
    return SisTable(ext), rep.n, rep.n + 1


def compute_s(table, u, v, x):
    return table.members(u, v, x)


def max_sis(rep):
    """Returns a maximum strong independent set of the interval nest digraph
    of rep as an ascending list of vertex ids.
    """
    if rep.n == 0:
        return []
    table, a, b = build_table(rep)
    return table.members(a, b, table.eta(a))


def is_strong_independent(rep, vertices):
    """True if no two of vertices have arcs in both directions."""
    vertices = list(vertices)
    for u, v in itertools.combinations(vertices, 2):
        if rep.has_arc(u, v) and rep.has_arc(v, u):
            return False
    return True


def arcs(rep):
    """Sorted list of all arcs (u, v), u != v, of the digraph."""
    return [(u, v) for u in range(rep.n) for v in range(rep.n)
            if u != v and rep.has_arc(u, v)]


def max_sis_bruteforce(rep, bound=MAX_BRUTEFORCE_VERTICES):
    """Exhaustive maximum strong independent set; the lexicographically
    smallest among the maximum ones.

    :raises exception.BoundExceeded above bound vertices
    """
    if rep.n > bound:
        raise exception.BoundExceeded(
            "brute-force strong independent set search", rep.n, bound)
    conflict = [set() for _ in range(rep.n)]
    for u, v in itertools.combinations(range(rep.n), 2):
        if rep.has_arc(u, v) and rep.has_arc(v, u):
            conflict[u].add(v)
            conflict[v].add(u)
    for k in range(rep.n, 0, -1):
        for subset in itertools.combinations(range(rep.n), k):
            if all(conflict[u].isdisjoint(subset) for u in subset):
                return list(subset)
    return []
