# Command line front end: solve, verify, brute-force, generate, demo and
# benchmark maximum uniquely restricted matchings

import argparse
import json
import os
import sys

import bench
import bench_config
import bipperm
import db
import exception
import fileformat
import graph
import instances
import models
import nest
import oracle
import proper
import reduction

_BENCH_CONFIGS_DIR = os.path.join(
    os.path.abspath(os.path.dirname(__file__)), 'bench-configs',
)
_DEFAULT_BENCH_CONFIG = 'proper-interval-scaling'

CLASSES = bench_config.CLASSES
MATCHING_CLASSES = ('proper-interval', 'bip-perm', 'interval')
GEN_KINDS = ('unit-intervals', 'intervals', 'bip-perm', 'permutation',
             'family', 'nest')
VERIFY_METHODS = ('oracle', 'pairwise', 'consecutive')

EXIT_OK = 0
EXIT_PARSE = 1
EXIT_INVALID = 2
EXIT_INTERNAL = 3
EXIT_NOT_UR = 4


class RunContext(object):
    """Carries the parsed arguments and the output streams. Progress goes to
    stderr so stdout only carries the canonical result text.
    """
    def __init__(self, args, stdout=None, stderr=None):
        self.args = args
        self.stdout = stdout or sys.stdout
        self.stderr = stderr or sys.stderr

    def status(self, msg):
        if self.args.quiet:
            return
        self.stderr.write("action: " + msg + " ... ")
        self.stderr.flush()

    def status_ok(self):
        if self.args.quiet:
            return
        self.stderr.write("ok\n")
        self.stderr.flush()

    def status_fail(self, err):
        if not self.args.quiet:
            self.stderr.write("FAIL\n")
        self.stderr.write(" error: %s\n" % err)
        self.stderr.flush()

    def info(self, msg, *msg_args):
        if self.args.quiet:
            return
        if msg_args:
            msg = msg % msg_args
        self.stderr.write("info: %s\n" % msg)

    def emit(self, text):
        """Writes a whole result document to --out, or to stdout."""
        if getattr(self.args, 'out', None):
            with open(self.args.out, 'w') as f:
                f.write(text)
            self.info("wrote %s", self.args.out)
        else:
            self.stdout.write(text)


def _json_line(obj):
    return json.dumps(obj, sort_keys=True) + '\n'


def _matching_doc(ctx, klass, matching, verified=None):
    if ctx.args.format == 'json':
        obj = {
            'schema': 'v1',
            'class': klass,
            'size': len(matching),
            'edges': [[e.a, e.b] for e in matching.sorted_edges()],
        }
        if verified is not None:
            obj['verified'] = verified
        return _json_line(obj)
    return fileformat.write_matching(matching)


def load_graph_input(path, klass=None):
    """Reads a .graph or .ivg file.

    Returns (graph, ordering or None, IntervalRep or None). For a .ivg file
    and the proper-interval class the ordering comes from the left
    endpoints.
    """
    ext = os.path.splitext(path)[1]
    text = fileformat.read_file(path)
    if ext == '.ivg':
        rep = fileformat.read_intervals(text, path)
        ordering = None
        if klass == 'proper-interval':
            ordering = graph.ordering_from_proper_rep(rep)
        return graph.intersection_graph(rep), ordering, rep
    if ext == '.graph':
        g, ordering = fileformat.read_graph(text, path)
        return g, ordering, None
    raise exception.ParseError(
        path, 0, "unknown file extension %r, expected .graph or .ivg" % ext)


def _require_ordering(path, klass, ordering):
    if ordering is None:
        raise exception.InvalidInput(
            "%s: class %s needs a vertex ordering; add an 'order:' line" % (
                path, klass))


def _verify_matching(ctx, g, matching, rep=None):
    ctx.status("checking pairs for alternating 4-cycles")
    ok = oracle.is_ur_c4free(g, matching)
    ctx.status_ok()
    if ok and len(matching.vertices) <= oracle.MAX_ORACLE_VERTICES:
        ctx.status("running the unique perfect matching oracle")
        ok = oracle.is_ur_oracle(g, matching)
        ctx.status_ok()
    if ok and rep is not None and g.m <= reduction.MAX_FAITHFUL_EDGES:
        ctx.status("checking the edge digraph reduction")
        ok = reduction.reduction_faithful(
            rep, g, reduction.small_edge_sets(g, matching))
        ctx.status_ok()
    ctx.info("verified=%s", 'yes' if ok else 'no')
    return ok


def cmd_solve(ctx):
    args = ctx.args
    klass = args.klass
    path = args.input
    verified = None

    if klass == 'nest-sis':
        rep = fileformat.read_nest(fileformat.read_file(path), path)
        ctx.status("solving nest-sis on %d vertices" % rep.n)
        vertices = nest.max_sis(rep)
        ctx.status_ok()
        if args.verify:
            verified = nest.is_strong_independent(rep, vertices)
            if verified and rep.n <= nest.MAX_BRUTEFORCE_VERTICES:
                verified = len(vertices) == len(nest.max_sis_bruteforce(rep))
            ctx.info("verified=%s", 'yes' if verified else 'no')
        if args.format == 'json':
            obj = {'schema': 'v1', 'class': klass, 'size': len(vertices),
                   'vertices': vertices}
            if verified is not None:
                obj['verified'] = verified
            ctx.emit(_json_line(obj))
        else:
            ctx.emit(fileformat.write_vertex_set(vertices))
        return EXIT_NOT_UR if verified is False else EXIT_OK

    rep = None
    if klass == 'interval':
        if not path.endswith('.ivg'):
            raise exception.InvalidInput(
                "%s: class interval needs a .ivg interval file" % path)
        rep = fileformat.read_intervals(fileformat.read_file(path), path)
        g = graph.intersection_graph(rep)
        ctx.status("solving interval on %d vertices, %d edges" % (g.n, g.m))
        matching = reduction.solve_interval_urm(rep, force=args.force)
    else:
        g, ordering, _rep = load_graph_input(path, klass)
        _require_ordering(path, klass, ordering)
        ctx.status("solving %s on %d vertices, %d edges" % (klass, g.n, g.m))
        if klass == 'proper-interval':
            matching = proper.solve_proper(g, ordering)
        else:
            matching = bipperm.solve_bipperm(
                g, ordering, trust_ordering=args.trust_ordering)
    ctx.status_ok()
    ctx.info("matching size %d", len(matching))

    if args.verify:
        verified = _verify_matching(ctx, g, matching, rep)
    ctx.emit(_matching_doc(ctx, klass, matching, verified))
    return EXIT_NOT_UR if verified is False else EXIT_OK


def _pair_str(pair):
    e, f = pair
    return "(%d,%d)+(%d,%d)" % (e.a, e.b, f.a, f.b)


def cmd_verify(ctx):
    args = ctx.args
    klass = args.klass if args.method == 'consecutive' else None
    g, ordering, _rep = load_graph_input(args.input, klass)
    matching = fileformat.read_matching(
        fileformat.read_file(args.matching), args.matching)
    oracle.check_matching(g, matching)

    witness = None
    ctx.status("verifying with method %s" % args.method)
    if args.method == 'oracle':
        ok = oracle.is_ur_oracle(g, matching)
        if not ok and g.n <= oracle.MAX_CYCLE_VERTICES:
            cycles = oracle.enumerate_alternating_cycles(g, matching, g.n)
            if cycles:
                witness = "cycle=%s" % ','.join(
                    str(u) for u in cycles[0].vertices)
    elif args.method == 'pairwise':
        pair = oracle.find_alt_c4_pair(g, matching)
        ok = pair is None
        if pair is not None:
            witness = "pair=%s" % _pair_str(pair)
    else:
        _require_ordering(args.input, args.klass, ordering)
        if args.klass == 'bip-perm':
            graph.check_transitive_ordering(g, ordering)
            pred = bipperm.pair_predicate(g, ordering)
        else:
            graph.check_proper_ordering(g, ordering)
            pred = proper.pair_predicate(g, ordering)
        pair = oracle.find_consecutive_violation(g, ordering, matching, pred)
        ok = pair is None
        if pair is not None:
            witness = "pair=%s" % _pair_str(pair)
    ctx.status_ok()

    if args.format == 'json':
        obj = {'schema': 'v1', 'method': args.method, 'verified': ok,
               'size': len(matching)}
        if witness:
            obj['witness'] = witness
        ctx.emit(_json_line(obj))
    elif ok:
        ctx.emit("verified method=%s size=%d\n" % (args.method, len(matching)))
    else:
        line = "not-uniquely-restricted method=%s size=%d" % (
            args.method, len(matching))
        if witness:
            line += " " + witness
        ctx.emit(line + "\n")
    return EXIT_OK if ok else EXIT_NOT_UR


def cmd_oracle(ctx):
    g, _ordering, _rep = load_graph_input(ctx.args.input)
    ctx.status("brute-force search over %d edges" % g.m)
    matching = oracle.max_urm_bruteforce(g)
    ctx.status_ok()
    ctx.emit(_matching_doc(ctx, 'oracle', matching))
    return EXIT_OK


def cmd_gen(ctx):
    args = ctx.args
    kind = args.kind
    seed = args.seed
    n = args.n
    span = args.span if args.span is not None else max(1, n * 25)
    ctx.status("generating %s" % kind)
    if kind == 'unit-intervals':
        text = fileformat.write_intervals(
            instances.gen_unit_intervals(n, seed, span))
    elif kind == 'intervals':
        text = fileformat.write_intervals(
            instances.gen_intervals(n, seed, span))
    elif kind == 'bip-perm':
        g, ordering = instances.gen_bipperm(args.p, args.q, seed)
        text = fileformat.write_graph(g, ordering)
    elif kind == 'permutation':
        g, ordering = instances.permutation_graph(
            instances.gen_permutation(n, seed))
        text = fileformat.write_graph(g, ordering)
    elif kind == 'family':
        family = instances.gen_family(args.k)
        text = fileformat.write_graph(family.graph)
        if args.matching_out:
            with open(args.matching_out, 'w') as f:
                f.write(fileformat.write_matching(family.matching))
    else:
        text = fileformat.write_nest(instances.gen_nest(n, seed, span))
    ctx.status_ok()
    ctx.emit(text)
    return EXIT_OK


def cmd_demo(ctx):
    fixture = instances.fig1()
    ctx.status("solving the %s fixture" % ctx.args.name)
    solved = proper.solve_proper(fixture.graph, fixture.ordering)
    baseline = instances.consecutive_heuristic_baseline(
        fixture.graph, fixture.ordering)
    ctx.status_ok()
    lines = []
    for label, matching in (('solver', solved),
                            (instances.BASELINE_LABEL, baseline)):
        edges = ' '.join("%d-%d" % (e.a, e.b)
                         for e in matching.sorted_edges())
        lines.append("%s size=%d edges=%s" % (label, len(matching), edges))
    ctx.info("%s: %s", ctx.args.name, instances.FIG1_CAPTION)
    ctx.emit("\n".join(lines) + "\n")
    return EXIT_OK


def _parse_sizes(value):
    try:
        sizes = [int(s) for s in value.split(',') if s.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError("sizes must be integers: %r" % value)
    if any(s < 0 for s in sizes):
        raise argparse.ArgumentTypeError("sizes must be non-negative")
    return sizes


def cmd_bench(ctx):
    args = ctx.args
    ctx.status("loading bench config")
    fp = os.path.join(_BENCH_CONFIGS_DIR, args.bench_config)
    config = bench_config.BenchConfig(fp)
    ctx.status_ok()
    if args.klass is not None:
        config.klass = args.klass
    if args.sizes is not None:
        config.sizes = args.sizes
    if args.workers is not None:
        config.workers = args.workers
    if getattr(args, 'seed_given', False):
        config.seed = args.seed
    if args.verify:
        config.verify = True

    reports = bench.run_schedule(ctx, config)
    if args.format == 'json':
        text = ''.join(_json_line(r.to_dict()) for r in reports)
    else:
        text = ''.join(
            ["schema %s\n" % models.RunReport.SCHEMA] +
            [r.to_text() + '\n' for r in reports])
    ctx.emit(text)
    if args.record:
        ctx.status("recording %d runs" % len(reports))
        db.record_reports(db.get_engine(), reports)
        ctx.status_ok()
    if any(r.verified is False for r in reports):
        return EXIT_NOT_UR
    return EXIT_OK


def _bench_config_names():
    names = []
    if os.path.isdir(_BENCH_CONFIGS_DIR):
        for fn in os.listdir(_BENCH_CONFIGS_DIR):
            fp = os.path.join(_BENCH_CONFIGS_DIR, fn)
            if os.path.isfile(fp) and fn.endswith('.yaml'):
                names.append(fn[0:len(fn) - 5])
    return sorted(names)


class _SeedAction(argparse.Action):
    # Records that --seed was passed so bench only overrides the config then
    def __call__(self, parser, namespace, values, option_string=None):
        setattr(namespace, self.dest, values)
        namespace.seed_given = True


def setup_opts(parser):
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--quiet', action='store_true', default=False,
                        help="Only print critical output.")
    common.add_argument('--seed', type=int, default=0, action=_SeedAction,
                        help="Seed for generated instances.")
    common.add_argument('--out', default=None,
                        help="Write the result to this file instead of "
                             "standard output.")
    common.add_argument('--format', choices=('text', 'json'), default='text',
                        help="Output format.")
    common.set_defaults(seed_given=False)

    subs = parser.add_subparsers(dest='command')
    subs.required = True

    p = subs.add_parser('solve', parents=[common],
                        help="Solve one instance.")
    p.add_argument('--class', dest='klass', choices=CLASSES, required=True,
                   help="Graph class of the input.")
    p.add_argument('--input', required=True,
                   help="Instance file (.graph, .ivg or .nest).")
    p.add_argument('--verify', action='store_true', default=False,
                   help="Check the result; exit 4 when it fails.")
    p.add_argument('--force', action='store_true', default=False,
                   help="Run the interval reduction above its edge bound.")
    p.add_argument('--trust-ordering', action='store_true', default=False,
                   help="Only run the fast checks on a bip-perm ordering.")
    p.set_defaults(func=cmd_solve)

    p = subs.add_parser('verify', parents=[common],
                        help="Check that a matching is uniquely restricted.")
    p.add_argument('--input', required=True,
                   help="Graph file (.graph or .ivg).")
    p.add_argument('--matching', required=True, help="Matching file.")
    p.add_argument('--method', choices=VERIFY_METHODS, default='oracle',
                   help="Verification method.")
    p.add_argument('--class', dest='klass', choices=MATCHING_CLASSES[:2],
                   default='proper-interval',
                   help="Ordering class for the consecutive method.")
    p.set_defaults(func=cmd_verify)

    p = subs.add_parser('oracle', parents=[common],
                        help="Brute-force maximum uniquely restricted "
                             "matching.")
    p.add_argument('--input', required=True,
                   help="Graph file (.graph or .ivg).")
    p.set_defaults(func=cmd_oracle)

    p = subs.add_parser('gen', parents=[common],
                        help="Generate an instance file.")
    p.add_argument('--kind', choices=GEN_KINDS, required=True)
    p.add_argument('--n', type=int, default=10, help="Vertex count.")
    p.add_argument('--k', type=int, default=6, help="Family cycle length.")
    p.add_argument('--p', type=int, default=5, help="Left vertex count.")
    p.add_argument('--q', type=int, default=5, help="Right vertex count.")
    p.add_argument('--span', type=int, default=None,
                   help="Coordinate range for interval and nest kinds.")
    p.add_argument('--matching-out', default=None,
                   help="For the family kind, also write its matching here.")
    p.set_defaults(func=cmd_gen)

    p = subs.add_parser('demo', parents=[common],
                        help="Solver against the consecutive-edge baseline.")
    p.add_argument('name', choices=('fig1',))
    p.set_defaults(func=cmd_demo)

    p = subs.add_parser('bench', parents=[common],
                        help="Run a benchmark schedule.")
    p.add_argument('--bench-config', choices=_bench_config_names(),
                   default=_DEFAULT_BENCH_CONFIG,
                   help="Bench configuration to use.")
    p.add_argument('--class', dest='klass', choices=CLASSES, default=None,
                   help="Override the configured class.")
    p.add_argument('--sizes', type=_parse_sizes, default=None,
                   help="Comma separated sizes overriding the schedule.")
    p.add_argument('--workers', type=int, default=None,
                   help="Worker processes.")
    p.add_argument('--verify', action='store_true', default=False,
                   help="Verify every result.")
    p.add_argument('--record', action='store_true', default=False,
                   help="Append the reports to the bench database.")
    p.set_defaults(func=cmd_bench)


def main(argv=None, stdout=None, stderr=None):
    p = argparse.ArgumentParser(
        prog='urm',
        description='Maximum uniquely restricted matchings.')
    setup_opts(p)
    args = p.parse_args(argv)
    ctx = RunContext(args, stdout=stdout, stderr=stderr)
    try:
        return args.func(ctx)
    except (exception.ParseError, exception.ConfigError) as err:
        ctx.status_fail(err)
        return EXIT_PARSE
    except exception.ValidationError as err:
        ctx.status_fail(err)
        return EXIT_INVALID
    except exception.InternalAssertion as err:
        ctx.status_fail(err)
        return EXIT_INTERNAL


if __name__ == '__main__':
    sys.exit(main())
