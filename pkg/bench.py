# Runs benchmark schedules: generates a seeded instance per (size, repeat),
# times the solver for the configured class and produces RunReports

import collections
from concurrent import futures
import time

import bipperm
import graph
import instances
import models
import nest
import oracle
import proper
import reduction

# Unit length of generated intervals
_LENGTH = 100

Job = collections.namedtuple(
    'Job', ['index', 'klass', 'size', 'seed', 'density', 'verify'])


def _span(size, density):
    # Chosen so a vertex meets about density others on average
    return max(1, size * 2 * _LENGTH // density)


def _verify_matching(g, matching):
    if not oracle.is_ur_c4free(g, matching):
        return False
    if len(matching.vertices) <= oracle.MAX_ORACLE_VERTICES:
        return oracle.is_ur_oracle(g, matching)
    return True


def run_one(job):
    """Generates the instance for job, solves it and returns a RunReport."""
    size, seed, span = job.size, job.seed, _span(job.size, job.density)
    verified = None
    if job.klass == 'proper-interval':
        rep = instances.gen_unit_intervals(size, seed, span, length=_LENGTH)
        g = graph.intersection_graph(rep)
        ordering = graph.ordering_from_proper_rep(rep)
        start = time.perf_counter()
        result = proper.solve_proper(g, ordering)
        elapsed = time.perf_counter() - start
        if job.verify:
            verified = _verify_matching(g, result)
        result_size = len(result)
    elif job.klass == 'bip-perm':
        if size < 2:
            g = models.UndirectedGraph.from_edges(size, [])
            ordering = models.VertexOrdering.identity(size)
        else:
            p = size // 2
            g, ordering = instances.gen_bipperm(
                p, size - p, seed, validate=False)
        start = time.perf_counter()
        result = bipperm.solve_bipperm(g, ordering, trust_ordering=True)
        elapsed = time.perf_counter() - start
        if job.verify:
            verified = _verify_matching(g, result)
        result_size = len(result)
    elif job.klass == 'interval':
        rep = instances.gen_intervals(size, seed, span, max_length=_LENGTH)
        start = time.perf_counter()
        result = reduction.solve_interval_urm(rep, force=True)
        elapsed = time.perf_counter() - start
        if job.verify:
            verified = _verify_matching(graph.intersection_graph(rep), result)
        result_size = len(result)
    else:
        rep = instances.gen_nest(size, seed, span, max_length=2 * _LENGTH)
        start = time.perf_counter()
        result = nest.max_sis(rep)
        elapsed = time.perf_counter() - start
        if job.verify:
            verified = nest.is_strong_independent(rep, result)
        result_size = len(result)
    instance = "%s-n%d-s%d" % (job.klass, size, seed)
    return models.RunReport(instance, job.klass, size, result_size, elapsed,
                            verified=verified)


def schedule(config):
    """Returns the list of Jobs for a BenchConfig in schedule order."""
    jobs = []
    for size in config.sizes:
        for r in range(config.repeats):
            jobs.append(Job(len(jobs), config.klass, size, config.seed + r,
                            config.density, config.verify))
    return jobs


def run_schedule(ctx, config):
    """Runs every job of config and returns the RunReports in schedule order,
    whatever order the workers finish in.
    """
    jobs = schedule(config)
    ctx.info("running %d jobs for class %s on %d worker(s)",
             len(jobs), config.klass, config.workers)
    reports = [None] * len(jobs)
    if config.workers <= 1 or len(jobs) <= 1:
        for job in jobs:
            ctx.status("solving %s n=%d seed=%d" % (
                job.klass, job.size, job.seed))
            reports[job.index] = run_one(job)
            ctx.status_ok()
        return reports

    with futures.ProcessPoolExecutor(max_workers=config.workers) as pool:
        pending = {pool.submit(run_one, job): job for job in jobs}
        for fut in futures.as_completed(pending):
            job = pending[fut]
            reports[job.index] = fut.result()
            ctx.info("finished %s n=%d seed=%d", job.klass, job.size,
                     job.seed)
    return reports
