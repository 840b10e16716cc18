import argparse
import io
import json
import os

import pytest

import db
import instances
import run


def _main(*argv):
    stdout, stderr = io.StringIO(), io.StringIO()
    code = run.main(list(argv), stdout=stdout, stderr=stderr)
    return code, stdout.getvalue(), stderr.getvalue()


def test_solve_fig1_graph(fixtures_dir):
    code, out, err = _main('solve', '--class', 'proper-interval', '--input',
                           os.path.join(fixtures_dir, 'fig1.graph'))
    assert code == run.EXIT_OK
    assert out == "size 3\n0 1\n2 4\n5 6\n"
    # Progress stays off stdout
    assert 'action: solving proper-interval' in err


def test_solve_fig1_intervals(fixtures_dir):
    code, out, _err = _main('solve', '--quiet', '--class', 'proper-interval',
                            '--input', os.path.join(fixtures_dir, 'fig1.ivg'))
    assert code == run.EXIT_OK
    assert out == "size 3\n0 1\n2 4\n5 6\n"


def test_solve_json(fixtures_dir):
    code, out, _err = _main('solve', '--quiet', '--format', 'json',
                            '--verify', '--class', 'proper-interval',
                            '--input',
                            os.path.join(fixtures_dir, 'fig1.graph'))
    assert code == run.EXIT_OK
    assert json.loads(out) == {
        'schema': 'v1', 'class': 'proper-interval', 'size': 3,
        'edges': [[0, 1], [2, 4], [5, 6]], 'verified': True,
    }


def test_solve_bipperm_fig2(fixtures_dir):
    code, out, _err = _main('solve', '--quiet', '--class', 'bip-perm',
                            '--input',
                            os.path.join(fixtures_dir, 'fig2.graph'))
    assert code == run.EXIT_OK
    assert out == "size 2\n0 1\n3 6\n"


def test_solve_interval_class(fixtures_dir):
    code, out, _err = _main('solve', '--quiet', '--verify', '--class',
                            'interval', '--input',
                            os.path.join(fixtures_dir, 'fig1.ivg'))
    assert code == run.EXIT_OK
    assert out.startswith("size 3\n")


def test_solve_interval_needs_intervals(fixtures_dir):
    code, out, err = _main('solve', '--quiet', '--class', 'interval',
                           '--input',
                           os.path.join(fixtures_dir, 'fig1.graph'))
    assert code == run.EXIT_INVALID
    assert out == ''
    assert 'needs a .ivg' in err


@pytest.mark.parametrize('klass', ['proper-interval', 'interval'])
def test_solve_edgeless(fixtures_dir, klass):
    code, out, _err = _main('solve', '--quiet', '--class', klass,
                            '--input', os.path.join(fixtures_dir,
                                                    'edgeless.ivg'))
    assert code == run.EXIT_OK
    assert out == "size 0\n"


def test_solve_nest(fixtures_dir):
    code, out, _err = _main('solve', '--quiet', '--verify', '--class',
                            'nest-sis', '--input',
                            os.path.join(fixtures_dir, 'single.nest'))
    assert code == run.EXIT_OK
    assert out == "size 1\n0\n"


def test_solve_missing_order_line(fixtures_dir):
    code, _out, err = _main('solve', '--quiet', '--class', 'proper-interval',
                            '--input', os.path.join(fixtures_dir, 'c4.graph'))
    assert code == run.EXIT_INVALID
    assert "order:" in err


def test_solve_missing_file(tmp_path):
    code, _out, err = _main('solve', '--quiet', '--class', 'proper-interval',
                            '--input', str(tmp_path / 'absent.graph'))
    assert code == run.EXIT_PARSE
    assert 'does not exist' in err


def test_solve_bad_extension(tmp_path):
    fp = tmp_path / 'g.txt'
    fp.write_text("2 1\n0 1\n")
    code, _out, err = _main('solve', '--quiet', '--class', 'proper-interval',
                            '--input', str(fp))
    assert code == run.EXIT_PARSE
    assert 'unknown file extension' in err


def test_solve_not_proper(tmp_path):
    fp = tmp_path / 'c4.graph'
    fp.write_text("4 4\norder: 0 1 2 3\n0 1\n1 2\n2 3\n0 3\n")
    code, _out, err = _main('solve', '--quiet', '--class', 'proper-interval',
                            '--input', str(fp))
    assert code == run.EXIT_INVALID
    assert 'not a proper vertex ordering' in err


def test_solve_writes_out_file(fixtures_dir, tmp_path):
    fp = tmp_path / 'result.matching'
    code, out, _err = _main('solve', '--quiet', '--class', 'proper-interval',
                            '--out', str(fp), '--input',
                            os.path.join(fixtures_dir, 'fig1.graph'))
    assert code == run.EXIT_OK
    assert out == ''
    assert fp.read_text() == "size 3\n0 1\n2 4\n5 6\n"


def test_verify_oracle_c4(fixtures_dir):
    code, out, _err = _main('verify', '--quiet',
                            '--input', os.path.join(fixtures_dir, 'c4.graph'),
                            '--matching',
                            os.path.join(fixtures_dir, 'c4.matching'))
    assert code == run.EXIT_NOT_UR
    assert out == ("not-uniquely-restricted method=oracle size=2 "
                   "cycle=0,1,2,3\n")


def test_verify_pairwise_c4(fixtures_dir):
    code, out, _err = _main('verify', '--quiet', '--method', 'pairwise',
                            '--input', os.path.join(fixtures_dir, 'c4.graph'),
                            '--matching',
                            os.path.join(fixtures_dir, 'c4.matching'))
    assert code == run.EXIT_NOT_UR
    assert out == ("not-uniquely-restricted method=pairwise size=2 "
                   "pair=(0,1)+(2,3)\n")


@pytest.mark.parametrize('method', ['oracle', 'pairwise', 'consecutive'])
def test_verify_fig1(fixtures_dir, method):
    code, out, _err = _main('verify', '--quiet', '--method', method,
                            '--input',
                            os.path.join(fixtures_dir, 'fig1.graph'),
                            '--matching',
                            os.path.join(fixtures_dir, 'fig1.matching'))
    assert code == run.EXIT_OK
    assert out == "verified method=%s size=3\n" % method


def test_verify_consecutive_needs_ordering(fixtures_dir):
    code, _out, _err = _main('verify', '--quiet', '--method', 'consecutive',
                             '--input',
                             os.path.join(fixtures_dir, 'c4.graph'),
                             '--matching',
                             os.path.join(fixtures_dir, 'c4.matching'))
    assert code == run.EXIT_INVALID


def test_verify_json(fixtures_dir):
    code, out, _err = _main('verify', '--quiet', '--format', 'json',
                            '--input', os.path.join(fixtures_dir, 'c4.graph'),
                            '--matching',
                            os.path.join(fixtures_dir, 'c4.matching'))
    assert code == run.EXIT_NOT_UR
    assert json.loads(out) == {
        'schema': 'v1', 'method': 'oracle', 'verified': False, 'size': 2,
        'witness': 'cycle=0,1,2,3',
    }


def test_verify_rejects_non_matching(fixtures_dir, tmp_path):
    fp = tmp_path / 'bad.matching'
    fp.write_text("size 2\n0 1\n1 2\n")
    code, _out, _err = _main('verify', '--quiet',
                             '--input', os.path.join(fixtures_dir, 'c4.graph'),
                             '--matching', str(fp))
    assert code == run.EXIT_INVALID


def test_oracle_command(fixtures_dir):
    code, out, _err = _main('oracle', '--quiet', '--input',
                            os.path.join(fixtures_dir, 'fig1.graph'))
    assert code == run.EXIT_OK
    assert out.startswith("size 3\n")


def test_gen_is_deterministic():
    first = _main('gen', '--quiet', '--kind', 'unit-intervals', '--n', '12',
                  '--seed', '4')
    second = _main('gen', '--quiet', '--kind', 'unit-intervals', '--n', '12',
                   '--seed', '4')
    assert first[0] == run.EXIT_OK
    assert first[1] == second[1]
    assert first[1].splitlines()[0] == '12'


@pytest.mark.parametrize('kind', ['intervals', 'bip-perm', 'permutation',
                                  'nest'])
def test_gen_kinds(kind):
    code, out, _err = _main('gen', '--quiet', '--kind', kind, '--n', '6')
    assert code == run.EXIT_OK
    assert out


def test_gen_family_with_matching(tmp_path):
    graph_fp = tmp_path / 'family.graph'
    matching_fp = tmp_path / 'family.matching'
    code, out, _err = _main('gen', '--quiet', '--kind', 'family', '--k', '6',
                            '--out', str(graph_fp),
                            '--matching-out', str(matching_fp))
    assert code == run.EXIT_OK
    assert out == ''
    assert graph_fp.read_text().startswith("6 8\n")
    assert matching_fp.read_text() == "size 3\n0 1\n2 4\n3 5\n"

    code, out, _err = _main('verify', '--quiet', '--input', str(graph_fp),
                            '--matching', str(matching_fp))
    assert code == run.EXIT_NOT_UR


def test_gen_family_bad_size():
    code, _out, _err = _main('gen', '--quiet', '--kind', 'family', '--k', '5')
    assert code == run.EXIT_INVALID


def test_demo_fig1():
    code, out, _err = _main('demo', '--quiet', 'fig1')
    assert code == run.EXIT_OK
    assert out == ("solver size=3 edges=0-1 2-4 5-6\n"
                   "baseline-per-caption size=2 edges=0-1 3-4\n")


def test_demo_prints_caption_on_stderr():
    code, out, err = _main('demo', 'fig1')
    assert code == run.EXIT_OK
    assert out == ("solver size=3 edges=0-1 2-4 5-6\n"
                   "baseline-per-caption size=2 edges=0-1 3-4\n")
    assert "info: fig1: %s\n" % instances.FIG1_CAPTION in err


def _solve_then_verify(tmp_path, klass, input_path):
    fp = tmp_path / ('%s.matching' % klass)
    code, out, _err = _main('solve', '--quiet', '--class', klass,
                            '--out', str(fp), '--input', input_path)
    assert code == run.EXIT_OK
    assert out == ''
    code, out, _err = _main('verify', '--quiet', '--method', 'oracle',
                            '--input', input_path, '--matching', str(fp))
    assert code == run.EXIT_OK, out
    return out


@pytest.mark.parametrize('klass,name', [
    ('proper-interval', 'fig1.graph'),
    ('proper-interval', 'fig1.ivg'),
    ('bip-perm', 'fig2.graph'),
    ('interval', 'fig1.ivg'),
])
def test_solved_fixtures_reverify(fixtures_dir, tmp_path, klass, name):
    out = _solve_then_verify(tmp_path, klass,
                             os.path.join(fixtures_dir, name))
    assert out.startswith("verified method=oracle ")


@pytest.mark.parametrize('seed', range(8))
def test_generated_intervals_reverify(tmp_path, seed):
    ivg = tmp_path / 'gen.ivg'
    code, _out, _err = _main('gen', '--quiet', '--kind', 'unit-intervals',
                             '--n', '9', '--span', '300', '--seed', str(seed),
                             '--out', str(ivg))
    assert code == run.EXIT_OK
    sizes = set()
    for klass in ('proper-interval', 'interval'):
        _solve_then_verify(tmp_path, klass, str(ivg))
        text = (tmp_path / ('%s.matching' % klass)).read_text()
        sizes.add(text.splitlines()[0])
    # Both solvers find a maximum matching, so the sizes agree
    assert len(sizes) == 1


@pytest.mark.parametrize('klass,name', [
    ('proper-interval', 'fig1.graph'),
    ('bip-perm', 'fig2.graph'),
    ('interval', 'fig1.ivg'),
])
def test_solve_output_is_byte_identical(fixtures_dir, klass, name):
    argv = ('solve', '--quiet', '--class', klass, '--input',
            os.path.join(fixtures_dir, name))
    first = _main(*argv)
    second = _main(*argv)
    assert first[0] == run.EXIT_OK
    assert first[1] == second[1]
    assert first[1].encode('utf-8') == second[1].encode('utf-8')


def test_bench_text():
    code, out, _err = _main('bench', '--quiet', '--bench-config',
                            'proper-interval-small', '--sizes', '10,20')
    assert code == run.EXIT_OK
    lines = out.splitlines()
    assert lines[0] == 'schema v1'
    # three repeats per size
    assert len(lines) == 7
    assert lines[1].startswith('instance=proper-interval-n10-s1 ')
    assert all(line.endswith('verified=yes') for line in lines[1:])


def test_bench_json_with_class_override():
    code, out, _err = _main('bench', '--quiet', '--format', 'json',
                            '--bench-config', 'nest-sis', '--workers', '1',
                            '--class', 'bip-perm', '--sizes', '12',
                            '--seed', '5')
    assert code == run.EXIT_OK
    rows = [json.loads(line) for line in out.splitlines()]
    assert [r['instance'] for r in rows] == ['bip-perm-n12-s5',
                                             'bip-perm-n12-s6']
    assert all('verified' not in r for r in rows)


def test_bench_record(tmp_path, monkeypatch):
    uri = 'sqlite:///%s' % (tmp_path / 'bench.db')
    monkeypatch.setenv('URM_BENCH_DB_URI', uri)
    code, _out, _err = _main('bench', '--quiet', '--record',
                             '--bench-config', 'interval-reduction',
                             '--sizes', '6')
    assert code == run.EXIT_OK
    rows = db.list_runs(db.get_engine(uri), klass='interval')
    assert len(rows) == 2
    assert all(row['verified'] is True for row in rows)


def test_bench_rejects_bad_sizes():
    with pytest.raises(SystemExit):
        _main('bench', '--sizes', '1,x')


def test_run_context_routes_results_and_progress(tmp_path):
    stdout, stderr = io.StringIO(), io.StringIO()
    args = argparse.Namespace(quiet=False, out=None)
    ctx = run.RunContext(args, stdout=stdout, stderr=stderr)
    ctx.info("matching size %d", 3)
    ctx.emit("size 0\n")
    assert stdout.getvalue() == "size 0\n"
    assert stderr.getvalue() == "info: matching size 3\n"

    args.out = str(tmp_path / 'result.matching')
    ctx.emit("size 0\n")
    assert (tmp_path / 'result.matching').read_text() == "size 0\n"
    assert stdout.getvalue() == "size 0\n"
    assert not hasattr(ctx, 'out')
