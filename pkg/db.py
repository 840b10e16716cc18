# Store for recorded benchmark runs

import datetime
import os

import sqlalchemy as sa

_DEFAULT_DB_URI = 'sqlite:///urm-bench.db'

_META = sa.MetaData()

bench_runs = sa.Table(
    'bench_runs', _META,
    sa.Column('id', sa.Integer, primary_key=True),
    sa.Column('schema', sa.String(8), nullable=False),
    sa.Column('instance', sa.String(200), nullable=False),
    sa.Column('class', sa.String(32), nullable=False),
    sa.Column('size_param', sa.Integer, nullable=False),
    sa.Column('matching_size', sa.Integer, nullable=False),
    sa.Column('wall_time', sa.Float, nullable=False),
    # NULL when the run was not verified
    sa.Column('verified', sa.Boolean, nullable=True),
    sa.Column('recorded_at', sa.DateTime, nullable=False),
    sa.Index('ix_bench_runs_class_size', 'class', 'size_param'),
)


def get_engine(db_uri=None):
    if db_uri is None:
        db_uri = os.environ.get('URM_BENCH_DB_URI', _DEFAULT_DB_URI)
    return sa.create_engine(db_uri)


def create_tables(engine):
    _META.create_all(engine)


def record_reports(engine, reports):
    """Inserts one bench_runs row per RunReport. Returns the row count."""
    now = datetime.datetime.utcnow()
    rows = []
    for report in reports:
        rows.append({
            'schema': report.SCHEMA,
            'instance': report.instance,
            'class': report.klass,
            'size_param': report.size_param,
            'matching_size': report.matching_size,
            'wall_time': report.wall_time,
            'verified': report.verified,
            'recorded_at': now,
        })
    if not rows:
        return 0
    create_tables(engine)
    with engine.begin() as conn:
        conn.execute(bench_runs.insert(), rows)
    return len(rows)


def list_runs(engine, klass=None):
    """Returns recorded rows as dicts, oldest first."""
    create_tables(engine)
    sel = sa.select(bench_runs).order_by(bench_runs.c.id)
    if klass is not None:
        sel = sel.where(bench_runs.c['class'] == klass)
    with engine.connect() as conn:
        return [dict(row._mapping) for row in conn.execute(sel)]
