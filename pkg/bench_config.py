# A bench config describes one benchmark schedule: which solver to time, on
# which instance sizes, and how the instances are generated

import os

import yaml

import exception

CLASSES = ('proper-interval', 'bip-perm', 'interval', 'nest-sis')

_DEFAULTS = dict(
    seed=0,
    repeats=1,
    workers=1,
    density=8,
    verify=False,
)


class BenchConfig(object):
    def __init__(self, fp):
        """Loads the bench configuration from a supplied filepath to a YAML
        file.

        :param fp: path to the bench config YAML file; '.yaml' is appended
                   when missing
        """
        if not fp.endswith('.yaml'):
            fp = fp + '.yaml'
        if not os.path.exists(fp):
            raise exception.ConfigError(fp, "File does not exist.")

        with open(fp, 'rb') as f:
            try:
                config_dict = yaml.safe_load(f)
            except yaml.YAMLError as err:
                raise exception.ConfigError(
                    fp, "Problem parsing file: %s." % err)
        if not isinstance(config_dict, dict):
            raise exception.ConfigError(fp, "Expected a mapping at top level.")
        self.path = fp
        self._load(config_dict)

    def _load(self, config_dict):
        klass = config_dict.get('class')
        if klass not in CLASSES:
            raise exception.ConfigError(
                self.path, "class must be one of %s, got %r." % (
                    ', '.join(CLASSES), klass))
        self.klass = klass
        self.sizes = self._sizes(config_dict.get('sizes', []))
        for key, default in _DEFAULTS.items():
            setattr(self, key, config_dict.get(key, default))
        for key in ('repeats', 'workers', 'density'):
            value = getattr(self, key)
            if not isinstance(value, int) or value < 1:
                raise exception.ConfigError(
                    self.path, "%s must be a positive integer." % key)
        self.verify = bool(self.verify)

    def _sizes(self, sizes):
        if not isinstance(sizes, list):
            raise exception.ConfigError(self.path, "sizes must be a list.")
        for size in sizes:
            if not isinstance(size, int) or size < 0:
                raise exception.ConfigError(
                    self.path, "sizes must be non-negative integers, "
                               "got %r." % (size,))
        return sizes

    def __repr__(self):
        return "BenchConfig(class=%s,sizes=%s,seed=%d)" % (
            self.klass, self.sizes, self.seed)
