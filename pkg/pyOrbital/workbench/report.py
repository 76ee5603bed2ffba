import json
import os
import warnings

import pandas as pd
import pyexcel as pxl

from .config import results_dir
from .serialize import canonical_json, digest, to_payload


LEDGER_FORMATS = ('csv', 'ods')


class VerificationReport():
    r"""Append-only record of the checks of a verification suite.

    Parameters
    ----------
    suite: str
        Suite identifier.
    seed: int
        Seed of the randomized checks.
    config: dict, optional
        JSON form of the WorkbenchConfig the suite ran with.
        Default is None.

    Notes
    -----
    The canonical JSON form leaves out the runtimes so that re-running a
    suite with identical inputs reproduces identical bytes; runtimes are
    kept in the summary and in the spreadsheet ledger.
    """

    def __init__(self, suite, seed, config=None):

        self.__suite = suite
        self.__seed = int(seed)
        self.__config = config
        self.__checks = []

    @property
    def suite(self):
        return self.__suite

    @property
    def seed(self):
        return self.__seed

    @property
    def checks(self):
        return list(self.__checks)

    @property
    def passed(self):
        r"""True when every check passed (vacuously for an empty suite)."""
        return all(c['verdict'] == 'pass' for c in self.__checks)

    @property
    def failures(self):
        return [c['name'] for c in self.__checks if c['verdict'] != 'pass']

    def add_check(self, name, inputs, outputs, passed, runtime=0.0):
        r"""Append one check.

        Parameters
        ----------
        name: str
        inputs: object
            Anything to_payload can serialize; only its digest is stored.
        outputs: object
            Route outputs (LaurentRationals, rationals, dicts...).
        passed: bool
        runtime: float, optional
            Wall time in seconds.
            Default is 0.
        """
        if any(c['name'] == name for c in self.__checks):
            raise ValueError('A check named `{}` is already recorded in the '
                             'suite {}.'.format(name, self.__suite))
        check = {
            'name': name,
            'inputs_digest': digest(to_payload(inputs)),
            'outputs': to_payload(outputs),
            'verdict': 'pass' if passed else 'fail',
            'runtime': float(runtime)
        }
        self.__checks.append(check)
        return check

    def extend(self, checks):
        for c in checks:
            if any(o['name'] == c['name'] for o in self.__checks):
                raise ValueError('A check named `{}` is already recorded.'
                                 .format(c['name']))
            self.__checks.append(dict(c))

    def summary(self):
        r"""pandas DataFrame indexed by check name."""
        df = pd.DataFrame(
            [{'check': c['name'], 'verdict': c['verdict'],
              'runtime': c['runtime'], 'inputs_digest': c['inputs_digest']}
             for c in self.__checks],
            columns=['check', 'verdict', 'runtime', 'inputs_digest']
        )
        return df.set_index('check')

    def inputs_digest(self):
        r"""Digest of the suite, the seed, the configuration and every
        check input."""
        return digest({
            'suite': self.__suite,
            'seed': self.__seed,
            'config': self.__config,
            'checks': [[c['name'], c['inputs_digest']] for c in self.__checks]
        })

    def to_json(self):
        return {
            'suite': self.__suite,
            'seed': self.__seed,
            'config': self.__config,
            'passed': self.passed,
            'checks': [{k: v for k, v in c.items() if k != 'runtime'}
                       for c in self.__checks]
        }

    def save(self, directory=None, ledger=None):
        r"""Persist the report as JSON, content-addressed by its inputs.

        Parameters
        ----------
        directory: str, optional
            Default is the results directory (PYORBITAL_RESULTS_DIR).
        ledger: str, optional
            If set to 'csv' or 'ods', the summary is also exported as a
            spreadsheet next to the JSON file.
            Default is None.

        Returns
        -------
        fname: str
            Path of the JSON report.

        Notes
        -----
        An existing report is never overwritten. If the stored bytes
        differ from the new ones, a UserWarning is raised and the new
        report gets the next free suffix.
        """
        if ledger is not None and ledger not in LEDGER_FORMATS:
            raise ValueError('Unsupported ledger format `{}`. Should be one '
                             'of {}.'.format(ledger, ', '.join(LEDGER_FORMATS)))
        directory = results_dir() if directory is None else directory
        os.makedirs(directory, exist_ok=True)
        text = canonical_json(self.to_json())
        stem = os.path.join(directory, '{}-{}'.format(
            self.__suite, self.inputs_digest()[:16]))
        fname = stem + '.json'
        k = 0
        while os.path.exists(fname):
            with open(fname, 'r', encoding='utf-8') as fp:
                if fp.read() == text:
                    break
            k += 1
            if k == 1:
                warnings.warn('The stored report {} differs from the new run '
                              'with identical inputs.'.format(fname),
                              UserWarning)
            fname = '{}.{}.json'.format(stem, k)
        else:
            with open(fname, 'w', encoding='utf-8') as fp:
                fp.write(text)
        if ledger is not None:
            summary = self.summary().reset_index()
            pxl.save_as(
                array=[list(summary.columns)] + summary.values.tolist(),
                dest_file_name=fname[:-len('.json')] + '.' + ledger
            )
        return fname

    @classmethod
    def from_json(cls, payload):
        report = cls(payload['suite'], payload['seed'], payload.get('config'))
        report.extend(dict(c, runtime=0.0) for c in payload['checks'])
        return report

    @classmethod
    def from_file(cls, fname):
        with open(fname, 'r', encoding='utf-8') as fp:
            return cls.from_json(json.load(fp))


def read_ledger(fname):
    r"""Spreadsheet ledger (.csv or .ods) as a pandas DataFrame indexed by
    check name."""
    array = pxl.get_array(file_name=fname)
    df = pd.DataFrame(array[1:], columns=array[0])
    return df.set_index('check')
