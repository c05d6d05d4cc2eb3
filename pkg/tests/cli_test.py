#  This source code is licensed under the BSD-style license found in the
#  LICENSE file in the root directory of this source tree.

"""
Tests for the fschar command line.
"""

import io
import json
import os
import shutil
import tempfile
import unittest

from unittest import mock

from fschar import fermionic
from fschar.admissible import char_configs
from fschar.cli import EXIT_DISAGREE, EXIT_OK, EXIT_USAGE, main
from fschar.fermionic import LinearForm

ORIGINAL_BUILD_L = fermionic.build_L


def corrupt_build_L(weight):  # pylint: disable=invalid-name
    """Off by one in the first entry of the linear form."""
    data = ORIGINAL_BUILD_L(weight).data()
    data[0] += 1
    return LinearForm(weight.level, data)


class BaseTestCli(unittest.TestCase):
    """
    Run main() against string buffers.
    """

    def setUp(self):
        self.saved_log = os.environ.pop('FSCHAR_LOG', None)

    def tearDown(self):
        os.environ.pop('FSCHAR_LOG', None)
        if self.saved_log is not None:
            os.environ['FSCHAR_LOG'] = self.saved_log

    @staticmethod
    def run_main(*argv):
        """exit code, stdout text, stderr text"""
        out = io.StringIO()
        err = io.StringIO()
        code = main(list(argv), stdout=out, stderr=err)
        return code, out.getvalue(), err.getvalue()


class TestSeriesCommands(BaseTestCli):
    """
    configs, qp and fermionic.
    """

    def test_configs_json(self):
        """canonical json of the series"""
        code, out, err = self.run_main('configs', '--weight', '1,0,0', '--cutoff', '1')

        self.assertEqual(code, EXIT_OK)
        self.assertEqual(err, '')
        self.assertEqual(out, '{"cutoff":1,"terms":['
                              '{"c":"1","d":0,"n1":0,"n2":0},'
                              '{"c":"1","d":1,"n1":0,"n2":1},'
                              '{"c":"1","d":1,"n1":1,"n2":0}]}\n')

    def test_configs_csv(self):
        """header then rows in (d, n1, n2) order"""
        code, out, _ = self.run_main('configs', '--weight', '1,0,0', '--cutoff', '1',
                                     '--format', 'csv')

        self.assertEqual(code, EXIT_OK)
        self.assertEqual(out, 'n1,n2,d,coeff\n0,0,0,1\n0,1,1,1\n1,0,1,1\n')

    def test_configs_list(self):
        """one configuration per line"""
        code, out, _ = self.run_main('configs', '--weight', '1,0,0', '--cutoff', '1', '--list')

        self.assertEqual(code, EXIT_OK)
        self.assertEqual([json.loads(i) for i in out.splitlines()],
                         [dict(entries=[]), dict(entries=[0, 1]), dict(entries=[1])])

    def test_configs_ell(self):
        """graded counts for other ranks"""
        code, out, _ = self.run_main('configs', '--weight', '1,0,0,0', '--ell', '3',
                                     '--cutoff', '1')

        self.assertEqual(code, EXIT_OK)
        data = json.loads(out)
        self.assertEqual(data['ell'], 3)
        self.assertEqual(data['counts'], [
            dict(charges=[0, 0, 0], d=0, c='1'),
            dict(charges=[0, 0, 1], d=1, c='1'),
            dict(charges=[0, 1, 0], d=1, c='1'),
            dict(charges=[1, 0, 0], d=1, c='1'),
        ])

        code, out, _ = self.run_main('configs', '--weight', '1,0,0,0', '--ell', '3',
                                     '--cutoff', '1', '--format', 'csv')
        self.assertEqual(out.splitlines()[0], 'c1,c2,c3,d,coeff')

    def test_qp_list(self):
        """basis monomials as json lines"""
        code, out, _ = self.run_main('qp', '--weight', '1,0,0', '--cutoff', '1', '--list')

        self.assertEqual(code, EXIT_OK)
        lines = [json.loads(i) for i in out.splitlines()]
        self.assertEqual(len(lines), 3)
        self.assertIn(dict(gamma1=[dict(n=1, m=-1)], gamma2=[]), lines)

    def test_same_bytes(self):
        """every series command prints the same character"""
        expected = json.loads(self.run_main('configs', '--weight', '0,1,1', '--cutoff', '9')[1])
        self.assertEqual(expected, char_configs('0,1,1', 9).to_json())

        for argv in (['qp'], ['fermionic'], ['fermionic', '--form', 'n'],
                     ['fermionic', '--form', 'georgiev']):
            _, out, _ = self.run_main(*(argv + ['--weight', '0,1,1', '--cutoff', '9']))
            self.assertEqual(json.loads(out), expected)

    def test_deterministic(self):
        """reruns and worker pools give identical output"""
        argv = ['fermionic', '--form', 'm', '--weight', '1,2,0', '--cutoff', '10']
        first = self.run_main(*argv)[1]
        self.assertEqual(self.run_main(*argv)[1], first)
        self.assertEqual(self.run_main(*(argv + ['--jobs', '2']))[1], first)

        argv = ['verify', '--weight', '0,2,1', '--cutoff', '8']
        first = self.run_main(*argv)[1]
        self.assertEqual(self.run_main(*(argv + ['--jobs', '3']))[1], first)

    def test_cache_dir(self):
        """the flag turns the cache on"""
        tmp = tempfile.mkdtemp(prefix='fschar-cli-')
        try:
            argv = ['qp', '--weight', '2,0,0', '--cutoff', '6', '--cache-dir', tmp]
            first = self.run_main(*argv)[1]
            self.assertTrue(os.path.exists(os.path.join(tmp, 'qp-2_0_0.json')))
            self.assertEqual(self.run_main(*argv)[1], first)
        finally:
            shutil.rmtree(tmp)

    def test_cache_dir_is_file(self):
        """a cache path that is a plain file is a usage error"""
        handle, path = tempfile.mkstemp(prefix='fschar-cli-')
        os.close(handle)
        try:
            for command in ('qp', 'verify'):
                code, out, err = self.run_main(command, '--weight', '2,0,0', '--cutoff', '4',
                                               '--cache-dir', path)
                self.assertEqual(code, EXIT_USAGE, command)
                self.assertEqual(out, '', command)
                self.assertTrue(err.startswith('fschar: '), command)
                self.assertIn('not a directory', err)
        finally:
            os.remove(path)


class TestOtherCommands(BaseTestCli):
    """
    verify, matrices and det-check.
    """

    def test_verify(self):
        """agreement exits 0"""
        code, out, err = self.run_main('verify', '--weight', '2,0,0', '--cutoff', '8')

        self.assertEqual(code, EXIT_OK)
        self.assertEqual(err, '')
        report = json.loads(out)
        self.assertTrue(report['agree'])
        self.assertNotIn('timings', report)

    def test_verify_verbose(self):
        """timings go to stderr only"""
        code, out, err = self.run_main('verify', '--weight', '1,0,0', '--cutoff', '4',
                                       '--verbose')

        self.assertEqual(code, EXIT_OK)
        self.assertEqual(len(err.splitlines()), 5)
        self.assertEqual(out, self.run_main('verify', '--weight', '1,0,0', '--cutoff', '4')[1])

    def test_verbose_restores_env(self):
        """--verbose leaves FSCHAR_LOG as it found it"""
        self.run_main('matrices', '--weight', '1,0,0', '--verbose')
        self.assertNotIn('FSCHAR_LOG', os.environ)

        os.environ['FSCHAR_LOG'] = 'keep'
        self.run_main('matrices', '--weight', '1,0,0', '--verbose')
        self.assertEqual(os.environ['FSCHAR_LOG'], 'keep')

        # usage errors too
        self.run_main('bogus', '--verbose')
        self.assertEqual(os.environ['FSCHAR_LOG'], 'keep')

    def test_verify_disagree(self):
        """corruption exits 1"""
        with mock.patch('fschar.fermionic.build_L', side_effect=corrupt_build_L):
            code, out, _ = self.run_main('verify', '--weight', '2,0,0', '--cutoff', '5')

        self.assertEqual(code, EXIT_DISAGREE)
        self.assertFalse(json.loads(out)['agree'])

    def test_matrices(self):
        """forms as json"""
        code, out, _ = self.run_main('matrices', '--weight', '0,0,2')

        self.assertEqual(code, EXIT_OK)
        data = json.loads(out)
        self.assertEqual(data['L'], [1, 2, 1, 2])
        self.assertEqual(data['Q'], [[1, 1, 0, 1], [1, 2, 1, 2], [0, 0, 1, 1], [0, 0, 1, 2]])

    def test_det_check(self):
        """the determinant grid"""
        code, out, _ = self.run_main('det-check', '--p-range=-3,3', '--r-max', '4')

        self.assertEqual(code, EXIT_OK)
        self.assertEqual(json.loads(out), dict(p_range=[-3, 3], r_max=4, checked=35,
                                               failures=[]))

    def test_usage_errors(self):
        """bad invocations exit 2 with a message on stderr"""
        bad = [
            [],
            ['bogus'],
            ['configs'],
            ['configs', '--weight', '2,x,0'],
            ['configs', '--weight', '2,0,0', '--cutoff=-1'],
            ['configs', '--weight', '2,0,0', '--ell', '0'],
            ['configs', '--weight', '2,0,0', '--ell', '3'],
            ['qp', '--weight', '1,0,1'],
            ['fermionic', '--weight', '2,0,0', '--form', 'x'],
            ['verify', '--weight', '1,0,1'],
            ['verify', '--weight', '2,0,0', '--jobs', '0'],
            ['verify', '--weight', '2,0,0', '--format', 'csv'],
            ['configs', '--weight', '1,0,0', '--list', '--format', 'csv'],
            ['qp', '--weight', '1,0,0', '--list', '--format', 'csv'],
            ['det-check', '--p-range=3,-3'],
            ['det-check', '--p-range', 'a,b'],
        ]

        for argv in bad:
            code, out, err = self.run_main(*argv)
            self.assertEqual(code, EXIT_USAGE, argv)
            self.assertEqual(out, '', argv)
            self.assertTrue(err.startswith('fschar: '), argv)


if __name__ == '__main__':
    unittest.main()
