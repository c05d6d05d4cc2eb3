#  This source code is licensed under the BSD-style license found in the
#  LICENSE file in the root directory of this source tree.

"""
Command line front end, installed as the fschar console script.

    fschar configs --weight 2,0,0 --cutoff 10
    fschar configs --weight 1,0,0,0 --ell 3 --cutoff 6
    fschar qp --weight 1,1,0 --cutoff 8 --list
    fschar fermionic --form georgiev --weight 0,1,1 --cutoff 20 --format csv
    fschar matrices --weight 0,0,2
    fschar verify --weight 2,0,0 --cutoff 15 --jobs 4
    fschar det-check --p-range=-20,20 --r-max 10

The data (series, listings, reports) goes to stdout, diagnostics to
stderr. Exit codes: 0 success, 1 disagreement, 2 usage error.
"""

import argparse
import os
import sys

from .admissible import Weight, count_admissible, enumerate_admissible
from .bases import LOG_ENV, log_event
from .exceptions import CliException, FscharException
from .fermionic import binom_matrix_det, matrices_json, FORMS
from .io.cache import resolve_cache_dir
from .io.output import FORMATS, Writer
from .quasiparticle import enumerate_basis
from .util import Options
from .verify import METHOD_ORDER, run_characters, verify

EXIT_OK = 0
EXIT_DISAGREE = 1
EXIT_USAGE = 2

FORM_METHODS = {'m': 'fermionic-m', 'n': 'fermionic-n', 'georgiev': 'georgiev'}


class _Parser(argparse.ArgumentParser):
    """Raise instead of exiting so main() owns the exit code. Subparsers
    inherit the class."""

    def error(self, message):
        raise CliException(message)


def _pair(text):
    try:
        low, high = [int(i) for i in text.split(',')]
    except ValueError:
        raise argparse.ArgumentTypeError('expected a,b got {0!r}'.format(text))
    return low, high


def build_parser():
    """
    Returns
    -------
    argparse.ArgumentParser
        The fschar parser with its subcommands.
    """
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--verbose', action='store_true',
                        help='log progress and timings to stderr')

    series = argparse.ArgumentParser(add_help=False, parents=[common])
    series.add_argument('--weight', required=True, help='k0,k1,k2')
    series.add_argument('--cutoff', type=int, default=10, help='inclusive q-degree cutoff')
    series.add_argument('--cache-dir', default=None,
                        help='series cache, overrides $FSCHAR_CACHE_DIR')
    series.add_argument('--jobs', type=int, default=1, help='worker processes')

    # verify always writes a json report
    formatted = argparse.ArgumentParser(add_help=False, parents=[series])
    formatted.add_argument('--format', choices=FORMATS, default=None, dest='fmt',
                           help='json (default) or csv; --list is always json lines')

    parser = _Parser(prog='fschar',
                     description='Characters of Feigin-Stoyanovsky subspaces of '
                                 'level k sl(3) modules.')
    subs = parser.add_subparsers(dest='command')

    cmd = subs.add_parser('configs', parents=[formatted],
                          help='count admissible configurations')
    cmd.add_argument('--ell', type=int, default=2, help='number of colors')
    cmd.add_argument('--list', action='store_true', help='list the configurations')

    cmd = subs.add_parser('qp', parents=[formatted], help='count the quasi-particle basis')
    cmd.add_argument('--list', action='store_true', help='list the basis monomials')

    cmd = subs.add_parser('fermionic', parents=[formatted], help='evaluate a fermionic sum')
    cmd.add_argument('--form', choices=FORMS, default='m')

    subs.add_parser('verify', parents=[series], help='compare every method')

    cmd = subs.add_parser('matrices', parents=[common], help='print Q, L, R, Q\' and L\'')
    cmd.add_argument('--weight', required=True, help='k0,k1,k2')

    cmd = subs.add_parser('det-check', parents=[common],
                          help='check the binomial matrix determinants')
    cmd.add_argument('--p-range', type=_pair, default=(-20, 20), help='a,b inclusive')
    cmd.add_argument('--r-max', type=int, default=10)

    return parser


def _options(args):
    if args.cutoff < 0:
        raise CliException('--cutoff must be >= 0, got {0}'.format(args.cutoff))
    if args.jobs < 1:
        raise CliException('--jobs must be >= 1, got {0}'.format(args.jobs))

    return Options(
        weight=Weight.parse(args.weight),
        cutoff=args.cutoff,
        fmt=_format(args),
        cache_dir=resolve_cache_dir(args.cache_dir),
        jobs=args.jobs,
    )


def _format(args):
    return getattr(args, 'fmt', None) or 'json'


def _check_listing(args):
    if args.list and _format(args) != 'json':
        raise CliException('--list writes json lines, --format {0} does not apply'.format(
            args.fmt))


def _series(method, opts):
    result = run_characters(opts.weight, opts.cutoff, [method], opts)[method]
    if isinstance(result, FscharException):
        raise result
    return result


def _cmd_configs(args, out):
    opts = _options(args)

    if args.ell < 1:
        raise CliException('--ell must be >= 1, got {0}'.format(args.ell))

    _check_listing(args)

    if args.list:
        count = out.write_listing(enumerate_admissible(opts.weight, args.ell, opts.cutoff))
        log_event('cli.configs', 'listed={0}', (count,))
    elif args.ell != 2:
        out.write_counts(opts.weight, args.ell, opts.cutoff,
                         count_admissible(opts.weight, args.ell, opts.cutoff, jobs=opts.jobs))
    else:
        out.write_series(_series('configs', opts))

    return EXIT_OK


def _cmd_qp(args, out):
    opts = _options(args)
    _check_listing(args)

    if args.list:
        count = out.write_listing(enumerate_basis(opts.weight, opts.cutoff))
        log_event('cli.qp', 'listed={0}', (count,))
    else:
        out.write_series(_series('qp', opts))

    return EXIT_OK


def _cmd_fermionic(args, out):
    opts = _options(args)
    out.write_series(_series(FORM_METHODS[args.form], opts))
    return EXIT_OK


def _cmd_verify(args, out, err):
    opts = _options(args)
    report = verify(opts.weight, opts.cutoff, METHOD_ORDER, opts)

    out.write_json(report.to_json())

    if args.verbose:
        for line in report.timing_lines():
            err.write('{0}\n'.format(line))

    return report.exit_code()


def _cmd_matrices(args, out):
    out.write_json(matrices_json(Weight.parse(args.weight)))
    return EXIT_OK


def _cmd_det_check(args, out):
    low, high = args.p_range

    if low > high or args.r_max < 0:
        raise CliException('need a <= b and --r-max >= 0, got {0} {1}'.format(
            args.p_range, args.r_max))

    failures = list()
    checked = 0

    for p in range(low, high + 1):
        for r in range(args.r_max + 1):
            det = binom_matrix_det(p, r)
            checked += 1
            if det != 1:
                failures.append(dict(p=p, r=r, det=str(det)))

    out.write_json(dict(p_range=[low, high], r_max=args.r_max, checked=checked,
                        failures=failures))

    return EXIT_OK if not failures else EXIT_DISAGREE


def main(argv=None, stdout=None, stderr=None):
    """
    Run one command.

    Parameters
    ----------
    argv : list, optional
        Arguments without the program name; sys.argv[1:] by default.
    stdout : file, optional
        Data stream.
    stderr : file, optional
        Diagnostic stream.

    Returns
    -------
    int
        Exit code.
    """
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    saved_log = os.environ.get(LOG_ENV)

    try:
        args = build_parser().parse_args(argv)

        if args.command is None:
            raise CliException('a command is required')

        if args.verbose:
            os.environ[LOG_ENV] = '1'

        out = Writer(stdout, _format(args))

        if args.command == 'configs':
            return _cmd_configs(args, out)
        if args.command == 'qp':
            return _cmd_qp(args, out)
        if args.command == 'fermionic':
            return _cmd_fermionic(args, out)
        if args.command == 'verify':
            return _cmd_verify(args, out, stderr)
        if args.command == 'matrices':
            return _cmd_matrices(args, out)
        return _cmd_det_check(args, out)

    except FscharException as err:
        stderr.write('fschar: {0}\n'.format(err.value))
        return EXIT_USAGE

    finally:
        if saved_log is None:
            os.environ.pop(LOG_ENV, None)
        else:
            os.environ[LOG_ENV] = saved_log


def run():  # pragma: no cover
    """console_scripts entry point"""
    sys.exit(main())
