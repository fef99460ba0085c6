#!/usr/bin/env python
# coding: utf-8
# Copyright (c) 2020, the Unirational developers.
#
# Distributed under the 3-clause BSD license, see accompanying file LICENSE
# for details.

from __future__ import absolute_import
from __future__ import division
from __future__ import print_function

import sys

from plumbum import cli
from plumbum import colors

from unirational._version import __version__
from unirational import commands
from unirational.report import DEFAULT_PRIMES
from unirational.report import RunConfig
from unirational.report import emit_report
from unirational.report import exit_code
from unirational.utils.errors import UnirationalError
from unirational.utils.utilities import DEFAULT_PRIME_RANGE
from unirational.utils.utilities import DEFAULT_SEED

USAGE_ERROR = 1


def _error(message):
    print(colors.red | 'Error: {0}'.format(message), file=sys.stderr)
    return USAGE_ERROR


def _prime_range(text):
    low, high = (int(x) for x in text.replace(':', ',').split(','))
    return low, high


class Group(cli.Application):
    'An application made of subcommands only'

    def main(self, *args):
        if args:
            return _error('unknown command {0}'.format(args[0]))
        if not self.nested_command:
            self.help()
            return USAGE_ERROR


class RunApplication(cli.Application):
    'A command that produces reports, with the switches of a run'

    seed = cli.SwitchAttr('--seed', int, default=DEFAULT_SEED, envname='UNIRATIONAL_SEED',
                          help='Master seed of all random choices')
    output = cli.SwitchAttr('--format', cli.Set('text', 'json'), default='text', help='Report format')
    timings = cli.Flag('--timings', help='Record the time taken by each check')
    primes = cli.SwitchAttr('--primes', int, default=DEFAULT_PRIMES, help='Number of primes per modular check')
    prime_range = cli.SwitchAttr('--prime-range', _prime_range, default=DEFAULT_PRIME_RANGE, argname='LOW,HIGH',
                                 help='Range the primes are drawn from')

    reports = None

    def config(self, **kwargs):
        return RunConfig(primes=self.primes, prime_range=self.prime_range, seed=self.seed,
                         output=self.output, timings=self.timings, **kwargs)

    def checks(self, config):
        raise NotImplementedError

    def main(self):
        try:
            config = self.config()
        except (TypeError, ValueError) as err:
            return _error(err)
        try:
            reports = self.checks(config)
        except UnirationalError as err:
            return _error(err)
        except (IOError, ValueError) as err:
            return _error(err)
        self.reports = reports
        emit_report(reports, config)
        return exit_code(reports)


class SurfaceApplication(RunApplication):
    coeffs = cli.SwitchAttr('--coeffs', str, argname='FILE|a1,a2,a3,a4',
                            help='Coefficient file, or the four coefficients inline')
    fibration = cli.Flag(['--fibration-surface', '--paper-surface'], excludes=['--coeffs'],
                         help='The surface of the cubic surface fibration')
    field = cli.SwitchAttr('--field', str, argname='Q|Q(omega)|p', help='Field the surface is read over')
    point = cli.SwitchAttr('--point', str, argname='x1,x2,x3,x4', help='A point of the surface')

    def surface(self, config):
        surface, _ = commands.load_surface(self.coeffs, self.fibration, self.field, config)
        return surface

    def known_point(self, surface):
        if self.point is None:
            return None
        return commands.parse_point(self.point, surface.field)


class Unirational(Group):
    PROGNAME = 'unirational'
    VERSION = __version__
    DESCRIPTION = 'Exact checks of a unirational cubic surface fibration and of diagonal cubic surfaces'


@Unirational.subcommand('verify')
class Verify(Group):
    'Verify the relations of the Kummer tower'


@Verify.subcommand('lemmas')
class VerifyLemmas(RunApplication):
    'Lemmas 1 to 5 and the round trip for n = 4, or the relations for n = 5'

    mode = cli.SwitchAttr('--mode', cli.Set('exact', 'modular'), default='exact')
    n = cli.SwitchAttr('--n', cli.Set('4', '5'), default='4')

    def config(self):
        return super(VerifyLemmas, self).config(mode=self.mode, n=int(self.n))

    def checks(self, config):
        return commands.run_lemmas(config)


@Verify.subcommand('nonvanishing')
class VerifyNonvanishing(RunApplication):
    'Certify the elements the proofs divide by'

    n = cli.SwitchAttr('--n', cli.Set('4', '5'), default='4')

    def config(self):
        return super(VerifyNonvanishing, self).config(n=int(self.n))

    def checks(self, config):
        return commands.run_nonvanishing(config)


@Unirational.subcommand('cubic')
class Cubic(Group):
    'Lines, Eckardt points and rationality of a diagonal cubic surface'


@Cubic.subcommand('lines')
class CubicLines(SurfaceApplication):
    def checks(self, config):
        return [commands.check_lines(self.surface(config), config)]


@Cubic.subcommand('eckardt')
class CubicEckardt(SurfaceApplication):
    def checks(self, config):
        return [commands.check_eckardt(self.surface(config), config)]


@Cubic.subcommand('rationality')
class CubicRationality(SurfaceApplication):
    def checks(self, config):
        surface = self.surface(config)
        expected = commands.Rationality.not_rational if self.fibration and self.field is None else None
        return commands.check_rationality(surface, config, self.known_point(surface), expected)


@Unirational.subcommand('unirational')
class UnirationalMap(SurfaceApplication):
    'Build the unirational map through a point and check it over a prime field'

    specialize = cli.SwitchAttr('--specialize', int, argname='p', help='The prime for the modular checks')
    trials = cli.SwitchAttr('--trials', cli.Range(1, 1000), default=2, help='Fiber counts per map')
    samples = cli.SwitchAttr('--samples', cli.Range(1, 100), default=commands.SPECIALIZATIONS,
                             help='Specializations of a surface with parameters')

    def checks(self, config):
        surface = self.surface(config)
        point = self.known_point(surface)
        if point is None:
            if not surface.is_shifted:
                raise UnirationalError('Give a point of the surface with --point')
            point = [surface.field.one() for _ in range(4)]
        return commands.run_unirational(surface, surface.check_point(point), config, self.specialize,
                                        self.trials, self.samples)


@Unirational.subcommand('geiser')
class Geiser(Group):
    'The Geiser involution and its double cover of the plane'


@Geiser.subcommand('check')
class GeiserCheck(RunApplication):
    prime = cli.SwitchAttr('--prime', int, default=10007)
    trials = cli.SwitchAttr('--trials', cli.Range(1, 100000), default=200)

    def checks(self, config):
        return commands.run_geiser(config, self.prime, self.trials)


@Unirational.subcommand('selftest')
class Selftest(RunApplication):
    'Property checks of the arithmetic, the parser and random split cubics'

    def checks(self, config):
        return commands.run_selftest(config)


def run(argv=None):
    '''
    Run the application and return its exit code: that of the reports, or 1
    for a usage error.
    '''
    argv = sys.argv if argv is None else argv
    app, retcode = Unirational.run(argv, exit=False)
    if retcode and getattr(app, 'reports', None) is None:
        retcode = USAGE_ERROR
    return retcode or 0


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
