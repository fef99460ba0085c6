# Copyright (c) 2020, the Unirational developers.
#
# Distributed under the 3-clause BSD license, see accompanying file LICENSE
# for details.

"""
Exact and modular verification of the chain relations.

Exact mode reduces each cleared relation to its normal form in k(V) and
requires the zero element. Modular mode evaluates the same formulas at random
points of V over distinct primes p = 1 mod 3 and reports the probability
bound of the test next to the outcome.
"""

from __future__ import absolute_import, division, print_function

import time
import warnings

import attr

from .chain import ChainEnv
from .chain import DegreeBackend
from .chain import build_env
from .chain import error_bound
from .chain import lemma_relations
from .chain import mutate
from .chain import n5_relations
from .chain import relation_degree
from .chain import roundtrip_relations
from .chain import side_conditions
from ..fields import fp_with_omega
from ..report import Mode
from ..report import elapsed_ms
from ..report import RunConfig
from ..report import Status
from ..report import VerificationReport
from ..tower import RETRY_BUDGET
from ..tower import TowerPoint
from ..tower import is_nonzero_witness
from ..utils import check_rng
from ..utils import sample_primes
from ..utils.errors import ArityError
from ..utils.errors import SamplingWarning
from ..utils.errors import SpecializationError


def check_exact(relations, env, name, anchor, config):
    '''
    Reduce every relation in the exact environment; all must vanish.

    A refuted report names the first nonvanishing relation and a point of
    V(F_p) where it is nonzero.
    '''
    if not env.exact:
        raise ValueError("Exact checks need an environment over k(V)")
    start = time.perf_counter()
    rng = check_rng(name, config.seed)
    details = {}
    counterexample = None
    for rel in relations:
        value = rel.build(env)
        details[rel.name] = 'zero' if value.is_zero() else 'nonzero, {0} terms'.format(len(value.terms))
        if value and counterexample is None:
            certificate = is_nonzero_witness(value, rng, prime_range=config.prime_range)
            counterexample = {'relation': rel.name}
            if certificate.point is not None:
                counterexample.update(certificate.point.witness())
                counterexample['value'] = int(certificate.value)
    status = Status.verified if counterexample is None else Status.refuted
    return VerificationReport(name, anchor, Mode.exact, status, counterexample=counterexample,
                              details=details, seed=config.seed, timing_ms=elapsed_ms(start))


def _sample_env(n, field, rng):
    'A point of V(F_p) where every formula of the chain is defined'
    for _ in range(RETRY_BUDGET):
        point = TowerPoint.sample(n, field, rng)
        try:
            return point, ChainEnv.build(point)
        except (ZeroDivisionError, SpecializationError):
            continue
    return None, None


def check_modular(relations, n, name, anchor, config):
    '''
    Evaluate every relation at ``config.primes`` random points, one per prime.
    '''
    start = time.perf_counter()
    rng = check_rng(name, config.seed)
    primes = sample_primes(rng, config.primes, *config.prime_range)
    witnesses = []
    used = []
    counterexample = None
    missed = 0
    for p in primes:
        field = fp_with_omega(p, rng)
        point, env = _sample_env(n, field, rng)
        values = None
        if env is not None:
            try:
                values = [(rel, rel.build(env)) for rel in relations]
            except ZeroDivisionError:
                values = None
        if values is None:
            missed += 1
            warnings.warn("No usable point of V over GF({0}) within {1} tries".format(p, RETRY_BUDGET),
                          SamplingWarning)
            continue
        witnesses.append(point.witness())
        used.append(p)
        for rel, value in values:
            if value:
                counterexample = dict(point.witness(), relation=rel.name, value=int(value))
                break
        if counterexample is not None:
            break

    degree = max(relation_degree(rel, n) for rel in relations)
    if counterexample is not None:
        status = Status.refuted
    elif missed:
        status = Status.inconclusive
    else:
        status = Status.verified
    details = {'relations': [rel.name for rel in relations], 'degree': degree, 'missed_samples': missed}
    return VerificationReport(name, anchor, Mode.modular, status, witnesses=witnesses,
                              counterexample=counterexample, details=details, seed=config.seed,
                              timing_ms=elapsed_ms(start),
                              error_bound=None if counterexample else error_bound(degree, used))


def _check(relations, env_or_n, name, anchor, config):
    if config.mode is Mode.exact:
        env = env_or_n if isinstance(env_or_n, ChainEnv) else build_env(env_or_n)
        return check_exact(relations, env, name, anchor, config)
    n = env_or_n.n if isinstance(env_or_n, ChainEnv) else env_or_n
    return check_modular(relations, n, name, anchor, config)


def verify_lemma(env, which, config=None):
    '''
    Check the relations of one of the Lemmas 1 to 5 for four curves.

    Parameters
    ----------
    env: ChainEnv
        The exact environment of arity 4; in modular mode only its arity is used.
    which: int
        The lemma, 1 to 5.
    config: RunConfig, optional
        Mode, primes and seed.
    '''
    config = RunConfig() if config is None else config
    if env.n != 4:
        raise ArityError("Lemmas 1 to 5 are stated for four curves, got {0}".format(env.n))
    return _check(lemma_relations(which, env.n), env, 'lemma{0}'.format(which), 'Lemma {0}'.format(which), config)


def verify_roundtrip(env, config=None):
    'Check that the back-substitution formulas recover x_1, x_i, v_2, v_i, u_i and t_i'
    config = RunConfig() if config is None else config
    return _check(roundtrip_relations(env.n), env, 'roundtrip', 'Lemmas 2 to 5 (back-substitution)', config)


def verify_n5(mode=Mode.modular, config=None):
    '''
    Check both relations of the five-curve fibration.

    The exact mode works in the 7776-dimensional k(V) for n = 5 and is slow.
    '''
    config = RunConfig() if config is None else config
    config = attr.evolve(config, mode=Mode(mode), n=5)
    return _check(n5_relations(), 5, 'n5', 'n = 5 relations', config)


def verify_mutations(relations, n, config=None, runs=20, threshold=19):
    '''
    Soundness of the modular checker: perturbed relations must be refuted.

    Each run mutates a randomly chosen relation and checks it in modular
    mode; the report is verified when at least ``threshold`` runs refute.
    '''
    config = RunConfig(mode=Mode.modular, n=n) if config is None else config
    rng = check_rng('mutation', config.seed)
    start = time.perf_counter()
    refuted = 0
    witnesses = []
    for run in range(runs):
        relation = relations[int(rng.integers(0, len(relations)))]
        mutated = mutate(relation, rng, n)
        report = check_modular([mutated], n, 'mutation.{0}.{1}'.format(relation.name, run),
                               relation.anchor, config)
        if report.status is Status.refuted:
            refuted += 1
            witnesses.append(report.counterexample)
    status = Status.verified if refuted >= threshold else Status.refuted
    return VerificationReport('mutation.n{0}'.format(n), 'mutation test', Mode.modular, status,
                              witnesses=witnesses, details={'runs': runs, 'refuted': refuted},
                              seed=config.seed, timing_ms=elapsed_ms(start))


def certify_nonvanishing(env, config=None):
    '''
    Certify every element the proofs assume nonzero, with a point of V(F_p)
    where it does not vanish.

    Returns one report per side condition.
    '''
    config = RunConfig() if config is None else config
    reports = []
    for label, elem in sorted(side_conditions(env).items()):
        name = 'nonvanishing.n{0}.{1}'.format(env.n, label)
        start = time.perf_counter()
        certificate = is_nonzero_witness(elem, check_rng(name, config.seed), prime_range=config.prime_range)
        if not certificate.nonzero:
            status = Status.refuted
        elif certificate.point is None:
            status = Status.inconclusive
        else:
            status = Status.verified
        witnesses = [] if certificate.point is None else [dict(certificate.point.witness(),
                                                                value=int(certificate.value))]
        reports.append(VerificationReport(name, 'side condition', Mode.exact, status, witnesses=witnesses,
                                          details={'terms': len(elem.terms)}, seed=config.seed,
                                          timing_ms=elapsed_ms(start)))
    return reports


def verify_chain(config=None):
    'All reports for the configured arity: lemmas, round trip or the n = 5 relations, and the mutation test'
    config = RunConfig() if config is None else config
    reports = []
    if config.n == 4:
        env = build_env(4) if config.mode is Mode.exact else ChainEnv.build(DegreeBackend(4))
        for which in range(1, 6):
            reports.append(verify_lemma(env, which, config))
        reports.append(verify_roundtrip(env, config))
        relations = [rel for which in range(1, 6) for rel in lemma_relations(which)]
    else:
        reports.append(verify_n5(config.mode, config))
        relations = n5_relations()
    reports.append(verify_mutations(relations, config.n, config))
    return reports

