'''
The purpose of this file is to work with the JSON config of the command line,
where we load the built-in defaults, then overlay a user-supplied file on top,
overwriting the matching keys and keeping default values for the rest. The
result says whether the user file is missing any default keys so the caller
can warn about it.

The worker count can additionally be capped by the BNWALLS_WORKERS
environment variable, which wins over both layers.
'''
import copy
import json
import os

from bnwalls import dotdict
from bnwalls import exceptions
from bnwalls import vlogging

log = vlogging.getLogger(__name__, 'bnwalls.configlayers')

WORKERS_ENVIRONMENT_VARIABLE = 'BNWALLS_WORKERS'

DEFAULT_CONFIG = {
    'workers': 1,
    'walls': {
        'region': {
            'beta_lo': '-2',
            'beta_hi': '0',
            'alpha_lo': '1/100',
            'alpha_hi': '2',
        },
    },
    'verify': {
        'klm_equivalence': {
            'g_max': 60,
            'r_max': 40,
            'chi_min': -40,
        },
        'strata': {
            'k_max': 20,
            'cases': [[-1, 6], [-3, 54], [-7, 54]],
        },
        'first_wall': {
            'cases': [[-1, 6], [-3, 54]],
        },
        'integrality': {
            'chi_min': -40,
            'h_max': 200,
            'r_max': 200,
        },
        'delta': {
            'n_max': 100,
            'samples': 2000,
        },
    },
    'svg': {
        'width': 800,
        'height': 480,
        'precision': 6,
    },
}

def recursive_dict_keys(d):
    '''
    Given a dictionary, return a set containing all of its keys and the keys of
    all other dictionaries that appear as values within, joined with dots.

    {'verify': {'strata': {'k_max': 20}}}

    returns

    {'verify', 'verify.strata', 'verify.strata.k_max'}
    '''
    keys = set(d.keys())
    for (key, value) in d.items():
        if isinstance(value, dict):
            keys.update(f'{key}.{subkey}' for subkey in recursive_dict_keys(value))
    return keys

def recursive_dict_update(target, supply):
    '''
    Update target using supply, but when the value is a dictionary update the
    insides instead of replacing the dictionary itself, so that keys which the
    supply does not mention keep their defaults. target is modified in place.
    '''
    for (key, value) in supply.items():
        existing = target.get(key, None)
        if isinstance(value, dict) and isinstance(existing, dict):
            recursive_dict_update(target=existing, supply=value)
        else:
            target[key] = value

def layer_json(target, supply):
    '''
    Apply supply on top of target. missing_keys lists the keys the target has
    and the supply lacks, indicating that the supply is incomplete.
    '''
    missing_keys = sorted(recursive_dict_keys(target).difference(recursive_dict_keys(supply)))
    recursive_dict_update(target=target, supply=supply)
    return (target, missing_keys)

def parse_workers(value):
    try:
        workers = int(value)
    except (TypeError, ValueError):
        raise exceptions.UsageError(f'Worker count should be an integer, not {value!r}.')
    if workers < 1:
        raise exceptions.UsageError(f'Worker count should be at least 1, not {workers}.')
    return workers

def load_file(filepath=None, default_config=DEFAULT_CONFIG, environ=None):
    '''
    Return the defaults with the user file at filepath (if any) overlaid, and
    the worker count capped by the environment, as a DotDict tree.
    '''
    final_config = copy.deepcopy(default_config)

    if filepath is not None:
        if not os.path.isfile(filepath):
            raise exceptions.UsageError(f'Config file {filepath} does not exist.')
        with open(filepath, 'r', encoding='utf-8') as handle:
            content = handle.read()
        try:
            user_config = json.loads(content) if content.strip() else {}
        except json.JSONDecodeError as exc:
            raise exceptions.UsageError(f'Config file {filepath} is not valid JSON: {exc}.')
        if not isinstance(user_config, dict):
            raise exceptions.UsageError(f'Config file {filepath} should hold a JSON object.')
        (final_config, missing_keys) = layer_json(target=final_config, supply=user_config)
        if missing_keys:
            log.warning('%s does not set %s; using defaults.', filepath, ', '.join(missing_keys))

    if environ is None:
        environ = os.environ
    workers = parse_workers(final_config['workers'])
    cap = environ.get(WORKERS_ENVIRONMENT_VARIABLE)
    if cap is not None:
        cap = parse_workers(cap)
        if cap < workers:
            log.debug('Capping workers from %d to %d by %s.', workers, cap, WORKERS_ENVIRONMENT_VARIABLE)
        workers = min(workers, cap)
    final_config['workers'] = workers

    return dotdict.DotDict.from_nested(final_config)

def cap_workers(requested, environ=None):
    '''
    Apply the environment cap to a worker count given on the command line.
    '''
    if environ is None:
        environ = os.environ
    requested = parse_workers(requested)
    cap = environ.get(WORKERS_ENVIRONMENT_VARIABLE)
    if cap is None:
        return requested
    return min(requested, parse_workers(cap))
