'''
vlogging
========

This module forwards everything from logging, with the addition of the LOUD
and SILENT levels. Every logger from getLogger is given the `loud` method,
which the wall enumerator and the sweeps use for per-candidate chatter that
would drown out DEBUG.

The command line picks its level from flags in argv (see main_decorator) and
falls back to the BNWALLS_LOGLEVEL environment variable, then to INFO.
'''
import functools
from logging import *
import os

_getLogger = getLogger

LOGLEVEL_ENVIRONMENT_VARIABLE = 'BNWALLS_LOGLEVEL'

BETTERHELP_EPILOGUE = '''
Logging is controlled by the following arguments, which may appear anywhere
in the command:

--loud     every candidate class the wall search considers
--debug    every cell, stratum and wall decision
--warning  only discrepancies and config problems
--quiet    only errors
--silent   nothing at all

Without a flag, the level named by the BNWALLS_LOGLEVEL environment variable
is used, or INFO.
'''

# The root logger keeps no level of its own so the handler decides.
root = getLogger()
root.setLevel(NOTSET)

LOUD = 1
SILENT = 99999999999

LEVEL_FLAGS = {
    '--loud': LOUD,
    '--debug': DEBUG,
    '--warning': WARNING,
    '--quiet': ERROR,
    '--silent': SILENT,
}

def add_loud(log):
    '''
    Add the `loud` method to the given logger.
    '''
    def loud(self, message, *args, **kwargs):
        if self.isEnabledFor(LOUD):
            self._log(LOUD, message, args, **kwargs)

    addLevelName(LOUD, 'LOUD')
    log.loud = loud.__get__(log, log.__class__)

def add_root_handler(level):
    handler = StreamHandler()
    datefmt = '%Y-%m-%dT%H:%M:%S'
    if level <= LOUD:
        formatter = Formatter('[{asctime}.{msecs:03.0f}] {levelname}:{name}.{funcName}.{lineno}:{message}', style='{', datefmt=datefmt)
    elif level <= DEBUG:
        formatter = Formatter('[{asctime}.{msecs:03.0f}] {levelname}:{name}.{funcName}:{message}', style='{', datefmt=datefmt)
    else:
        formatter = Formatter('{levelname}:{name}:{message}', style='{')
    handler.setFormatter(formatter)
    handler.setLevel(level)
    root.addHandler(handler)
    return handler

def get_level_by_argv(argv, environ=None):
    '''
    Return the level chosen by the first level flag in argv along with a copy
    of argv that has every level flag removed. Without a flag, the environment
    variable decides; without that, INFO.

    Since we are removing the arguments, argparsers should not have options
    with these same names.
    '''
    if environ is None:
        environ = os.environ

    level = None
    remaining = []
    for arg in argv:
        if arg in LEVEL_FLAGS:
            if level is None:
                level = LEVEL_FLAGS[arg]
            continue
        remaining.append(arg)

    if level is None:
        level = get_level_by_name(environ.get(LOGLEVEL_ENVIRONMENT_VARIABLE, 'INFO'))

    return (level, remaining)

def get_level_by_name(name):
    '''
    Return the integer level for a registered level name, accepting ints as
    they are. Unlike logging.getLevelName this never hands back "Level X".
    '''
    if isinstance(name, int):
        return name

    if not isinstance(name, str):
        raise TypeError(f'name should be str, not {type(name)}.')

    levels = {
        'SILENT': SILENT,
        'CRITICAL': CRITICAL,
        'ERROR': ERROR,
        'WARN': WARNING,
        'WARNING': WARNING,
        'INFO': INFO,
        'DEBUG': DEBUG,
        'LOUD': LOUD,
        'NOTSET': NOTSET,
    }
    value = levels.get(name.strip().upper())
    if value is None:
        raise ValueError(f'{name} is not a known level.')
    return value

def get_logger(name=None, main_fallback=None):
    '''
    When a module runs as __main__ the logger name would be "__main__", so
    main_fallback is used to present the module's proper name instead.
    '''
    if name == '__main__' and main_fallback is not None:
        name = main_fallback
    log = _getLogger(name)
    add_loud(log)
    return log

getLogger = get_logger

def main_decorator(main):
    '''
    Set the stderr handler level from the flags in argv, then call main with
    the flags removed. The handler is attached once per call and removed on
    the way out so that repeated calls (as in the test suite) do not stack
    handlers.
    '''
    from bnwalls import betterhelp
    betterhelp.HELPTEXT_EPILOGUES.add(BETTERHELP_EPILOGUE)
    @functools.wraps(main)
    def wrapped(argv, *args, **kwargs):
        (level, argv) = get_level_by_argv(argv)
        handler = add_root_handler(level)
        try:
            return main(argv, *args, **kwargs)
        finally:
            root.removeHandler(handler)
    return wrapped
