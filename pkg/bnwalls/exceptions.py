'''
This module provides the exception classes for every failure that bnwalls can
report, grouped by the exit status the command line turns them into. Instead
of inspecting messages we can write:

try:
    ...
except exceptions.InvalidClass:
    ...
except exceptions.DomainError:
    ...

Every class carries `exit_code`, which cli.main returns when the exception
reaches it. All domain errors also inherit from ValueError so that callers who
only know about builtin exceptions are not surprised.
'''
class BNWallsException(Exception):
    exit_code = 1

# Exit 2: the question is outside the domain of the theory.
class DomainError(BNWallsException, ValueError):
    exit_code = 2

class NonNegativeChi(DomainError): pass
class ChiZero(DomainError): pass
class NegativeArgument(DomainError): pass
class EmptyStratum(DomainError): pass
class BadRange(DomainError): pass
class ZeroCharge(DomainError): pass
class Proportional(DomainError): pass
class InvalidRegion(DomainError): pass
class InvalidSurface(DomainError): pass

# Exit 3: the class itself cannot carry semistable objects.
class InvalidClass(BNWallsException, ValueError):
    exit_code = 3

class NegativeSquare(InvalidClass): pass

# Exit 64, following sysexits EX_USAGE.
class UsageError(BNWallsException):
    exit_code = 64

# Exit 70, following sysexits EX_SOFTWARE. An internal identity failed.
class IntegralityViolation(BNWallsException, AssertionError):
    exit_code = 70

def require(condition, message, exception_class=IntegralityViolation):
    '''
    Raise exception_class(message) unless condition holds. Unlike `assert`,
    this survives python -O, which matters because the integrality claims are
    part of the results, not debugging aids.
    '''
    if not condition:
        raise exception_class(message)
