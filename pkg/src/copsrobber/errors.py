"""Exception hierarchy shared by every module.

The CLI maps these onto exit codes, so the classes carry that meaning:
input problems exit 2, capability refusals 3, illegal policy moves 4.
"""


class CopsRobberError(Exception):
    exit_code = 1


class InputError(CopsRobberError, ValueError):
    """Malformed graph, representation, parameter or file."""

    exit_code = 2


class CapabilityError(CopsRobberError, RuntimeError):
    """A configured exhaustive limit or state budget would be exceeded.

    ``bracket`` optionally carries the partial (lower, upper) answer that was
    established before the refusal.
    """

    exit_code = 3

    def __init__(self, message, bracket=None):
        super().__init__(message)
        self.bracket = bracket


class ConfigurationError(CopsRobberError, ValueError):
    """A policy was constructed or started outside its precondition."""

    exit_code = 2


class PolicyError(CopsRobberError, RuntimeError):
    """A policy emitted an illegal move during play."""

    exit_code = 4

    def __init__(self, message, offender=None):
        super().__init__(message)
        self.offender = offender


class ConstructionError(CopsRobberError, RuntimeError):
    """A generator failed its own machine verification."""

    exit_code = 1


class InternalError(CopsRobberError, AssertionError):
    """An invariant that should be impossible to break was broken."""

    exit_code = 1
