"""Exception hierarchy. The ``tag`` drives the CLI error prefix and exit code."""


class CalcError(Exception):
    tag = "input"
    exit_code = 2


class SizeError(CalcError, ValueError):
    tag = "size"


class ParityError(CalcError, ValueError):
    """Partition violates the parity constraint of the relevant group."""

    tag = "parity"


class ParameterError(CalcError, ValueError):
    tag = "parameter"


class UnsupportedGroupError(CalcError, ValueError):
    tag = "group"


class CapError(CalcError):
    tag = "cap"
    exit_code = 1


class InvariantError(CalcError, RuntimeError):
    """An extremum that should be unique was not; points at a wrong predicate."""

    tag = "invariant"
    exit_code = 3
