"""Exception taxonomy mirrored by the CLI exit codes.

ValueError (including subclasses raised by parsing and precondition checks)
is a usage error, exit code 1.  ComputationError marks an internal
inconsistency detected during an otherwise well-posed computation, exit 2.
"""


class ComputationError(RuntimeError):
    pass
