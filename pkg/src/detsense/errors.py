"""Exception hierarchy shared across the package.

Three failure classes are distinguished so the command line layer can map
them onto distinct exit codes:

* ``ParameterError``: a caller violated a documented precondition
  (bad sizes, unsupported parameter ranges, wrong alphabet, ...).
* ``FormatError``: an on-disk artifact is malformed or inconsistent.
* ``InvariantError``: an internal postcondition failed.  Seeing one of
  these means a bug, not a usage mistake.
"""


class ParameterError(ValueError):
    """Raised when arguments violate a documented precondition."""


class FormatError(ValueError):
    """Raised when a file does not parse or fails its self-consistency checks."""


class InvariantError(RuntimeError):
    """Raised when a construction invariant that must hold by design fails."""
