"""Exception hierarchy shared across the package.

InputError covers everything a user can cause from files or the command
line (grammar problems, bad expressions, precondition violations on input
data).  CertificationError covers internal certificates that fail at run
time even on well-formed input: too-small prime fields, endomorphism rings
that do not split over the ground field, exhausted search budgets.  The CLI
maps the former to exit code 2 and the latter to exit code 3.
"""


class TaubError(Exception):
    pass


class InputError(TaubError):
    pass


class CertificationError(TaubError):
    pass
