"""Exception taxonomy. InputError subclasses map to CLI exit code 2."""


class InputError(Exception):
    """Malformed or unusable input: bad files, bad tables, violated preconditions."""


class TableFormatError(InputError):
    """Operation tables are structurally broken (non-square, out-of-range, duplicate labels)."""


class SizeLimitError(InputError):
    """A computation would exceed its configured size threshold."""


class DegenerateInputError(InputError):
    """The input is too small for the question to make sense (e.g. |S| = 1)."""


class PreconditionError(InputError):
    """A documented operation precondition does not hold for this input."""


class CrossCheckError(Exception):
    """A brute-force verdict disagreed with a characterization it must match.

    This is the designed failure mode for implementation bugs: the checked
    equivalences are established facts, so a discrepancy means the code is
    wrong somewhere. Carries the offending report and a serialized
    counterexample semiring.
    """

    def __init__(self, message, report=None, counterexample=None):
        super().__init__(message)
        self.report = report
        self.counterexample = counterexample
