"""Exception types shared across the package."""


class VeinpruneError(Exception):
    """Base class for every error raised by this package."""


class DuplicateLabel(VeinpruneError):
    """A label occurs more than once in an element declaration."""


class UnknownLabel(VeinpruneError):
    """A label does not belong to the poset or ground set at hand."""


class CycleDetected(VeinpruneError):
    """The input relation admits a cycle, so it is not a strict order.

    The witness cycle is available as ``cycle``: a tuple of labels whose
    first element is repeated at the end.
    """

    def __init__(self, cycle):
        self.cycle = tuple(cycle)
        super().__init__("relation contains a cycle: " + " < ".join(self.cycle))


class EmptySet(VeinpruneError):
    """An operation that needs a nonempty set was given an empty one."""


class NotComparable(VeinpruneError):
    """Two elements that must be comparable are not."""


class NotAChain(VeinpruneError):
    """A set that must be totally ordered is not."""


class TooLarge(VeinpruneError):
    """An exhaustive enumeration was refused because the input is too big."""


class MemberNotSubset(VeinpruneError):
    """A family member is not a subset of the declared ground set."""


class NotAConnectivity(VeinpruneError):
    """A set family fails the connectivity axioms required here."""


class NotConditionallyComplete(VeinpruneError):
    """The poset lacks a meet or join that the operation requires."""


class PreconditionViolated(VeinpruneError):
    """The stated hypothesis of a lemma check does not hold."""


class InternalOrderViolation(VeinpruneError):
    """A derived relation failed the partial-order axioms; this is a bug."""


class ParseError(VeinpruneError):
    """Malformed textual or JSON input.

    ``line`` carries the 1-based line number when known.
    """

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class InvalidSpec(VeinpruneError):
    """A generator description is out of range or inconsistent."""
