"""Exception hierarchy for the rsreduct package."""


class RsReductError(Exception):
    """Base class for all rsreduct errors."""


class MissingValue(RsReductError):
    """A table cell is empty; complete decision systems are required."""


class DuplicateColumnName(RsReductError):
    """Two columns in the header share a name."""


class EmptyTable(RsReductError):
    """No data rows, or no condition attributes remain."""


class DecisionColumnNotFound(RsReductError):
    """The requested decision column is not in the header."""


class UnknownAttribute(RsReductError):
    """An attribute name or index does not denote a condition attribute."""


class AttributeAlreadyInSet(RsReductError):
    """Candidate attribute is already a member of the working subset."""


class UniverseMismatch(RsReductError):
    """Two partitions do not cover the same universe."""


class InconsistentTable(RsReductError):
    """Objects agree on all condition attributes but differ in decision."""


class TooManyAttributes(RsReductError):
    """Exhaustive enumeration was requested beyond its attribute limit."""


class IncompleteReduct(RsReductError):
    """Attribute subset does not determine the decision on every block."""
