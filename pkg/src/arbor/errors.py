"""Exception hierarchy for arbor.

Every error raised on bad input derives from :class:`ArborError`;
structural validation failures derive from :class:`ValidationError`
and carry an optional ``field`` pointing into the source document.
"""


class ArborError(Exception):
    """Base class for all arbor errors."""


class ValidationError(ArborError):
    def __init__(self, message, field=None):
        self.field = field
        if field is not None:
            message = f"{field}: {message}"
        super().__init__(message)


class SchemaError(ValidationError):
    pass


class InvalidLabel(ValidationError):
    pass


class DuplicateNode(ValidationError):
    pass


class UnknownEndpoint(ValidationError):
    pass


class MultipleParents(ValidationError):
    pass


class CycleDetected(ValidationError):
    pass


class NotATree(ValidationError):
    pass


class UnknownNode(ArborError):
    pass


class EmptySubset(ArborError):
    pass


# branching
class NotAPath(ArborError):
    pass


class PathNotThroughStem(ArborError):
    pass


class StemHasNoExtension(ArborError):
    pass


class EmptyStemError(ArborError):
    pass


class EmptyStemForBranching1(EmptyStemError):
    pass


class TooLargeForBruteForce(ArborError):
    pass


class NotAPathOfRegion(NotAPath):
    pass


# homeo
class NotWithinBridge(ArborError):
    pass


class LabelCollision(ArborError):
    pass


class NotAnEdge(ArborError):
    pass


class CellNotABridge(ArborError):
    pass


class NotAPartition(ArborError):
    pass


class NotHomeomorphic(ArborError):
    pass


# forking
class BudgetExceeded(ArborError):
    def __init__(self, predicted, budget):
        self.predicted = predicted
        self.budget = budget
        super().__init__(
            f"extension would have {predicted} nodes, budget is {budget}")


class UnknownExtNode(ArborError):
    pass


class UnknownComponent(ArborError):
    pass


class IncompleteSigma(ArborError):
    pass


class SearchCapExceededWithoutWitness(ArborError):
    pass


# cli
class InvalidConfig(ArborError):
    pass


class UnknownPropositionId(ArborError):
    pass
