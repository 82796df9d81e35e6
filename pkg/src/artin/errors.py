"""Exception hierarchy.

Every error carries the CLI exit code it maps to: 1 for bad input,
2 for a violated precondition, 3 for a failed internal self-check.
"""


class ArtinError(Exception):
    exit_code = 1


class InputError(ArtinError):
    exit_code = 1


class MalformedInput(InputError):
    pass


class InvalidLabel(InputError):
    pass


class DuplicateEdge(InputError):
    pass


class UnknownEndpoint(InputError):
    pass


class LoopEdge(InputError):
    pass


class UnknownVertex(InputError):
    pass


class SubsetViolation(InputError):
    pass


class PreconditionError(ArtinError):
    exit_code = 2


class NotChordal(PreconditionError):
    def __init__(self, cycle):
        self.cycle = tuple(cycle)
        super().__init__(f"graph is not chordal: induced cycle {', '.join(self.cycle)}")


class NotCoherent(PreconditionError):
    def __init__(self, verdict):
        self.verdict = verdict
        super().__init__(f"requires a coherent Artin group: {verdict.describe()}")


class NotEvenFC(PreconditionError):
    def __init__(self, message="requires even FC-type"):
        super().__init__(message)


class VerticesAdjacent(PreconditionError):
    pass


class DominatingVertex(PreconditionError):
    pass


class NoSuitableSplit(PreconditionError):
    pass


class InvalidSplit(PreconditionError):
    pass


class DeltaNotFreeAbelian(PreconditionError):
    pass


class EmptySubset(PreconditionError):
    pass


class RefinementImpossible(PreconditionError):
    pass


class TooLarge(PreconditionError):
    pass


class SelfCheckError(ArtinError):
    exit_code = 3


class InternalInconsistency(SelfCheckError):
    pass
