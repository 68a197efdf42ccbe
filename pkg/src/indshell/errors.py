"""Exception types shared across the library."""


class IndshellError(ValueError):
    """Base class for all library-specific errors."""


class InvalidInput(IndshellError):
    pass


class InvalidVertex(IndshellError):
    pass


class InvalidEdge(IndshellError):
    pass


class EmptyEdgeCollapse(IndshellError):
    """Contracting a set that swallows a whole edge would create the empty edge."""


class NotAFace(IndshellError):
    pass


class InvalidOrder(IndshellError):
    pass


class TooLarge(IndshellError):
    pass


class NotAVertexCover(IndshellError):
    pass


class InvalidPartition(IndshellError):
    pass


class NoQualifyingClique(IndshellError):
    """No maximum clique at the vertex has all of its other vertices in the first layer."""


class ParseError(IndshellError):
    pass


class InvalidGraph(IndshellError):
    pass


class UnknownSuite(IndshellError):
    pass
