"""Exception types shared across the package."""


class TorusTutteError(Exception):
    """Base class for every error this package raises deliberately."""


class MeshError(TorusTutteError):
    """A combinatorial mesh failed validation."""


class BadFaceError(MeshError):
    """A face repeats a vertex or references an invalid vertex id."""


class NonManifoldEdgeError(MeshError):
    """An undirected edge does not border exactly two faces."""


class NonManifoldVertexError(MeshError):
    """The faces around a vertex do not stitch into a single cycle."""


class BadOrientationError(MeshError):
    """Two faces induce the same direction on a shared edge."""


class EulerCharacteristicError(MeshError):
    """V - E + F is not zero."""


class DisconnectedError(MeshError):
    """The one-skeleton is not connected."""


class CocycleViolationError(MeshError):
    """Lattice shifts around some face do not sum to zero."""


class ShiftConflictError(MeshError):
    """Duplicate or antisymmetry-inconsistent shift data was supplied."""


class NoGeneratorLoopError(MeshError):
    """No loop with the requested shift sum exists within the search bound."""


class DegenerateFaceError(TorusTutteError):
    """A face has numerically zero area where a nonzero one is required."""


class NotEmbeddedError(TorusTutteError):
    """A placement that must be an embedding is not one."""


class NonPositiveWeightError(TorusTutteError):
    """A weight assignment contains a zero, negative, or non-finite value."""


class SingularSystemError(TorusTutteError):
    """The reduced balance system lost rank; unreachable for validated meshes."""


class NotAdmissibleError(TorusTutteError):
    """Weights whose balance energy exceeds tolerance were passed where an
    admissible assignment is required."""


class EmbeddingCheckFailedError(TorusTutteError):
    """A balanced placement failed the embedding certificate."""


class AdmissibleInputError(TorusTutteError):
    """The flow velocity is undefined on admissible weights."""


class NonFiniteStateError(TorusTutteError):
    """The flow produced non-finite values; signals a step-size bug."""


class DegenerateVertexError(TorusTutteError):
    """Every edge value at a vertex is numerically zero."""


class RetractFailedError(TorusTutteError):
    """A retraction inside a morph did not converge."""


class PerturbFailedError(TorusTutteError):
    """No embedded placement was found after the allowed magnitude halvings."""
