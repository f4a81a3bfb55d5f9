class CartanError(ValueError):
    """Matrix fails the generalized Cartan axioms or has no positive symmetrizer."""


class FoldingError(ValueError):
    """Bad diagram automorphism: not an automorphism, or an edge inside an orbit."""


class TransportError(ValueError):
    """Replaying a lowering word vanished; the two components are not isomorphic."""


class ModelError(RuntimeError):
    """Internal inconsistency of the semi-infinite model.  Never expected; do not catch."""


class NodeCapError(RuntimeError):
    """Graph generation exceeded the configured node cap."""


class MomentMapError(ValueError):
    """Operation requires a point on the zero level of the moment map."""
