"""Exception hierarchy shared by all covlab modules."""


class CovlabError(Exception):
    """Base class for all errors raised by covlab."""


class DegenerateInput(CovlabError):
    """Input violates a nondegeneracy precondition (zero vector, empty set, repeats)."""


class ShapeMismatch(CovlabError):
    """Dimensions of the operands do not line up."""


class SizeLimit(CovlabError):
    """A configured desk-scale budget would be exceeded; the message states the budget."""


class DegenerateSpan(CovlabError):
    """Points meant to span a hyperplane are affinely dependent."""


class IsAmbientHyperplane(CovlabError):
    """The requested induced-mode class degenerates to the ambient hull hyperplane."""


class DegenerateCollection(CovlabError):
    """Zonotope generators contain a zero vector or a parallel pair."""


class Infeasible(CovlabError):
    """No cover exists within the given candidates and budget."""


class NotAMember(CovlabError):
    """The designated vertex does not belong to the point set."""


class NoAmbientHyperplane(CovlabError):
    """The point set affinely spans the whole space, so no hull hyperplane exists."""


class HypothesisViolated(CovlabError):
    """A stated geometric hypothesis of the operation fails for this input."""


class ParityMismatch(CovlabError):
    """The construction variant requires the other parity of n."""


class DegreeMismatch(CovlabError):
    """The polynomial degree does not match the required total degree."""


class ContractViolation(CovlabError):
    """A proved guarantee failed at runtime; indicates a bug, not bad input."""
