"""Exception hierarchy.

Every user-facing error carries a short ``kind`` used by the command line
as the ``error:<kind>:`` prefix.
"""


class MSAlgError(Exception):
    kind = "error"

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class ParseError(MSAlgError):
    kind = "parse"


class InputError(MSAlgError):
    kind = "input"


class NotAPoset(MSAlgError):
    kind = "not-a-poset"


class NotALattice(MSAlgError):
    kind = "not-a-lattice"


class NotDistributive(MSAlgError):
    kind = "not-distributive"


class AxiomViolation(MSAlgError):
    kind = "axiom"

    def __init__(self, axiom, message, witness=None):
        super().__init__(f"{axiom}: {message}", witness)
        self.axiom = axiom


class NotFixedPoint(MSAlgError):
    kind = "not-fixed-point"


class TooLarge(MSAlgError):
    kind = "too-large"


class NotASubalgebra(MSAlgError):
    kind = "not-a-subalgebra"


class NotAHomomorphism(MSAlgError):
    kind = "not-a-homomorphism"


class NotAHom01(NotAHomomorphism):
    kind = "not-a-01-homomorphism"


class NotDeMorgan(MSAlgError):
    kind = "not-de-morgan"


class NotPrincipal(MSAlgError):
    kind = "not-principal"


class NotK2(MSAlgError):
    kind = "not-k2"


class NotK2Triple(MSAlgError):
    kind = "not-k2-triple"


class TheoremViolation(MSAlgError):
    """A machine-checked theorem failed; always a bug, never bad input."""

    kind = "theorem"
