"""Exception hierarchy shared by every module."""


class SkewPBWError(Exception):
    """Base class for all errors raised by the package."""


class InvalidSpec(SkewPBWError):
    """A ring, map or extension description is malformed."""


class AxiomViolation(SkewPBWError):
    def __init__(self, axiom, witness):
        self.axiom = axiom
        self.witness = tuple(witness)
        super().__init__(f"ring axiom '{axiom}' fails at {self.witness}")


class LawViolation(SkewPBWError):
    def __init__(self, law, witness):
        self.law = law
        self.witness = tuple(witness)
        super().__init__(f"law '{law}' fails at {self.witness}")


class ResourceBoundExceeded(SkewPBWError):
    """A configured size, degree or search bound was hit."""


class OrderBoundExceeded(ResourceBoundExceeded):
    pass


class ClosureBoundExceeded(ResourceBoundExceeded):
    pass


class NotInvariant(SkewPBWError):
    pass


class NotProper(SkewPBWError):
    pass


class HypothesisViolation(SkewPBWError):
    pass


class AssociativityCounterexample(SkewPBWError):
    def __init__(self, triple):
        self.triple = tuple(triple)
        super().__init__("(f*g)*h != f*(g*h) for f, g, h = "
                         + ", ".join(str(t) for t in self.triple))


class PreconditionUnmet(SkewPBWError):
    pass


class ParseError(SkewPBWError):
    def __init__(self, message, offset):
        self.offset = offset
        super().__init__(f"{message} (at offset {offset})")
