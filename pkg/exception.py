class UrmError(Exception):
    pass


class ParseError(UrmError):
    def __init__(self, path, lineno, reason):
        msg = "Unable to parse %s at line %d: %s" % (path, lineno, reason)
        super(ParseError, self).__init__(msg)
        self.path = path
        self.lineno = lineno


class ConfigError(UrmError):
    def __init__(self, path, reason):
        msg = "Unable to load configuration %s. %s" % (path, reason)
        super(ConfigError, self).__init__(msg)


class ValidationError(UrmError):
    """Base for failures where the input is well-formed but does not belong
    to the class a solver or verifier requires.
    """
    pass


class InvalidInput(ValidationError):
    def __init__(self, reason):
        super(InvalidInput, self).__init__("Invalid input: %s" % reason)


class NotProperOrdering(ValidationError):
    def __init__(self, witness):
        u, v, w = witness
        msg = ("Ordering is not a proper vertex ordering: %d < %d < %d with "
               "%d~%d but %d~%d or %d~%d missing." % (
                   u, v, w, u, w, u, v, v, w))
        super(NotProperOrdering, self).__init__(msg)
        self.witness = witness


class NotTransitiveOrdering(ValidationError):
    def __init__(self, witness, condition):
        u, v, w = witness
        if condition == 'a':
            detail = "%d~%d and %d~%d but %d~%d missing" % (
                u, v, v, w, u, w)
        else:
            detail = "%d~%d but neither %d~%d nor %d~%d" % (
                u, w, u, v, v, w)
        msg = ("Ordering is not a transitive vertex ordering: condition (%s) "
               "fails for %d < %d < %d (%s)." % (
                   condition, u, v, w, detail))
        super(NotTransitiveOrdering, self).__init__(msg)
        self.witness = witness
        self.condition = condition


class NotProperRepresentation(ValidationError):
    def __init__(self, outer, inner):
        msg = ("Interval representation is not a proper representation: "
               "interval of vertex %d strictly contains interval of vertex "
               "%d." % (outer, inner))
        super(NotProperRepresentation, self).__init__(msg)
        self.outer = outer
        self.inner = inner


class NotBipartitePermutation(ValidationError):
    def __init__(self, vertex, reason):
        msg = ("Not a bipartite permutation instance at vertex %d: %s" % (
            vertex, reason))
        super(NotBipartitePermutation, self).__init__(msg)
        self.vertex = vertex


class InvalidNestRepresentation(ValidationError):
    def __init__(self, vertex, reason):
        msg = "Invalid interval nest representation for vertex %d: %s" % (
            vertex, reason)
        super(InvalidNestRepresentation, self).__init__(msg)
        self.vertex = vertex


class BoundExceeded(ValidationError):
    def __init__(self, what, value, bound, hint=None):
        msg = "Refusing to run %s: %d exceeds the bound of %d." % (
            what, value, bound)
        if hint:
            msg += " " + hint
        super(BoundExceeded, self).__init__(msg)
        self.bound = bound


class InternalAssertion(UrmError):
    def __init__(self, reason):
        super(InternalAssertion, self).__init__(
            "Internal assertion failed: %s" % reason)
