"""Exception types shared across the package."""


class MJTError(Exception):
    """Base class for all package-specific errors."""


class NonInvertibleLeadingTerm(MJTError):
    """Raised when a series reciprocal is requested but no leading term exists."""


class WeightNotZero(MJTError):
    """Eta quotient operation that requires total weight zero."""


class LevelMismatch(MJTError):
    """An eta factor n_i does not divide the ambient level m."""


class NotConstant(MJTError):
    """A product expected to be constant has a nonconstant term.

    Carries the first offending exponent in ``args[0]``.
    """


class InsufficientDepth(MJTError):
    """A coefficient table was read outside its justified range."""


class LevelNotCoprime(MJTError):
    """Hecke operator T_n requires gcd(n, m) = 1."""


class NotFundamental(MJTError):
    """The discriminant passed to a lift is not fundamental."""


class ParseError(MJTError):
    """Malformed input text; carries a line number when applicable."""


class CongruenceViolation(MJTError):
    """A record violates D = r^2 mod 4m."""


class UnknownLambency(MJTError):
    """A symbol not present in the catalog."""


class MissingSource(MJTError):
    """A construction needs data that has not been ingested."""


class UnknownName(MJTError):
    """No Eulerian series registered under the requested name."""


class Divergent(MJTError):
    """An infinite Pochhammer product whose factors do not stabilize."""


class UnresolvableShift(MJTError):
    """Neither admissible exponent shift aligns the supports of a table row."""


class BadDiscriminant(MJTError):
    """Kronecker symbol requires D nonzero and congruent to 0 or 1 mod 4."""


class NoRepresentativeFound(MJTError):
    """Bounded search for a represented value coprime to D was exhausted."""


class ExcludedDiscriminant(MJTError):
    """(m, D) combination excluded by the rationality theorem's hypothesis."""


class NoSolutionWithinDegree(MJTError):
    """No rational function of the allowed degree matches the series."""


class Underdetermined(MJTError):
    """The shared coefficient window is too short to support the requested fit."""
