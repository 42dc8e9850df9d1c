"""Exception types raised across the package."""


class RedwordsError(Exception):
    """Base class for all errors raised by this package."""


class NotAPermutation(RedwordsError, ValueError):
    pass


class IndexOutOfRange(RedwordsError, IndexError):
    pass


class TooLarge(RedwordsError):
    """An enumeration would exceed the configured word cap."""


class MalformedSpan(RedwordsError, ValueError):
    pass


class NotContained(RedwordsError, ValueError):
    pass


class SpreadsNotContained(RedwordsError, ValueError):
    pass


class InternalContradiction(RedwordsError, AssertionError):
    """A configuration the embedding construction rules out was reached."""


class NoIsolatedEmbedding(InternalContradiction):
    """
    Every spread of p is contained in w, yet no reduced word of w has a
    shifted isolated factor from R(p). The search behind this is exhaustive,
    so this reports a counterexample to the embedding theorem, not a bug.
    """


class NotAnOccurrence(RedwordsError, ValueError):
    pass


class InconsistentInput(RedwordsError, ValueError):
    pass


class Not132Avoiding(RedwordsError, ValueError):
    pass


class SuppressionViolated(RedwordsError, ValueError):
    pass


class InfiniteWithoutCap(RedwordsError, ValueError):
    pass


class FormulaUndefined(RedwordsError, ValueError):
    pass
