"""Exception hierarchy for qzeta.

Every error raised by the library derives from :class:`QZetaError`, itself a
``ValueError``, so callers (and the command line front end) can catch domain
problems in one place.
"""


class QZetaError(ValueError):
    pass


# qcore
class NegativeExponentInExactBackend(QZetaError):
    pass


class NegativeExponent(QZetaError):
    pass


class ScaleOverflow(QZetaError):
    pass


class QOutOfDomain(QZetaError):
    pass


class NonUnitConstantTerm(QZetaError):
    pass


class ScaleMismatch(QZetaError):
    pass


class OrderMismatch(QZetaError):
    pass


class ZeroBase(QZetaError):
    pass


# genocchi
class NegativeIndex(QZetaError):
    pass


class H0InExactBackend(QZetaError):
    pass


class InsufficientTerms(QZetaError):
    pass


class NegativeNetExponent(QZetaError):
    pass


# zeta
class NonPositiveX(QZetaError):
    pass


class MaxTermsExceeded(QZetaError):
    pass


class ConvergenceDomain(QZetaError):
    pass


# padic
class InvalidPrime(QZetaError):
    pass


class ResidueOutOfRange(QZetaError):
    pass


class QNotPadicallyClose(QZetaError):
    pass


class LevelTooLarge(QZetaError):
    pass


# verify / cli
class ParityViolation(QZetaError):
    pass


class BackendUnsupported(QZetaError):
    pass


class ConfigInvalid(QZetaError):
    pass


class UnsupportedFormat(QZetaError):
    pass
