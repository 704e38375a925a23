"""Exception types shared across the package."""


class ClsecError(Exception):
    """Base class for all clsec errors."""


# text codec
class EmptyAfterStrip(ClsecError):
    pass


class NonAsciiCharacter(ClsecError):
    pass


class LengthMismatch(ClsecError):
    pass


# header codec
class UnknownLength(ClsecError):
    pass


class CodewordTooLong(ClsecError):
    pass


class ZeroPayload(ClsecError):
    pass


class MalformedHeader(ClsecError):
    pass


# physical chain
class OddBitCount(ClsecError):
    pass


class InvalidCrossover(ClsecError):
    pass


# vocabulary
class EmptyVocabulary(ClsecError):
    pass


class SourceUnavailable(ClsecError):
    pass


# correction engine
class IndexOutOfRange(ClsecError):
    pass


class EmptyCandidates(ClsecError):
    pass


class CandidateMismatch(ClsecError):
    pass


class MaskCountMismatch(ClsecError):
    pass


# scorers
class ScorerUnavailable(ClsecError):
    pass


class MalformedRequest(ClsecError):
    pass


class ProtocolError(ClsecError):
    pass


# metrics
class WordCountMismatch(ClsecError):
    pass
