"""Exception hierarchy shared by all bnlab modules."""


class BNLabError(ValueError):
    """Base class for every error raised by bnlab."""


# schubert
class InvalidIndex(BNLabError):
    pass


class MixedContext(BNLabError):
    pass


class NotApplicable(BNLabError):
    pass


# elliptic
class PointNotOnCurve(BNLabError):
    pass


class InvalidFixture(BNLabError):
    pass


class TorsionEta(BNLabError):
    pass


# surfacelattice
class LatticeMismatch(BNLabError):
    pass


class OddParity(BNLabError):
    pass


class InvalidSection(BNLabError):
    pass


class InvalidModel(BNLabError):
    pass


# modulipic
class NegativeCoefficient(BNLabError):
    pass


class GenusMismatch(BNLabError):
    pass


class SpaceMismatch(BNLabError):
    pass


# llschain
class InvalidSequence(BNLabError):
    pass


class InvalidPartition(BNLabError):
    pass
