"""Exception types raised across the toolkit."""


class TecoError(Exception):
    """Base class for all toolkit errors."""


# image I/O
class ImageIOError(TecoError):
    """File unreadable or unwritable."""


class DecodeError(TecoError):
    """Corrupt or unsupported image data."""


class EncodeError(TecoError):
    """Invalid encode request (e.g. jpeg quality out of [1, 100])."""


class ShapeMismatch(TecoError):
    """Two images expected to share a shape do not."""


# corruptions
class SeverityOutOfRange(TecoError):
    """Severity outside [1, max_severity]."""


class MissingAsset(TecoError):
    """Frost texture directory configured but unusable."""


class EmptySelection(TecoError):
    """No corruption kinds / groups selected."""


# oracle
class OracleTimeout(TecoError):
    """The oracle did not answer within the configured timeout."""


class TransportError(TecoError):
    """The oracle process/connection failed."""


class ProtocolError(TecoError):
    """Malformed or invariant-violating oracle response."""


class LabelOutOfRange(TecoError):
    """Label >= the declared number of classes."""


class UnknownSample(TecoError):
    """Sample id not present in a synthetic oracle."""


# statistics / evaluation
class EmptyInput(TecoError):
    """An operation requiring a nonempty list got an empty one."""


class ZeroMean(TecoError):
    """Coefficient of variation is undefined for mean <= 0."""


class InsufficientSamples(TecoError):
    """Fewer calibration samples than requested."""


class DegenerateSet(TecoError):
    """A labeled score set contains only one class."""


class SingleClass(TecoError):
    """AUROC/F1 need both classes present."""


# cli
class ManifestError(TecoError):
    """Malformed input manifest."""
