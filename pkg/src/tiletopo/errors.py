"""Exception types shared across the package."""


class TileError(Exception):
    """Base class for all library errors."""


class BadDeterminant(TileError):
    """Determinant B of the input matrix is below 2 (negative bases unsupported)."""


class NotExpanding(TileError):
    """|A| > B, so the matrix has an eigenvalue of modulus <= 1."""


class DegenerateBasis(TileError):
    """v and M*v are linearly dependent."""


class OutOfRange(TileError):
    """Parameter outside the supported range for this operation."""


class LengthMismatch(TileError):
    """Digit words of different lengths where equal lengths are required."""


class WrongRegime(TileError):
    """Operation invoked for (A, B) outside the regime where it is defined."""


class NotIrreducible(TileError):
    """Contact graph is not strongly connected."""


class NoConsistentOrdering(TileError):
    """No edge ordering satisfies the continuity constraints (signals a bug
    or unsupported parameters)."""


class NonPeriodicWalk(TileError):
    """Parameter whose greedy walk never becomes periodic; outside the exact
    domain supported here."""


class CertificateFailure(TileError):
    """A certificate check that the theory guarantees has failed; signals an
    implementation bug."""


class ChainViolation(TileError):
    """A chain/circular-chain intersection pattern does not match the expected
    one; carries the offending pair and a witness."""


class IdentityFailure(TileError):
    """An exact identity between evaluated points does not hold."""


class BudgetExceeded(TileError):
    """Requested enumeration exceeds the configured walk budget."""
