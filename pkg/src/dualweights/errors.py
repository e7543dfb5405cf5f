class InvalidWeightsError(ValueError):
    """Malformed tuple: nonpositive entries, a_i >= h, or gcd(a1,a2,a3,h) != 1."""


class NotRegularError(ValueError):
    """An operation that needs a regular system was given a non-regular one."""


class NotDualTypeError(ValueError):
    """No Appendix family (Types I-V) matches the weight system."""


class VerificationError(RuntimeError):
    """A checked identity failed; the message names the identity."""
