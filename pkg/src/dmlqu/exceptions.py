"""Exception hierarchy for dmlqu."""


class DmlquError(Exception):
    """Base class for all errors raised by this package."""


class ValidationError(DmlquError, ValueError):
    """Invalid input: bad parameters, malformed matrices, bad configs."""


class NotHermitianError(ValidationError):
    def __init__(self, i, j, deviation):
        self.pair = (i, j)
        self.deviation = deviation
        super().__init__(
            f"matrix is not Hermitian: |M[{i}][{j}] - conj(M[{j}][{i}])| = {deviation:.3e}"
        )


class NotPSDError(ValidationError):
    def __init__(self, eigenvalue):
        self.eigenvalue = eigenvalue
        super().__init__(f"matrix is not positive semidefinite: eigenvalue {eigenvalue:.6e}")


class NotCentrosymmetricError(ValidationError):
    def __init__(self, i, j, leakage):
        self.entry = (i, j)
        self.leakage = leakage
        super().__init__(
            f"Hadamard-conjugated state is not X-form: entry ({i}, {j}) leaks {leakage:.3e}"
        )


class RankDeficiencyError(DmlquError, ArithmeticError):
    """The closed-form omega expressions hit a vanishing denominator."""

    def __init__(self, block, denominator):
        self.block = block
        self.denominator = denominator
        super().__init__(
            f"closed-form LQU is singular: the {block} block has 2*sqrt(d)+t = {denominator:.3e}; "
            "use lqu_w for this state"
        )


class ExponentOverflowError(DmlquError, OverflowError):
    pass
