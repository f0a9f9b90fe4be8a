"""Exception types shared across the package."""


class PartitionError(ValueError):
    pass


class OverlappingBlocks(PartitionError):
    def __init__(self, index):
        super().__init__(f"point {index} appears in more than one block")
        self.index = index


class UncoveredPoint(PartitionError):
    def __init__(self, index):
        super().__init__(f"point {index} is not covered by any block")
        self.index = index


class BadIndex(PartitionError):
    def __init__(self, index):
        super().__init__(f"point index {index} is out of range")
        self.index = index


class SizeMismatch(PartitionError):
    pass


class ColorMismatch(PartitionError):
    pass


class EmptyRow(PartitionError):
    pass


class BoundExceeded(PartitionError):
    pass


class NotNoncrossing(PartitionError):
    pass


class NotProjective(PartitionError):
    pass


class ThroughBlockMismatch(PartitionError):
    pass


class NotThroughOne(PartitionError):
    pass


class RangeError(PartitionError):
    pass


class UnsupportedFamily(ValueError):
    pass


class NonMemberPartition(ValueError):
    pass


class DimensionBudgetExceeded(ValueError):
    pass


class HorizonTooSmall(RuntimeError):
    pass
