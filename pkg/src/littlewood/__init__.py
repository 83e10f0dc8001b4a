"""Exact verification of Littlewood identities over partitions with empty 2-core."""

__version__ = "0.1.0"
