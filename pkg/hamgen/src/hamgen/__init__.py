"""Molecular .ham fixture generation toolchain."""

__version__ = "0.1.0"
