"""Exact verification engine for the unramified triple-product zeta integral."""
__version__ = "0.1.0"
