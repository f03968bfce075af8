"""qcliff: exact verification of clock/shift operator algebras and GL_w(2)."""

__version__ = "0.1.0"

SCHEMA_VERSION = 1
