"""Exact verification of string-diagram identities in vector product and composition algebras."""
