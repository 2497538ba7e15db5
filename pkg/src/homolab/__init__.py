"""Graded commutative algebra engine: Groebner bases, resolutions, Ext/Tor
and homological dimensions over quotients of polynomial rings, plus a probe
harness that checks homological identities on concrete instances."""

__version__ = "0.1.0"
