"""CANOE: contestable multi-agent care-planning engine.

Builds an argument graph over candidate care options, scores it with a
quantitative bipolar semantics, lets human reviewers contest the result
under a hash-chained audit log, and synthesizes a tiered care plan.
"""

__version__ = "0.1.0"
