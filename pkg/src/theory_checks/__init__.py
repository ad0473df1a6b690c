"""
Explicit formulas, bounds and verification suites over a group corpus.
"""
