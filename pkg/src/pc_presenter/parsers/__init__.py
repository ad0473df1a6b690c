"""
Parser implementations for the presentation DSL.
"""
