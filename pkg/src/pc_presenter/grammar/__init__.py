"""
Grammar construction for the presentation DSL.
"""
