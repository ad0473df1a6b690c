"""
Power-commutator presentations: a DSL parser, collection and instantiation.
"""
