"""
Concrete finite groups as Cayley tables and their structural queries.
"""
