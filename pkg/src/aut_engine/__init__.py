"""
Automorphism groups, central automorphisms, orbits and isomorphism search.
"""
