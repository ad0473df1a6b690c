"""
Data models for presentation statements and normal-form words.
"""
