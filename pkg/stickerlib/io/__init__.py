"""
Readers and writers for models, formulas, code tables, strand dumps
and reports.
"""
