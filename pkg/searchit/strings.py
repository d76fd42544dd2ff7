"""
Copyright (C) 2026 the SearchIt developers
"""

version = ("0","2","0")
version_str = ".".join(version)
