"""
Version information for UPB Lab.

This module contains the current version number of the application.
"""

NAME = "UPB Lab"
VERSION = "0.3.0"
