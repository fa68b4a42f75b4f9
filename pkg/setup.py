"""
Package configuration for UPB Lab.

This module defines the package setup configuration for distribution.
"""

from setuptools import setup, find_packages

from src.info import VERSION

setup(
    name="upb-lab",
    version=VERSION,
    packages=find_packages(exclude=["tests", "examples", "examples.*"]),
    python_requires=">=3.8",
    install_requires=[
        "colorama",
        "numpy",
        "scipy",
        "matplotlib",
        "tqdm",
    ],
    extras_require={
        "tests": ["pytest"],
    },
    entry_points={
        "console_scripts": [
            "upb-lab = src.main:main",
        ],
    },
)
