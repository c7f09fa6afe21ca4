"""
Setup script for the ConSHN-BT reasoning toolkit.
Installs the packages and the ``conshn`` console script.
"""
from setuptools import setup

with open("requirements.txt") as f:
    requirements = [
        line.split("#")[0].strip()
        for line in f
        if line.split("#")[0].strip() and not line.startswith("pytest")
    ]

setup(
    name="conshn-bt",
    version="0.1.0",
    description="Evaluation, reduction, decision and proof checking for conditional strong historical necessity",
    packages=["cli", "decide", "models", "proofkit", "reduction", "semantics", "syntax", "utils"],
    py_modules=["config", "main"],
    install_requires=requirements,
    extras_require={"test": ["pytest>=7.4.0"]},
    entry_points={"console_scripts": ["conshn=main:main"]},
    python_requires=">=3.9",
)
