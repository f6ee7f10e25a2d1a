#!/usr/bin/env python
"""The setup script."""

from setuptools import setup, find_packages


with open("README.md") as readme_file:
    readme = readme_file.read()

requirements = ["numpy>=1.18", "matplotlib>=3.3", "networkx>=2.6"]

setup_requirements = []

test_requirements = ["pytest", "pytest-runner", "pytest-cov"]

setup(
    author="The heterochromatic developers",
    author_email="heterochromatic@users.noreply.github.com",
    classifiers=[
        "Development Status :: 3 - Alpha",
        "Intended Audience :: Science/Research",
        "License :: OSI Approved :: Apache Software License",
        "Natural Language :: English",
        "Programming Language :: Python :: 3.8",
        "Programming Language :: Python :: 3.9",
        "Programming Language :: Python :: 3.10",
        "Topic :: Scientific/Engineering :: Mathematics",
    ],
    description="Heterochromatic numbers of plane spanning trees and matroid bases",
    entry_points={"console_scripts": ["heterochromatic=heterochromatic.cli:main"]},
    install_requires=requirements,
    license="Apache Software License 2.0",
    long_description=readme + "\n\n",
    long_description_content_type="text/markdown",
    include_package_data=True,
    keywords="heterochromatic rainbow plane spanning tree matroid double transversal",
    name="heterochromatic",
    packages=find_packages(exclude=["tests"]),
    python_requires=">=3.8",
    setup_requires=setup_requirements,
    test_suite="tests",
    tests_require=test_requirements,
    version="0.1.0",
    zip_safe=False,
)
