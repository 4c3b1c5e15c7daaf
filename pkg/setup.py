# -*- coding: utf-8 -*-
import os
from setuptools import setup, find_packages

current_path = os.path.abspath(os.path.dirname(__file__))

requirements = ("numpy", "matplotlib", "progressbar2", "lark")

dev_requirements = ("pytest", "pytest-runner", "hypothesis", "coverage")

doc_requirements = (
    "sphinx",
    "sphinx_rtd_theme",
    "recommonmark",
    "sphinx-autodoc-typehints",
)


setup(
    name="stickerlib",
    version="1.0.0",
    description="Python module simulating sticker-automaton DNA computing to model check the basic CTL constructs on labeled finite state automata",
    long_description="See README.md",
    author="stickerlib developers",
    license="cecill-c",
    python_requires=">=3.7",
    classifiers=[
        "Development Status :: 3 - Alpha",
        "Intended Audience :: Science/Research",
        "Programming Language :: Python :: 3",
    ],
    packages=find_packages(include=["stickerlib", "stickerlib.*"]),
    install_requires=requirements,
    test_suite="test",
    extras_require={"dev": dev_requirements, "doc": doc_requirements},
    entry_points={"console_scripts": ["stickermc=stickerlib.util.Cli:main"]},
)
