"""Builds the `seqvote` extension module from the C++ core.

Requires a C++20 compiler and the Boost headers (header-only use).
"""

import glob

from pybind11.setup_helpers import Pybind11Extension, build_ext
from setuptools import setup

ext = Pybind11Extension(
    "seqvote",
    sorted(["bindings/seqvote_py.cpp", *glob.glob("src/*.cpp")]),
    include_dirs=["include"],
    cxx_std=20,
)

setup(ext_modules=[ext], cmdclass={"build_ext": build_ext})
