"""Builds the outstanding._core extension by driving the project's CMake
configuration, then lets setuptools package the result."""

import os
import subprocess
import sys
from pathlib import Path

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class CMakeExtension(Extension):
    def __init__(self, name: str, sourcedir: str = "") -> None:
        super().__init__(name, sources=[])
        self.sourcedir = os.fspath(Path(sourcedir).resolve())


class CMakeBuild(build_ext):
    def build_extension(self, ext: CMakeExtension) -> None:
        ext_fullpath = Path.cwd() / self.get_ext_fullpath(ext.name)
        package_dir = ext_fullpath.parent.resolve()
        build_temp = Path(self.build_temp) / ext.name
        build_temp.mkdir(parents=True, exist_ok=True)

        cmake_args = [
            f"-DCMAKE_BUILD_TYPE={os.environ.get('OUTSTANDING_BUILD_TYPE', 'Release')}",
            f"-DPython_EXECUTABLE={sys.executable}",
            f"-DOUTSTANDING_PYTHON_OUTPUT_DIR={package_dir}",
            "-DOUTSTANDING_BUILD_PYTHON=ON",
            "-DOUTSTANDING_BUILD_CLI=OFF",
            "-DOUTSTANDING_BUILD_TESTS=OFF",
        ]
        try:
            import pybind11

            cmake_args.append(f"-Dpybind11_DIR={pybind11.get_cmake_dir()}")
        except ImportError:
            pass

        subprocess.run(["cmake", ext.sourcedir, *cmake_args], cwd=build_temp, check=True)
        subprocess.run(
            ["cmake", "--build", ".", "--target", "outstanding_python", "-j"],
            cwd=build_temp,
            check=True,
        )


setup(
    packages=["outstanding"],
    package_dir={"": "python"},
    ext_modules=[CMakeExtension("outstanding._core")],
    cmdclass={"build_ext": CMakeBuild},
    zip_safe=False,
)
