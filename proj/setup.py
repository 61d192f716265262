import os
import subprocess
import sys
from pathlib import Path

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class CMakeExtension(Extension):
    def __init__(self, name):
        super().__init__(name, sources=[])


class CMakeBuild(build_ext):
    """Builds the _core module with CMake and drops it where setuptools
    expects the extension."""

    def build_extension(self, ext):
        extdir = Path(self.get_ext_fullpath(ext.name)).resolve().parent
        build_dir = Path(self.build_temp) / "cmake"
        build_dir.mkdir(parents=True, exist_ok=True)
        source_dir = Path(__file__).resolve().parent
        import pybind11

        cfg = [
            "cmake",
            "-S", str(source_dir),
            "-B", str(build_dir),
            "-DCMAKE_BUILD_TYPE=Release",
            "-DCYCLOHECKE_BUILD_PYTHON=ON",
            "-DCYCLOHECKE_BUILD_TESTS=OFF",
            f"-Dpybind11_DIR={pybind11.get_cmake_dir()}",
            f"-DPython3_EXECUTABLE={sys.executable}",
        ]
        subprocess.run(cfg, check=True)
        subprocess.run(
            ["cmake", "--build", str(build_dir), "--target", "_core",
             "-j", str(os.cpu_count() or 2)],
            check=True,
        )
        staged = build_dir / "python" / "cyclohecke"
        built = sorted(staged.glob("_core*.so"))
        if not built:
            raise RuntimeError("CMake did not produce the _core module")
        extdir.mkdir(parents=True, exist_ok=True)
        target = Path(self.get_ext_fullpath(ext.name))
        target.parent.mkdir(parents=True, exist_ok=True)
        target.write_bytes(built[-1].read_bytes())


setup(
    ext_modules=[CMakeExtension("cyclohecke._core")],
    cmdclass={"build_ext": CMakeBuild},
)
