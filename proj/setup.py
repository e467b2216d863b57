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
    def build_extension(self, ext):
        extdir = Path(self.get_ext_fullpath(ext.name)).parent.resolve()
        build_dir = Path(self.build_temp) / "cmake"
        build_dir.mkdir(parents=True, exist_ok=True)
        cfg = "Debug" if self.debug else "Release"
        import pybind11

        subprocess.run(
            [
                "cmake",
                str(Path(__file__).parent.resolve()),
                f"-DCMAKE_BUILD_TYPE={cfg}",
                "-DMORSEPRES_PYTHON=ON",
                f"-Dpybind11_DIR={pybind11.get_cmake_dir()}",
                f"-DPYTHON_EXECUTABLE={sys.executable}",
            ],
            cwd=build_dir,
            check=True,
        )
        subprocess.run(
            ["cmake", "--build", ".", "--target", "_morsepres", "-j", str(os.cpu_count() or 2)],
            cwd=build_dir,
            check=True,
        )
        extdir.mkdir(parents=True, exist_ok=True)
        for built in (build_dir / "python" / "morsepres").iterdir():
            if built.suffix != ".py":  # __init__.py ships with the package sources
                self.copy_file(str(built), str(extdir / built.name))


setup(
    packages=["morsepres"],
    package_dir={"morsepres": "python/morsepres"},
    ext_modules=[CMakeExtension("morsepres._morsepres")],
    cmdclass={"build_ext": CMakeBuild},
)
