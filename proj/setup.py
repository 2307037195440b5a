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
    """Drive the repository's CMake build and copy out the _core module."""

    def build_extension(self, ext):
        out_dir = Path(self.get_ext_fullpath(ext.name)).parent.resolve()
        source = Path(__file__).parent.resolve()
        build_dir = Path(self.build_temp).resolve()
        build_dir.mkdir(parents=True, exist_ok=True)

        cfg = "Debug" if self.debug else "Release"
        args = [
            f"-DCMAKE_BUILD_TYPE={cfg}",
            f"-DPython3_EXECUTABLE={sys.executable}",
            "-DMINORCLASS_PYTHON=ON",
        ]
        subprocess.run(["cmake", str(source), *args], cwd=build_dir, check=True)
        jobs = str(os.cpu_count() or 2)
        subprocess.run(
            ["cmake", "--build", ".", "--target", "_core", "-j", jobs],
            cwd=build_dir,
            check=True,
        )

        built = list((build_dir / "python" / "minorclass").glob("_core*"))
        if not built:
            raise RuntimeError("CMake did not produce the _core module")
        out_dir.mkdir(parents=True, exist_ok=True)
        self.copy_file(built[0], out_dir / built[0].name)


setup(
    ext_modules=[CMakeExtension("minorclass._core")],
    cmdclass={"build_ext": CMakeBuild},
)
