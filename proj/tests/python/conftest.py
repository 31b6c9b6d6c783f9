"""Makes the in-tree package importable against a plain CMake build.

When the wheel is not installed, the extension lives in the CMake build
directory; copy the freshest build next to the package sources so
``import mgslca`` works.
"""

import shutil
import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parents[2]
PACKAGE_DIR = ROOT / "python" / "mgslca"


def _stage_extension() -> None:
    if any(PACKAGE_DIR.glob("_mgslca*.so")):
        built = sorted(
            (ROOT / "build").glob("_mgslca*.so"),
            key=lambda p: p.stat().st_mtime,
            reverse=True,
        )
        if not built or built[0].stat().st_mtime <= next(
            PACKAGE_DIR.glob("_mgslca*.so")
        ).stat().st_mtime:
            return
    candidates = sorted(
        (ROOT / "build").glob("_mgslca*.so"),
        key=lambda p: p.stat().st_mtime,
        reverse=True,
    )
    if candidates:
        shutil.copy2(candidates[0], PACKAGE_DIR / candidates[0].name)


try:
    import mgslca  # noqa: F401  (already installed)
except ImportError:
    _stage_extension()
    sys.path.insert(0, str(ROOT / "python"))
