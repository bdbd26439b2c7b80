import os
import sys
from pathlib import Path


def _locate_extension_dir():
    env = os.environ.get("Q2N_EXT_DIR")
    if env and Path(env).is_dir():
        return env
    # Fall back to a sibling build tree when invoked outside ctest.
    root = Path(__file__).resolve().parents[2]
    for build in sorted(root.glob("build*")):
        if list(build.glob("_q2n*.so")):
            return str(build)
    return None


ext_dir = _locate_extension_dir()
if ext_dir:
    sys.path.insert(0, ext_dir)
