import os
import subprocess
import sys

from invseq import _kernels

SCRIPT = """
from invseq import _kernels
from invseq.sequences import count_family
from invseq.partitions import count_crossing_avoiders
print(_kernels.JIT_ENABLED, count_family("ggm", 7), count_family("aw", 7),
      count_crossing_avoiders(7, 3, True))
"""


def run_with(flag):
    env = dict(os.environ)
    env.pop(_kernels.ENV_FLAG, None)
    if flag is not None:
        env[_kernels.ENV_FLAG] = flag
    proc = subprocess.run([sys.executable, "-c", SCRIPT], env=env, capture_output=True, text=True)
    assert proc.returncode == 0, proc.stderr
    return proc.stdout.split()


def test_env_flag_selects_python_path():
    assert run_with("1") == ["False", "772", "773", "772"]
    assert run_with(None) == ["True", "772", "773", "772"]


def test_py_func_is_plain_python():
    slow = _kernels.py_func(_kernels.walk_ggm)
    assert not hasattr(slow, "py_func")
    assert _kernels.py_func(slow) is slow
