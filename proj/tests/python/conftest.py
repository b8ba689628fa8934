import json
import os
import pathlib
import subprocess

import pytest

SOURCE_DIR = pathlib.Path(os.environ.get("MIXORDER_SOURCE_DIR", pathlib.Path(__file__).resolve().parents[2]))
SCENARIOS = SOURCE_DIR / "scenarios"


def _cli_path():
    path = os.environ.get("MIXORDER_CLI")
    if path:
        return pathlib.Path(path)
    return SOURCE_DIR / "build" / "mixorder"


@pytest.fixture(scope="session")
def scenarios():
    return SCENARIOS


@pytest.fixture(scope="session")
def schema():
    with open(SOURCE_DIR / "schemas" / "verify_examples.schema.json", encoding="utf-8") as fh:
        return json.load(fh)


@pytest.fixture(scope="session")
def cli():
    exe = _cli_path()
    if not exe.exists():
        pytest.skip(f"command-line tool not built at {exe}")

    def run(*args, env=None, check_code=None):
        full_env = dict(os.environ)
        full_env.pop("MIXORDER_GRID_POINTS", None)
        if env:
            full_env.update(env)
        proc = subprocess.run([str(exe), *map(str, args)], capture_output=True, text=True, env=full_env)
        if check_code is not None:
            assert proc.returncode == check_code, proc.stderr
        return proc

    return run
