"""
Package version for setup.py.

The version is the output of ``git describe --tags`` (with a ``-dirty`` suffix for uncommitted changes). Outside
a git checkout, e.g. in an unpacked sdist, it falls back on the RELEASE-VERSION file, which every successful
lookup refreshes. MANIFEST.in ships RELEASE-VERSION with the sdist; keep it out of git.
"""
import subprocess
from typing import Optional

__all__ = ["get_git_version"]

RELEASE_VERSION_FILE = "RELEASE-VERSION"


def _git(*args: str) -> Optional[str]:
    # noinspection PyBroadException
    try:
        completed = subprocess.run(["git", *args], capture_output=True, text=True, check=True)
    except Exception:
        return None
    return completed.stdout


def call_git_describe() -> Optional[str]:
    output = _git("describe", "--tags")
    return output.strip() if output else None


def is_dirty() -> bool:
    return bool(_git("diff-index", "--name-only", "HEAD"))


def read_release_version() -> Optional[str]:
    try:
        with open(RELEASE_VERSION_FILE, "r") as release_file:
            return release_file.readline().strip() or None
    except OSError:
        return None


def write_release_version(version: str):
    with open(RELEASE_VERSION_FILE, "w") as release_file:
        release_file.write(f"{version}\n")


def get_git_version() -> str:
    release_version = read_release_version()
    version = call_git_describe()
    if version is not None and is_dirty():
        version += "-dirty"
    if version is None:
        version = release_version
    if version is None:
        raise ValueError("Cannot find the version number: no git tag and no RELEASE-VERSION file")
    if version != release_version:
        write_release_version(version)
    return version


if __name__ == "__main__":
    print(get_git_version())
