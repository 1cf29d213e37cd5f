"""Default on-disk locations and their environment overrides.

The repository lives under the XDG data directory and deployments under
``$HOME/.var``; both can be redirected (e.g. when the home filesystem
lacks extended attributes) via ``RUNTIMEBOX_DATA_HOME`` and
``RUNTIMEBOX_STATE_HOME``.
"""

from __future__ import annotations

import os
from pathlib import Path

APP_ID = "org.mardi.maps"


def data_home(env: dict[str, str] | None = None) -> Path:
    e = os.environ if env is None else env
    if e.get("RUNTIMEBOX_DATA_HOME"):
        return Path(e["RUNTIMEBOX_DATA_HOME"])
    if e.get("XDG_DATA_HOME"):
        return Path(e["XDG_DATA_HOME"])
    return Path(e.get("HOME", os.path.expanduser("~"))) / ".local" / "share"


def default_repo_path(env: dict[str, str] | None = None) -> Path:
    return data_home(env) / APP_ID / "ostree" / "repo"


def state_root(env: dict[str, str] | None = None) -> Path:
    e = os.environ if env is None else env
    if e.get("RUNTIMEBOX_STATE_HOME"):
        return Path(e["RUNTIMEBOX_STATE_HOME"])
    return Path(e.get("HOME", os.path.expanduser("~"))) / ".var" / APP_ID


def public_dir(env: dict[str, str] | None = None) -> Path:
    e = os.environ if env is None else env
    return Path(e.get("HOME", os.path.expanduser("~"))) / "Public"
