"""Runtime identity and manifest model.

A runtime is identified by ``name/arch/version`` and may carry a TOML
manifest at ``/manifest.toml`` whose ``[Core] command`` string selects
what to execute. Everything here is pure: parse, format, resolve.
"""

from __future__ import annotations

import shlex
import sys
from dataclasses import dataclass, field
from typing import Literal, Optional

from runtimebox.errors import EmptyCommand, MalformedRef, ManifestSyntax, ManifestType

if sys.version_info >= (3, 11):
    import tomllib as _toml
else:
    import tomli as _toml

DEFAULT_SHELL = ("/bin/sh", "-l")

CommandSource = Literal["cli-override", "manifest", "default-shell"]


def _check_component(text: str, what: str) -> str:
    if not text:
        raise MalformedRef(f"empty {what} component")
    if "/" in text:
        raise MalformedRef(f"{what} component contains '/': {text!r}")
    if any(c.isspace() for c in text):
        raise MalformedRef(f"{what} component contains whitespace: {text!r}")
    if text.startswith("."):
        raise MalformedRef(f"{what} component starts with '.': {text!r}")
    if ".." in text:
        raise MalformedRef(f"{what} component contains '..': {text!r}")
    return text


@dataclass(frozen=True)
class RuntimeRef:
    """Three-part runtime identity, serialized as ``name/arch/version``.

    Components are restricted so refs are safe to use as path components
    on disk and in URLs (no separators, whitespace, or traversal).
    """

    name: str
    arch: str
    version: str

    def __post_init__(self) -> None:
        _check_component(self.name, "name")
        _check_component(self.arch, "arch")
        _check_component(self.version, "version")

    def __str__(self) -> str:
        return f"{self.name}/{self.arch}/{self.version}"


def parse_runtime_ref(text: str) -> RuntimeRef:
    """Parse ``name/arch/version`` into a :class:`RuntimeRef`.

    Raises :class:`MalformedRef` on anything but exactly three non-empty,
    path-safe components.
    """
    parts = text.split("/")
    if len(parts) != 3:
        raise MalformedRef(
            f"expected name/arch/version with exactly two '/', got {text!r}"
        )
    return RuntimeRef(parts[0], parts[1], parts[2])


def format_runtime_ref(ref: RuntimeRef) -> str:
    """Canonical string form; inverse of :func:`parse_runtime_ref`."""
    return str(ref)


@dataclass(frozen=True)
class Manifest:
    """Parsed ``/manifest.toml``: optional launch command plus metadata.

    ``meta`` holds every key outside ``Core.command`` as a dotted-path
    string (``Meta.URL``, ...). A missing command is None; an empty
    command string is rejected at parse time.
    """

    command: Optional[str] = None
    meta: dict[str, str] = field(default_factory=dict)


def _stringify(value: object) -> str:
    if isinstance(value, str):
        return value
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (int, float)):
        return str(value)
    if isinstance(value, (list, tuple)):
        return "[" + ", ".join(_stringify(v) for v in value) + "]"
    return str(value)


def _flatten(table: dict, prefix: str, out: dict[str, str]) -> None:
    for key, value in table.items():
        dotted = f"{prefix}.{key}" if prefix else key
        if isinstance(value, dict):
            _flatten(value, dotted, out)
        else:
            out[dotted] = _stringify(value)


def parse_manifest(data: bytes) -> Manifest:
    """Parse manifest bytes; total over arbitrary input.

    Every byte sequence yields either a :class:`Manifest` or a typed
    error: :class:`ManifestSyntax` for undecodable/malformed documents,
    :class:`ManifestType` when ``Core.command`` is present but not a
    non-empty string.
    """
    try:
        text = data.decode("utf-8")
        doc = _toml.loads(text)
    except (UnicodeDecodeError, _toml.TOMLDecodeError) as exc:
        raise ManifestSyntax(f"manifest is not valid TOML: {exc}") from exc

    command = None
    core = doc.get("Core")
    if isinstance(core, dict) and "command" in core:
        command = core["command"]
        if not isinstance(command, str):
            raise ManifestType(
                f"Core.command must be a string, got {type(command).__name__}"
            )
        if command == "":
            raise ManifestType("Core.command must not be empty")

    meta: dict[str, str] = {}
    _flatten(doc, "", meta)
    meta.pop("Core.command", None)
    return Manifest(command=command, meta=meta)


@dataclass(frozen=True)
class CommandSpec:
    """What to execute inside the runtime and where the choice came from."""

    argv: tuple[str, ...]
    source: CommandSource

    def __post_init__(self) -> None:
        if not self.argv or not self.argv[0]:
            raise EmptyCommand("argv must start with a non-empty program name")


def resolve_command(
    manifest: Optional[Manifest], cli_override: Optional[str]
) -> CommandSpec:
    """Pick the command to run: CLI override > manifest > default shell.

    Command strings are split with POSIX quoting rules on the client, so
    behavior does not depend on any host shell.
    """
    if cli_override is not None:
        return CommandSpec(_split(cli_override), "cli-override")
    if manifest is not None and manifest.command is not None:
        return CommandSpec(_split(manifest.command), "manifest")
    return CommandSpec(DEFAULT_SHELL, "default-shell")


def _split(command: str) -> tuple[str, ...]:
    try:
        words = shlex.split(command, posix=True)
    except ValueError as exc:
        raise EmptyCommand(f"cannot split command {command!r}: {exc}") from exc
    if not words:
        raise EmptyCommand(f"command {command!r} splits to zero words")
    return tuple(words)
