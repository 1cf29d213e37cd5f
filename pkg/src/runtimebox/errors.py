"""Error taxonomy shared by all modules.

Every failure the tool can report is a subclass of :class:`RuntimeboxError`.
The class name is the stable diagnostic name printed by the CLI, and
``exit_code`` classifies the failure for scripting: 1 for user errors
(bad refs, bad flags, bad manifests), 2 for environment errors (kernel,
filesystem, network).
"""

from __future__ import annotations


class RuntimeboxError(Exception):
    """Base class for all tool-reported failures."""

    exit_code = 2

    @property
    def name(self) -> str:
        return type(self).__name__


class UserError(RuntimeboxError):
    """A mistake in user input: malformed refs, flags, manifests."""

    exit_code = 1


class EnvironmentError_(RuntimeboxError):
    """A problem with the host: kernel, filesystem, network."""

    exit_code = 2


# refmodel

class MalformedRef(UserError):
    pass


class ManifestSyntax(UserError):
    pass


class ManifestType(UserError):
    pass


class EmptyCommand(UserError):
    pass


# casstore

class NotWritable(EnvironmentError_):
    pass


class CorruptRepo(EnvironmentError_):
    pass


class XattrUnsupported(EnvironmentError_):
    pass


class IoError(EnvironmentError_):
    pass


class MissingObject(EnvironmentError_):
    pass


class UnsupportedEntry(UserError):
    pass


class CrossDevice(EnvironmentError_):
    pass


class DestNotEmpty(UserError):
    pass


# remote

class DuplicateRemote(UserError):
    pass


class MalformedUrl(UserError):
    pass


class RefNotFound(UserError):
    pass


class DigestMismatch(EnvironmentError_):
    pass


class NetworkError(EnvironmentError_):
    pass


class IncompleteClosure(EnvironmentError_):
    pass


# deploy

class AlreadyDeployed(UserError):
    pass


class SandboxRunning(UserError):
    pass


# sandbox

class MalformedBind(UserError):
    pass


class KernelUnsupported(EnvironmentError_):
    pass


class MountFailed(EnvironmentError_):
    pass


class LaunchFailed(EnvironmentError_):
    pass


# packager

class NotARootTree(UserError):
    pass


class NotInitialised(UserError):
    pass


class EmptyCommit(UserError):
    pass
