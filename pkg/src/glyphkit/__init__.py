"""Pattern hyphenation, ligature rewriting with loop checks, and pen digitization."""

from importlib import resources

__version__ = "0.1.0"


def data_path(name: str):
    """Path of a file bundled under ``glyphkit/data``."""
    return resources.files(__name__).joinpath("data", name)
