"""HTTP service wrapper around the analysis pipeline."""

from .app import app, create_app

__all__ = ["app", "create_app"]
