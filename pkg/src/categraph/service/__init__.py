from .app import create_app
from .sessions import Session, SessionStore

__all__ = ["Session", "SessionStore", "create_app"]
