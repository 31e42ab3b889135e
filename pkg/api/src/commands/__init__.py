from .cli import verify
