from .swagger import configure_swagger