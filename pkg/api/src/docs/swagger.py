"""
swagger.py

Este módulo inicializa e configura o Swagger na aplicação Flask, permitindo a
documentação e o teste dos endpoints de verificação através da interface
Swagger UI.

Functions:
    configure_swagger(app): Configura e inicializa o Swagger na API.

        Params:
            app: instância da aplicação Flask.

        Returns:
            None
"""

from flasgger import Swagger

from src.config import VERSION


def configure_swagger(app) -> None:
    """
    Inicializa e configura o Swagger com a aplicação Flask.

        Params:
            app: instância da aplicação Flask.

        Returns:
            None
    """
    swagger_config = {
        "swagger": "2.0",
        "info": {
            "title": "PR quasi-Lie bialgebra verifier",
            "description": (
                "Verificação em aritmética exata da bialgebra quase-Lie de "
                "Pohlmeyer-Rehren e das suas quantizações quase-Hopf"
            ),
            "version": VERSION
        },
        "tags": [
            {"name": "Suites", "description": "Suítes de verificação"},
            {"name": "Compute", "description": "Computações avulsas"}
        ]
    }

    Swagger(app, template=swagger_config)
