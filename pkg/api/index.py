"""
index.py

Módulo principal da API. Inicializa a aplicação Flask importando as
configurações, o Swagger e o blueprint das verificações, e registra o grupo de
comandos click em app.cli, de modo que "flask --app api/index.py verify ..."
equivale a "python api/cli.py ...".

Também é responsável por executar a aplicação no servidor.

Rotas:
- / : rota principal da API flask.
"""

from flask import Flask
from src.config import ConfigProd, CustomJSONProvider, configure_logging
from src.routes import verification_bp
from src.docs import configure_swagger
from src.commands import verify

app = Flask(__name__)
app.config.from_object(ConfigProd)
configure_logging(app.config['LOG_LEVEL'])
configure_swagger(app)
app.json = CustomJSONProvider(app)
app.register_blueprint(verification_bp)
app.cli.add_command(verify)


@app.route('/')
def home() -> str:
    """
    Rota principal da aplicação, faz uma saudação, apresenta a API e exibe os
    links de ajuda.

    Returns:
        str: informações sobre a API.
    """
    return (
        "Welcome to the PR quasi-Lie bialgebra verifier! Visit /apidocs for a "
        "user-friendly interface using Swagger UI to run the suites, or check "
        "out /suites/help for the valid suites, their default truncation order "
        "and degree, and examples of how to use the API."
    )


if __name__ == '__main__':
    app.run(debug=True)
