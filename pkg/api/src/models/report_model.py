"""
report_model.py

Modelos do relatório de uma suíte e o esquema JSON com que todo relatório é
validado antes de ser escrito.

Classes:
    CheckOutcome: resultado de uma verificação individual.
    SuiteReport: o relatório completo de uma suíte.

Functions:
    witness_json(witness): serializa uma testemunha, truncando em 50 registros.
"""

from pydantic import BaseModel, computed_field
from typing import Any, Optional

import jsonschema

from src.algebra.freealg import MultiTensor
from src.algebra.traces import WordFunctional

WITNESS_LIMIT = 50

REPORT_SCHEMA = {
    'type': 'object',
    'required': ['suite', 'config', 'checks', 'version', 'passed'],
    'properties': {
        'suite': {'type': 'string'},
        'config': {'type': 'object'},
        'version': {'type': 'string'},
        'passed': {'type': 'boolean'},
        'checks': {
            'type': 'array',
            'items': {
                'type': 'object',
                'required': ['name', 'status', 'millis'],
                'properties': {
                    'name': {'type': 'string'},
                    'status': {'enum': ['pass', 'fail']},
                    'witness': {},
                    'detail': {},
                    'millis': {'type': ['number', 'null']},
                },
            },
        },
    },
}


def witness_json(witness: Any) -> Any:
    """
    Forma JSON de uma testemunha: tensores viram registros {coeff, words},
    truncados em WITNESS_LIMIT com a marca "truncated".
    """
    if isinstance(witness, MultiTensor):
        return {
            'legs': witness.legs,
            'terms': len(witness),
            'records': witness.to_records(WITNESS_LIMIT),
            'truncated': len(witness) > WITNESS_LIMIT,
        }
    if isinstance(witness, WordFunctional):
        items = list(witness.to_json().items())
        return {
            'terms': len(items),
            'records': dict(items[:WITNESS_LIMIT]),
            'truncated': len(items) > WITNESS_LIMIT,
        }
    return witness


class CheckOutcome(BaseModel):
    """
    Attrs:
        name (str): nome da verificação.
        status (str): "pass" ou "fail".
        witness (Optional[Any]): testemunha já serializada.
        detail (Optional[Any]): dados auxiliares (por exemplo o sistema linear).
        millis (Optional[float]): duração, só quando pedida.
    """
    name: str
    status: str
    witness: Optional[Any] = None
    detail: Optional[Any] = None
    millis: Optional[float] = None

    model_config = {
        'extra': 'forbid'
    }

    def to_json(self) -> dict:
        data = {'name': self.name, 'status': self.status}
        if self.witness is not None:
            data['witness'] = self.witness
        if self.detail is not None:
            data['detail'] = self.detail
        data['millis'] = self.millis
        return data


class SuiteReport(BaseModel):
    """
    Attrs:
        suite (str): nome da suíte.
        config (dict): eco da configuração efetiva.
        checks (list[CheckOutcome]): verificações na ordem de declaração.
        version (str): versão da ferramenta.
    """
    suite: str
    config: dict
    checks: list[CheckOutcome]
    version: str

    @computed_field
    def passed(self) -> bool:
        return all(check.status == 'pass' for check in self.checks)

    @property
    def exit_code(self) -> int:
        return 0 if self.passed else 1

    def to_json(self) -> dict:
        """
        Dicionário do relatório validado contra REPORT_SCHEMA.

        Raises:
            jsonschema.ValidationError: se o relatório não seguir o esquema.
        """
        data = {
            'suite': self.suite,
            'config': self.config,
            'checks': [check.to_json() for check in self.checks],
            'version': self.version,
            'passed': self.passed,
        }
        jsonschema.validate(data, REPORT_SCHEMA)
        return data
