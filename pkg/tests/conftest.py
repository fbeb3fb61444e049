# tests/conftest.py
import sys
from pathlib import Path

import pytest

# Adiciona o diretório raiz ao path do Python
root_dir = Path(__file__).parent.parent.absolute()
sys.path.insert(0, str(root_dir))

from src.application.usecases.verification_usecases import SuitePorts
from src.domain.entities.model import Model
from src.domain.services.grid_encoding import make_torus_hat_model
from src.infrastructure.parsing.text_codec import TextCodec
from src.infrastructure.search.backtracking_model_finder import BacktrackingModelFinder
from src.infrastructure.search.naive_model_finder import NaiveModelFinder


@pytest.fixture
def chain_model():
    """Cadeia 0 -> 1 com p verdadeira só em 1."""
    return Model.create(2, [(0, 1)], {"p": [1]})


@pytest.fixture
def reflexive_clique():
    return Model.create(2, [(0, 0), (0, 1), (1, 0), (1, 1)])


@pytest.fixture
def checkerboard_cells():
    return {(i, j) for i in range(8) for j in range(4) if (i + j) % 2 == 0}


@pytest.fixture(scope="session")
def hat_torus():
    """Toro hat-M 8×4 sem variáveis de base."""
    return make_torus_hat_model(8, 4)


@pytest.fixture
def codec():
    return TextCodec()


@pytest.fixture
def suite_ports(codec):
    """Dependências das baterias como a CLI as monta."""
    return SuitePorts(
        codec=codec,
        primary_finder=BacktrackingModelFinder(
            frame_limit=0, time_limit_seconds=0, workers=1, canonical_only=False,
        ),
        oracle_finder=NaiveModelFinder(),
    )
