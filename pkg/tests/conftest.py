import json
from pathlib import Path

import pytest

from gammag.core import GammaMagma, load_structure
from gammag.finder import SearchSpec, enumerate_models

REPO_ROOT = Path(__file__).resolve().parent.parent
CORPUS_DIR = REPO_ROOT / "corpus"


@pytest.fixture(scope="session")
def ir5():
    return load_structure(CORPUS_DIR / "ir5.json")


@pytest.fixture(scope="session")
def ag9():
    return load_structure(CORPUS_DIR / "ag9.json")


@pytest.fixture(scope="session")
def m2():
    # order-2 constant table: element 1 has no factorization
    return GammaMagma(order=2, gamma=("a",), tables=(((0, 0), (0, 0)),))


@pytest.fixture(scope="session")
def li_models_small():
    """Every left-invertive model at n <= 3, k <= 2, elements_only."""
    out = []
    for n in (1, 2, 3):
        for k in (1, 2):
            spec = SearchSpec(order=n, gamma_count=k, laws=("left_invertive",))
            out.extend(enumerate_models(spec))
    return out


@pytest.fixture(scope="session")
def ss_models_small():
    """Every left-invertive + ag_star_star model at n <= 3, k <= 2."""
    out = []
    for n in (1, 2, 3):
        for k in (1, 2):
            spec = SearchSpec(
                order=n, gamma_count=k, laws=("left_invertive", "ag_star_star")
            )
            out.extend(enumerate_models(spec))
    return out


@pytest.fixture(scope="session")
def intra_ss_models_3():
    """Order-3 single-label models with both laws and intra-regularity."""
    spec = SearchSpec(
        order=3, gamma_count=1, laws=("left_invertive", "ag_star_star"),
        intra_regular=True,
    )
    return list(enumerate_models(spec))


@pytest.fixture()
def m2_file(tmp_path, m2):
    p = tmp_path / "m2.json"
    p.write_text(json.dumps(m2.to_dict()))
    return p
