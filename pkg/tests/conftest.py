from __future__ import annotations

import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from simpgrp.groups import cyclic_group, symmetric_group_3
from simpgrp.simplicial import (
    constant_simplicial_group,
    product_simplicial_group,
    translation_simplicial_group,
)

# Constant fixtures verify up to dimension 4, translation-backed ones up to 3;
# the degeneracy direction needs one level beyond the top dimension.
CONSTANT_MAX_LEVEL = 5
TRANSLATION_MAX_LEVEL = 4


@pytest.fixture(scope="session")
def constant_c1():
    return constant_simplicial_group(cyclic_group(1), CONSTANT_MAX_LEVEL)


@pytest.fixture(scope="session")
def constant_c2():
    return constant_simplicial_group(cyclic_group(2), CONSTANT_MAX_LEVEL)


@pytest.fixture(scope="session")
def constant_c3():
    return constant_simplicial_group(cyclic_group(3), CONSTANT_MAX_LEVEL)


@pytest.fixture(scope="session")
def constant_s3():
    return constant_simplicial_group(symmetric_group_3(), CONSTANT_MAX_LEVEL)


@pytest.fixture(scope="session")
def translation_c2():
    return translation_simplicial_group(cyclic_group(2), TRANSLATION_MAX_LEVEL)


@pytest.fixture(scope="session")
def translation_c3():
    return translation_simplicial_group(cyclic_group(3), TRANSLATION_MAX_LEVEL)


@pytest.fixture(scope="session")
def product_fixture():
    return product_simplicial_group(
        translation_simplicial_group(cyclic_group(2), TRANSLATION_MAX_LEVEL),
        constant_simplicial_group(cyclic_group(2), TRANSLATION_MAX_LEVEL),
    )


@pytest.fixture(scope="session")
def constant_fixtures(constant_c1, constant_c2, constant_c3, constant_s3):
    return {
        "constant:C1": constant_c1,
        "constant:C2": constant_c2,
        "constant:C3": constant_c3,
        "constant:S3": constant_s3,
    }


@pytest.fixture(scope="session")
def translation_fixtures(translation_c2, translation_c3, product_fixture):
    return {
        "translation:C2": translation_c2,
        "translation:C3": translation_c3,
        "product:translation:C2,constant:C2": product_fixture,
    }


@pytest.fixture(scope="session")
def all_fixtures(constant_fixtures, translation_fixtures):
    return {**constant_fixtures, **translation_fixtures}
