import random

import pytest

from qrank import MatrixFq, all_codes, code_from_generators, gf_new, random_code


@pytest.fixture(scope="session")
def F2():
    return gf_new(2)


@pytest.fixture(scope="session")
def F3():
    return gf_new(3)


@pytest.fixture(scope="session")
def F4():
    return gf_new(2, 2)


@pytest.fixture(scope="session")
def full_2x2_f2(F2):
    return code_from_generators(
        [MatrixFq.unit(F2, 2, 2, i, j) for i in range(2) for j in range(2)]
    )


@pytest.fixture(scope="session")
def zero_2x2_f2(F2):
    return code_from_generators([], field=F2, n=2, m=2)


@pytest.fixture(scope="session")
def e11_2x2_f2(F2):
    return code_from_generators([MatrixFq.unit(F2, 2, 2, 0, 0)])


@pytest.fixture(scope="session")
def i2_2x2_f2(F2):
    return code_from_generators([MatrixFq.identity(F2, 2)])


@pytest.fixture(scope="session")
def corpus_2x2_f2(F2):
    return list(all_codes(2, 2, F2))


@pytest.fixture(scope="session")
def corpus_2x2_f3(F3):
    return list(all_codes(2, 2, F3))


@pytest.fixture(scope="session")
def corpus_3x2_f2(F2):
    return list(all_codes(3, 2, F2))


RANDOM_CORPUS_SEED = 20260823


@pytest.fixture(scope="session")
def random_corpus(F2, F3, F4):
    """200 seeded random codes: 50 each in Mat(3x2,F_2), Mat(3x3,F_2),
    Mat(2x2,F_3), Mat(2x2,F_4)."""
    rng = random.Random(RANDOM_CORPUS_SEED)
    corpus = []
    for n, m, field in [(3, 2, F2), (3, 3, F2), (2, 2, F3), (2, 2, F4)]:
        for _ in range(50):
            dim = rng.randrange(n * m + 1)
            corpus.append(random_code(n, m, field, dim, rng))
    return corpus
