import os


def pytest_addoption(parser):
    parser.addoption("--bits", action="store", default="192")
    parser.addoption("--seed", action="store", default="")


def pytest_generate_tests(metafunc):
    seed = metafunc.config.option.seed or os.environ.get("SKEIN_TEST_SEED")
    seed = int(seed) if seed else 20240917

    if "bits" in metafunc.fixturenames:
        metafunc.parametrize("bits", [int(metafunc.config.option.bits)])

    if "seed" in metafunc.fixturenames:
        metafunc.parametrize("seed", [seed])
