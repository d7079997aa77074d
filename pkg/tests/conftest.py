import pytest

from hcb2 import ModelParams, gibbs_density, solve_gap


@pytest.fixture(scope="session")
def std_params():
    # reference condensed point used throughout: safely past the transition
    return ModelParams(t=-1.0, U=0.25, beta=4.0)


@pytest.fixture(scope="session")
def std_solution(std_params):
    return solve_gap(std_params)


@pytest.fixture(scope="session")
def std_rho(std_params, std_solution):
    return gibbs_density(std_params, std_solution.lambda_mod)
