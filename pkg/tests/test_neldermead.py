import numpy as np

from enscoh.neldermead import batch_nelder_mead, multistart_minimize


def rosenbrock(X):
    return ((1 - X[:, :-1]) ** 2 + 100 * (X[:, 1:] - X[:, :-1] ** 2) ** 2).sum(axis=1)


def test_rosenbrock_from_many_starts():
    starts = np.random.default_rng(0).uniform(-2, 2, size=(6, 4))
    res = multistart_minimize(rosenbrock, starts)
    assert np.all(res.fun < 1e-12)
    assert np.allclose(res.x, 1, atol=1e-5)


def test_quadratic_converges_and_counts_evaluations():
    calls = []

    def f(X):
        calls.append(len(X))
        return np.sum((X - 3) ** 2, axis=1)

    res = batch_nelder_mead(f, np.zeros((3, 2)))
    assert res.converged.all()
    assert np.allclose(res.x, 3, atol=1e-8)
    assert np.all(res.nfev <= sum(calls))


def test_eval_budget_is_respected():
    res = batch_nelder_mead(rosenbrock, np.full((2, 5), -1.5), max_evals=50)
    assert not res.converged.any()
    assert np.all(res.nfev <= 50 + 5)


def test_restarts_are_independent():
    starts = np.random.default_rng(1).uniform(-2, 2, size=(4, 3))
    together = multistart_minimize(rosenbrock, starts)
    alone = multistart_minimize(rosenbrock, starts[2:3])
    assert np.allclose(together.x[2], alone.x[0])
