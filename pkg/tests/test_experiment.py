import math

import pytest

from domcount.experiment import (
    BUDGET_MARKER,
    CSV_COLUMNS,
    ConfigError,
    ExperimentConfig,
    parse_config,
    rows_to_csv,
    run_experiment,
    serialize_config,
)


def gjj_config(**over):
    base = dict(
        model="gjj", gamma_target=3, n_list=(9,), trials=1, seed=5,
        k_list=(2, 3), mode="exact",
    )
    base.update(over)
    return ExperimentConfig(**base)


def er_config(**over):
    base = dict(
        model="er", gamma_target=2, n_list=(20,), trials=3, seed=11,
        k_list=(2,), mode="exact",
    )
    base.update(over)
    return ExperimentConfig(**base)


def test_extremal_run_example():
    rows = run_experiment(gjj_config())
    assert len(rows) == 2
    assert [r.dominating_count for r in rows] == [0, 45]
    assert all(r.gamma_measured == 3 for r in rows)
    assert rows[0].k == 2 and rows[1].k == 3


def test_forced_p_example():
    cfg = er_config(gamma_target=2, n_list=(5,), trials=3, k_list=(1,), p=1.0)
    rows = run_experiment(cfg)
    assert len(rows) == 3
    assert all(r.dominating_count == 5 for r in rows)
    assert all(r.gamma_measured == 1 for r in rows)
    assert all(r.formula_expected == 5.0 for r in rows)


def test_rows_sorted_and_seeds_derived():
    cfg = er_config(trials=4, k_list=(2, 3))
    rows = run_experiment(cfg)
    assert len(rows) == 8
    # (trial, k) order; trial identity shows through the derived seed column.
    seeds = [r.seed for r in rows]
    assert seeds[0] == seeds[1] and seeds[2] == seeds[3]
    assert len(set(seeds)) == 4
    assert [r.k for r in rows] == [2, 3] * 4


def test_multi_n_order():
    cfg = er_config(n_list=(10, 20), trials=2, k_list=(2,))
    rows = run_experiment(cfg)
    assert [r.n for r in rows] == [10, 10, 20, 20]
    # Seeds never collide across (n, trial) cells.
    assert len({r.seed for r in rows}) == 4


def test_exact_row_invariants():
    cfg = er_config(n_list=(16,), trials=6, k_list=(1, 2, 3))
    for r in run_experiment(cfg):
        assert 0 <= r.dominating_count <= math.comb(r.n, r.k)
        assert r.fraction == r.dominating_count / math.comb(r.n, r.k)
        assert (r.dominating_count == 0) == (r.k < r.gamma_measured)


def test_csv_byte_identical_and_parallel():
    cfg = er_config(trials=6, k_list=(2, 3))
    a = rows_to_csv(run_experiment(cfg))
    b = rows_to_csv(run_experiment(cfg))
    c = rows_to_csv(run_experiment(cfg, jobs=4))
    assert a == b == c


def test_csv_header_fixed():
    text = rows_to_csv(run_experiment(gjj_config()))
    header = text.splitlines()[0]
    assert header == ",".join(CSV_COLUMNS)
    # elapsed_ms stays blank unless timing is requested.
    for line in text.splitlines()[1:]:
        assert line.endswith(",")


def test_csv_timing_opt_in():
    rows = run_experiment(gjj_config())
    text = rows_to_csv(rows, timing=True)
    for line in text.splitlines()[1:]:
        assert not line.endswith(",")


def test_budget_marker_keeps_running():
    cfg = er_config(n_list=(30,), trials=2, k_list=(4, 1))
    rows = run_experiment(cfg, budget=200)
    assert len(rows) == 4
    marked = [r for r in rows if r.error == BUDGET_MARKER]
    clean = [r for r in rows if r.error is None]
    assert {r.k for r in marked} == {4}
    assert {r.k for r in clean} == {1}
    text = rows_to_csv(rows)
    assert BUDGET_MARKER in text


def test_sample_mode():
    cfg = er_config(
        n_list=(25,), trials=2, k_list=(3,), mode="sample", trials_per_graph=400
    )
    rows = run_experiment(cfg)
    assert len(rows) == 2
    for r in rows:
        assert r.dominating_count is None
        assert 0.0 <= r.fraction <= 1.0
    again = run_experiment(cfg)
    assert [r.fraction for r in rows] == [r.fraction for r in again]


def test_config_roundtrip_minimal():
    cfg = gjj_config()
    assert parse_config(serialize_config(cfg)) == cfg


def test_config_roundtrip_all_fields():
    cfg = er_config(
        n_list=(50, 100), trials=7, k_list=(2, 3, 4), mode="sample",
        trials_per_graph=123, delta=0.5,
    )
    assert parse_config(serialize_config(cfg)) == cfg
    cfg2 = er_config(epsilon=0.125)
    assert parse_config(serialize_config(cfg2)) == cfg2
    cfg3 = er_config(p=0.875)
    assert parse_config(serialize_config(cfg3)) == cfg3


def test_config_parse_rejects_unknown_key():
    with pytest.raises(ConfigError, match="nn_list"):
        parse_config("model = er\nnn_list = 5\n")


def test_config_parse_rejects_missing_required():
    with pytest.raises(ConfigError):
        parse_config("model = er\n")


def test_validation_names_fields():
    with pytest.raises(ConfigError, match="model"):
        ExperimentConfig(model="grid", gamma_target=3, n_list=(9,), trials=1,
                         seed=0, k_list=(3,), mode="exact")
    with pytest.raises(ConfigError, match="n"):
        gjj_config(n_list=(10,))
    with pytest.raises(ConfigError, match="n"):
        gjj_config(n_list=(6,))
    with pytest.raises(ConfigError, match="gamma_target"):
        gjj_config(gamma_target=2)
    with pytest.raises(ConfigError, match="k_list"):
        er_config(k_list=(0,))
    with pytest.raises(ConfigError, match="k_list"):
        er_config(n_list=(5,), k_list=(6,))
    with pytest.raises(ConfigError, match="trials_per_graph"):
        er_config(mode="sample")
    with pytest.raises(ConfigError, match="trials_per_graph"):
        er_config(trials_per_graph=10)
    with pytest.raises(ConfigError, match="mode"):
        er_config(mode="approximate")
    with pytest.raises(ConfigError, match="delta"):
        er_config(delta=0.0)
    with pytest.raises(ConfigError):
        er_config(p=0.5, epsilon=0.5)
    with pytest.raises(ConfigError, match="not meaningful for model gjj"):
        gjj_config(p=0.5)


def test_epsilon_resolution():
    assert er_config(p=0.8).effective_epsilon(20) == pytest.approx(0.2)
    assert er_config(epsilon=0.3).effective_epsilon(20) == 0.3
    from domcount.generate import ensemble_epsilon

    assert er_config().effective_epsilon(1000) == ensemble_epsilon(2, 1000, 1.0)
    assert er_config(delta=0.5).effective_epsilon(1000) == ensemble_epsilon(
        2, 1000, 0.5
    )


def test_formula_columns_present_for_er():
    rows = run_experiment(er_config(n_list=(30,), trials=1, k_list=(2,)))
    r = rows[0]
    assert r.formula_expected is not None and r.formula_expected >= 0.0
    assert r.formula_sd is not None and r.formula_sd >= 0.0
    assert r.epsilon is not None and r.p == pytest.approx(1 - r.epsilon)


def test_extremal_rows_have_no_formula():
    rows = run_experiment(gjj_config())
    assert all(r.formula_expected is None for r in rows)
    assert all(r.epsilon is None for r in rows)
