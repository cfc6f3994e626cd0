import math

import minimax_dsac as md


def test_env_rollout_terminates_with_consistent_return():
    env = md.IntersectionEnv(md.EnvConfig(), seed=3)
    obs = env.reset()
    assert obs.shape == (6,)
    assert obs[0] == 1.0
    total, steps, done, outcome = 0.0, 0, False, ""
    while not done:
        obs, reward, done, outcome = env.step(3.0, env.scripted_adversary("conservative"))
        total += reward
        steps += 1
    if outcome == "pass":
        assert total == 110 - (steps - 1)
    elif outcome == "collision":
        assert total == -110 - (steps - 1)
    else:
        assert steps == 200


def test_config_round_trip_and_validation():
    cfg = md.TrainConfig.parse("seed = 4\nhidden_widths = 8,8\nalgo = dsac\n")
    assert cfg.seed == 4
    assert cfg.hidden_widths == [8, 8]
    assert cfg.algorithm == "dsac"
    again = md.TrainConfig.parse(cfg.serialize())
    assert again.serialize() == cfg.serialize()
    assert "env.dt" in md.config_keys()


def test_tiny_training_run(tmp_path):
    cfg = md.TrainConfig.parse(
        "total_steps = 200\nbatch_size = 16\nbuffer_capacity = 32\n"
        "hidden_widths = 8\neval_episodes = 2\nlog_interval = 100\neval_interval = 100\n")
    rows = []
    result = md.train(cfg, str(tmp_path / "run"), rows.append)
    assert [r["env_steps"] for r in rows] == [100, 200]
    assert len(result["evaluations"]) == 4
    assert (tmp_path / "run" / "training.csv").exists()
    summary = md.evaluate_checkpoint(str(tmp_path / "run" / "final.ckpt"), "aggressive", 3, 1)
    assert len(summary["returns"]) == 3
    assert all(-309 <= r <= 110 for r in summary["returns"])


def test_welch():
    t, p, df = md.welch_t_test([1.0, 2.0, 3.0], [101.0, 102.0, 103.0])
    assert t < 0 and p < 1e-6 and math.isclose(df, 4.0)
