import numpy as np
import pytest

from belieffusion import (
    ScenarioConfig,
    ScenarioError,
    betp,
    build_pdb,
    conflict,
    gen_report,
    report_bba,
    run_scenario,
    vacuous,
    validate,
)
from belieffusion.rules import RULES
from belieffusion.scenario import write_trajectory_csv


def make_config(**overrides) -> ScenarioConfig:
    base = dict(
        n_targets=10,
        n_emitters=24,
        emitters_per_target=(2, 4),
        truth_index=3,
        pfa=0.3,
        n_reports=12,
        report_mass=0.8,
        rule="pcr",
        seed=11,
        similar_target=6,
    )
    base.update(overrides)
    return ScenarioConfig(**base)


def fresh_rng(seed=0):
    return np.random.Generator(np.random.PCG64(seed))


class TestBuildPdb:
    def test_deterministic(self):
        cfg = make_config()
        pdb1 = build_pdb(cfg, fresh_rng(cfg.seed))
        pdb2 = build_pdb(cfg, fresh_rng(cfg.seed))
        assert pdb1.emitter_sets == pdb2.emitter_sets
        assert pdb1.x_emitters == pdb2.x_emitters
        assert pdb1.y_emitters == pdb2.y_emitters

    def test_inverse_index(self):
        pdb = build_pdb(make_config(), fresh_rng())
        for e, owners in pdb.emitter_index.items():
            for t in owners:
                assert e in pdb.emitter_sets[t]
        for t, emitters in enumerate(pdb.emitter_sets):
            assert emitters
            for e in emitters:
                assert t in pdb.emitter_index[e]

    def test_similar_target_symmetric_difference(self):
        cfg = make_config()
        for seed in range(20):
            pdb = build_pdb(cfg, fresh_rng(seed))
            truth = pdb.emitter_sets[cfg.truth_index]
            similar = pdb.emitter_sets[cfg.similar_target]
            assert len(truth ^ similar) == 1
            assert similar < truth  # the truth keeps one discriminating emitter

    def test_pools_disjoint_and_nonempty(self):
        for seed in range(20):
            pdb = build_pdb(make_config(), fresh_rng(seed))
            assert pdb.x_emitters
            assert pdb.y_emitters
            assert not set(pdb.x_emitters) & set(pdb.y_emitters)

    def test_pool_too_small(self):
        # Pool no bigger than the truth's own set leaves nothing for Y.
        with pytest.raises(ScenarioError, match="pool"):
            make_config(n_emitters=2).check()

    def test_similar_needs_two_emitters(self):
        with pytest.raises(ScenarioError, match="2 emitters"):
            make_config(emitters_per_target=(1, 4)).check()

    def test_similar_equals_truth(self):
        with pytest.raises(ScenarioError):
            make_config(similar_target=3).check()


class TestGenReport:
    def test_x_reports_contain_truth(self):
        cfg = make_config(pfa=0.0)
        rng = fresh_rng(cfg.seed)
        pdb = build_pdb(cfg, rng)
        for _ in range(50):
            emitter, report_set = gen_report(pdb, cfg, rng)
            assert emitter in pdb.x_emitters
            assert report_set.contains(cfg.truth_index)

    def test_pure_false_alarms_miss_truth_emitters(self):
        cfg = make_config(pfa=1.0)
        rng = fresh_rng(cfg.seed)
        pdb = build_pdb(cfg, rng)
        for _ in range(50):
            emitter, report_set = gen_report(pdb, cfg, rng)
            assert emitter in pdb.y_emitters
            assert not report_set.is_empty

    def test_false_alarm_rate(self):
        cfg = make_config(pfa=0.3)
        rng = fresh_rng(1)
        pdb = build_pdb(cfg, rng)
        draws = 10_000
        y_draws = sum(
            gen_report(pdb, cfg, rng)[0] in pdb.y_emitters for _ in range(draws)
        )
        # binomial 3σ ≈ 0.014 around 0.3
        assert 0.29 <= y_draws / draws <= 0.31

    def test_report_set_is_emitter_owners(self):
        cfg = make_config()
        rng = fresh_rng(cfg.seed)
        pdb = build_pdb(cfg, rng)
        emitter, report_set = gen_report(pdb, cfg, rng)
        assert set(report_set.indices()) == set(pdb.emitter_index[emitter])


class TestReportBba:
    def test_simple_support(self):
        cfg = make_config()
        pdb = build_pdb(cfg, fresh_rng())
        rs = pdb.frame.subset_of_indices([0, 1])
        m = report_bba(rs, pdb.frame, 0.8)
        assert m.mass(rs) == 0.8
        assert m.mass(pdb.frame.full_set()) == pytest.approx(0.2)
        assert validate(m).ok

    def test_categorical_boundary(self):
        cfg = make_config()
        pdb = build_pdb(cfg, fresh_rng())
        rs = pdb.frame.subset_of_indices([0])
        m = report_bba(rs, pdb.frame, 1.0)
        assert m.entries == {rs: 1.0}

    def test_empty_report_rejected(self):
        cfg = make_config()
        pdb = build_pdb(cfg, fresh_rng())
        with pytest.raises(ValueError):
            report_bba(pdb.frame.empty_set(), pdb.frame, 0.8)

    def test_pignistic_spread(self):
        cfg = make_config()
        pdb = build_pdb(cfg, fresh_rng())
        rs = pdb.frame.subset_of_indices([0, 1])
        p = betp(report_bba(rs, pdb.frame, 0.8))
        n = pdb.frame.size
        assert p.probs[0] == pytest.approx(0.8 / 2 + 0.2 / n, abs=1e-12)
        assert p.probs[5] == pytest.approx(0.2 / n, abs=1e-12)


class TestRunScenario:
    def test_empty_fold(self):
        result = run_scenario(make_config(n_reports=0))
        assert result.records == ()
        assert result.failed_at is None
        assert result.final_state.entries == vacuous(result.pdb.frame).entries

    def test_trajectory_shape(self):
        cfg = make_config()
        result = run_scenario(cfg)
        assert len(result.records) == cfg.n_reports
        for i, r in enumerate(result.records, start=1):
            assert r.step == i
            assert 0.0 <= r.conflict_k12 <= 1.0
            assert 0.0 <= r.betp_truth <= 1.0
            assert 0.0 <= r.betp_similar <= 1.0

    def test_perfect_sensor_identifies_truth(self):
        for seed in range(25):
            cfg = make_config(pfa=0.0, rule="pcr", seed=seed, n_reports=15)
            result = run_scenario(cfg)
            assert result.records[-1].decided_index == cfg.truth_index

    def test_report_stream_independent_of_rule(self):
        streams = {
            rule: run_scenario(make_config(rule=rule)).reports
            for rule in ("dempster", "dubois-prade", "sacr", "pcr")
        }
        baseline = streams["dempster"]
        assert all(s == baseline for s in streams.values())

    def test_intermediate_states_valid(self):
        for rule in ("dempster", "dubois-prade", "sacr", "pcr", "yager", "inagaki"):
            cfg = make_config(rule=rule)
            result = run_scenario(cfg)
            state = vacuous(result.pdb.frame)
            for emitter, report_set in result.reports:
                rb = report_bba(report_set, result.pdb.frame, cfg.report_mass)
                state = RULES[rule](state, rb)
                report = validate(state)
                assert report.ok, (rule, report.violations)

    def test_recorded_conflict_matches_refold(self):
        cfg = make_config()
        result = run_scenario(cfg)
        state = vacuous(result.pdb.frame)
        for record, (emitter, report_set) in zip(result.records, result.reports):
            rb = report_bba(report_set, result.pdb.frame, cfg.report_mass)
            assert record.conflict_k12 == conflict(state, rb).total
            state = RULES[cfg.rule](state, rb)

    def test_smets_rejected(self):
        with pytest.raises(ScenarioError, match="smets"):
            run_scenario(make_config(rule="smets"))

    def test_dempster_total_conflict_truncates(self):
        # Categorical reports make the first contradictory report fatal.
        cfg = make_config(rule="dempster", report_mass=1.0, n_reports=25, seed=3)
        result = run_scenario(cfg)
        assert result.failed_at == 3
        assert len(result.records) == result.failed_at - 1

    def test_csv_deterministic(self, tmp_path):
        cfg = make_config()
        paths = []
        for name in ("a.csv", "b.csv"):
            path = tmp_path / name
            write_trajectory_csv(str(path), run_scenario(cfg))
            paths.append(path.read_bytes())
        assert paths[0] == paths[1]
