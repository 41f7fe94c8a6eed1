#include <doctest.h>

#include <random>

#include "lteval/dataset_io.hpp"
#include "lteval/measures.hpp"
#include "lteval/redetect.hpp"
#include "lteval/report.hpp"
#include "lteval/simtrackers.hpp"
#include "support.hpp"

using namespace lteval;

namespace {

// visible 0..14 at one spot, gone 15..19, back 20..39 far away
SequenceTruth reappearance_truth() {
    SequenceTruth seq;
    seq.name = "reappear";
    const Box first{10, 10, 30, 30};
    const Box second{300, 300, 30, 30};
    for (int t = 0; t < 40; ++t) {
        if (t < 15) {
            seq.frames.push_back({first});
        } else if (t < 20) {
            seq.frames.push_back({std::nullopt});
        } else {
            seq.frames.push_back({second});
        }
    }
    seq.width = 400;
    seq.height = 400;
    return seq;
}

SequenceTruth redetect_truth(std::size_t n_frames) {
    SequenceTruth seq;
    seq.name = "synthetic";
    const Box target{10, 10, 20, 20};
    const Box displaced{280, 220, 20, 20};
    for (std::size_t t = 0; t < n_frames; ++t) {
        seq.frames.push_back({t < redetect_displacement_frame ? target : displaced});
    }
    seq.width = 300;
    seq.height = 240;
    return seq;
}

double f_star_of(const SequenceTruth& truth, const TrackerRun& run) {
    return evaluate_tracker({truth}, {run}, 25).f_star;
}

} // namespace

TEST_CASE("simulation is deterministic") {
    std::mt19937 rng(3);
    const auto truth = support::random_truth(rng, 10, 40);
    for (auto kind : {SimKind::oracle, SimKind::st0_drift, SimKind::st0_jitter, SimKind::lt0,
                      SimKind::lt1}) {
        SimModel model;
        model.kind = kind;
        model.overlap_targets = {0.6};
        model.redetect_delay = 2;
        model.seed = 42;
        const auto a = serialize_results(simulate(model, truth).frames);
        const auto b = serialize_results(simulate(model, truth).frames);
        CHECK(a == b);
    }
}

TEST_CASE("the oracle scores a perfect F") {
    const auto truth = reappearance_truth();
    SimModel model;
    model.kind = SimKind::oracle;
    CHECK(f_star_of(truth, simulate(model, truth)) == 1.0);
}

TEST_CASE("prescribed overlaps are achieved exactly per visible frame") {
    SequenceTruth truth;
    truth.name = "static";
    const Box gt{0, 0, 10, 10};
    truth.frames = {{gt}, {gt}, {gt}, {gt}};
    truth.width = truth.height = 10;

    SimModel model;
    model.kind = SimKind::st0_jitter;
    model.overlap_targets = {1.0, 0.5, 0.5};
    const auto run = simulate(model, truth);
    REQUIRE(run.frames.size() == 4);
    CHECK(overlap(run.frames[0].region, truth.frames[0].region) == 1.0);
    CHECK(overlap(run.frames[1].region, truth.frames[1].region) == doctest::Approx(1.0));
    CHECK(overlap(run.frames[2].region, truth.frames[2].region) == doctest::Approx(0.5));
    CHECK(overlap(run.frames[3].region, truth.frames[3].region) == doctest::Approx(0.5));

    // max-F equals the mean overlap of the scored frames: (1 + 0.5 + 0.5) / 3
    const auto curve = sequence_curve(run, truth, threshold_axis({run}, 10));
    CHECK(max_f(curve).f == doctest::Approx(2.0 / 3.0).epsilon(1e-9));
}

TEST_CASE("seed changes the jitter direction but not the overlap") {
    std::mt19937 rng(17);
    auto truth = support::random_truth(rng, 10, 30);
    for (auto& frame : truth.frames) {
        if (!frame.region.has_value()) {
            frame.region = support::random_box(rng);
        }
    }
    SimModel a;
    a.kind = SimKind::st0_jitter;
    a.overlap_targets = {0.7};
    a.seed = 1;
    SimModel b = a;
    b.seed = 2;
    const auto run_a = simulate(a, truth);
    const auto run_b = simulate(b, truth);
    bool differs = false;
    for (std::size_t t = 1; t < truth.frames.size(); ++t) {
        CHECK(overlap(run_a.frames[t].region, truth.frames[t].region) == doctest::Approx(0.7));
        CHECK(overlap(run_b.frames[t].region, truth.frames[t].region) == doctest::Approx(0.7));
        if (run_a.frames[t].region != run_b.frames[t].region) {
            differs = true;
        }
    }
    CHECK(differs);
}

TEST_CASE("st0_drift freezes at the first disappearance") {
    const auto truth = reappearance_truth();
    SimModel model;
    model.kind = SimKind::st0_drift;
    const auto run = simulate(model, truth);
    const Box frozen{10, 10, 30, 30};
    for (std::size_t t = 15; t < 40; ++t) {
        REQUIRE(run.frames[t].region.has_value());
        CHECK(*run.frames[t].region == frozen);
    }
    // the frozen box never overlaps the reappeared target
    const auto point = pr_re_at(run, truth, 0.0);
    CHECK(point.re == doctest::Approx(14.0 / 34.0));
}

TEST_CASE("st0_jitter repeats the stale box while the target is gone") {
    const auto truth = reappearance_truth();
    SimModel model;
    model.kind = SimKind::st0_jitter;
    const auto run = simulate(model, truth);
    for (std::size_t t = 15; t < 20; ++t) {
        REQUIRE(run.frames[t].region.has_value());
        CHECK(*run.frames[t].region == *run.frames[14].region);
    }
    // and relocks once the target is visible again
    CHECK(overlap(run.frames[20].region, truth.frames[20].region) == doctest::Approx(1.0));
}

TEST_CASE("lt0 reports absence while lost and cannot reattach across a jump") {
    const auto truth = reappearance_truth();
    SimModel model;
    model.kind = SimKind::lt0;
    const auto run = simulate(model, truth);
    for (std::size_t t = 15; t < 40; ++t) {
        CHECK_FALSE(run.frames[t].region.has_value());
        CHECK(run.frames[t].score == doctest::Approx(0.1));
    }
}

TEST_CASE("lt0 reattaches when the target reappears over its frozen box") {
    SequenceTruth truth;
    truth.name = "overlap_return";
    const Box spot{10, 10, 30, 30};
    const Box near{20, 20, 30, 30};  // overlaps the frozen box
    for (int t = 0; t < 6; ++t) {
        truth.frames.push_back({spot});
    }
    truth.frames.push_back({std::nullopt});
    truth.frames.push_back({std::nullopt});
    for (int t = 0; t < 4; ++t) {
        truth.frames.push_back({near});
    }
    truth.width = truth.height = 100;

    SimModel model;
    model.kind = SimKind::lt0;
    const auto run = simulate(model, truth);
    CHECK_FALSE(run.frames[6].region.has_value());
    CHECK_FALSE(run.frames[7].region.has_value());
    REQUIRE(run.frames[8].region.has_value());
    CHECK(overlap(run.frames[8].region, truth.frames[8].region) == doctest::Approx(1.0));
}

TEST_CASE("lt1 reacquires a fixed delay after reappearance") {
    const auto truth = reappearance_truth();
    SimModel model;
    model.kind = SimKind::lt1;
    model.redetect_delay = 3;
    const auto run = simulate(model, truth);
    for (std::size_t t = 15; t < 23; ++t) {
        CHECK_FALSE(run.frames[t].region.has_value());
    }
    for (std::size_t t = 23; t < 40; ++t) {
        REQUIRE(run.frames[t].region.has_value());
        CHECK(overlap(run.frames[t].region, truth.frames[t].region) == doctest::Approx(1.0));
    }

    model.redetect_delay = 0;
    const auto instant = simulate(model, truth);
    REQUIRE(instant.frames[20].region.has_value());
    CHECK(overlap(instant.frames[20].region, truth.frames[20].region) == doctest::Approx(1.0));
}

TEST_CASE("simulators on the synthetic re-detection sequence") {
    const auto truth = redetect_truth(105);

    for (std::size_t delay : {std::size_t{0}, std::size_t{3}, std::size_t{79}}) {
        SimModel model;
        model.kind = SimKind::lt1;
        model.redetect_delay = delay;
        const auto run = simulate(model, truth);
        const auto outcome = judge_redetection(run, truth.frames, 0.5);
        CHECK(outcome.success);
        CHECK(outcome.frames_to_redetect == delay);
    }

    SimModel st0;
    st0.kind = SimKind::st0_drift;
    const auto frozen = simulate(st0, truth);
    CHECK_FALSE(judge_redetection(frozen, truth.frames, 0.5).success);
}

TEST_CASE("campaign over many seeds matches the per-model contract") {
    const auto truth = redetect_truth(105);

    SUBCASE("every seed re-detected at the same delay") {
        SimModel model;
        model.kind = SimKind::lt1;
        model.redetect_delay = 79;
        std::vector<SequenceTruth> seeds;
        std::vector<TrackerRun> runs;
        for (int i = 0; i < 35; ++i) {
            auto seq = truth;
            seq.name = "seed" + std::to_string(i);
            runs.push_back(simulate(model, seq));
            seeds.push_back(std::move(seq));
        }
        const auto summary = redetect_campaign(seeds, runs, 0.5);
        CHECK(summary.seeds == 35);
        CHECK(summary.successes == 35);
        CHECK(summary.mean_frames == doctest::Approx(79.0));
    }

    SUBCASE("mixed immediate successes and failures") {
        SimModel instant;
        instant.kind = SimKind::lt1;
        instant.redetect_delay = 0;
        SimModel frozen;
        frozen.kind = SimKind::st0_drift;
        std::vector<SequenceTruth> seeds;
        std::vector<TrackerRun> runs;
        for (int i = 0; i < 35; ++i) {
            auto seq = truth;
            seq.name = "seed" + std::to_string(i);
            runs.push_back(simulate(i < 29 ? instant : frozen, seq));
            seeds.push_back(std::move(seq));
        }
        const auto summary = redetect_campaign(seeds, runs, 0.5);
        CHECK(summary.successes == 29);
        CHECK(summary.mean_frames == doctest::Approx(0.0));
    }
}

TEST_CASE("taxonomy separation on a reappearance sequence") {
    const auto truth = reappearance_truth();

    SimModel oracle;
    oracle.kind = SimKind::oracle;
    SimModel lt1;
    lt1.kind = SimKind::lt1;
    lt1.redetect_delay = 3;
    SimModel lt0;
    lt0.kind = SimKind::lt0;
    SimModel st0;
    st0.kind = SimKind::st0_drift;

    const double f_oracle = f_star_of(truth, simulate(oracle, truth));
    const double f_lt1 = f_star_of(truth, simulate(lt1, truth));
    const double f_lt0 = f_star_of(truth, simulate(lt0, truth));
    const double f_st0 = f_star_of(truth, simulate(st0, truth));

    CHECK(f_oracle >= f_lt1);
    CHECK(f_lt1 >= f_lt0);
    CHECK(f_lt0 >= f_st0);
    CHECK(f_lt1 > f_st0);

    CHECK(f_oracle == doctest::Approx(1.0));
    CHECK(f_lt1 == doctest::Approx(62.0 / 65.0));
    CHECK(f_lt0 == doctest::Approx(7.0 / 12.0));
    CHECK(f_st0 == doctest::Approx(28.0 / 73.0));
}

TEST_CASE("model validation") {
    const auto truth = reappearance_truth();
    SimModel model;
    model.overlap_targets = {1.5};
    CHECK_THROWS_AS(simulate(model, truth), std::invalid_argument);
    model.overlap_targets.clear();
    CHECK_THROWS_AS(simulate(model, truth), std::invalid_argument);
    model = SimModel{};
    model.jitter_px = -1.0;
    CHECK_THROWS_AS(simulate(model, truth), std::invalid_argument);

    SequenceTruth headless;
    headless.name = "bad";
    headless.frames = {{std::nullopt}, {Box{0, 0, 5, 5}}};
    CHECK_THROWS_AS(simulate(SimModel{}, headless), std::invalid_argument);

    CHECK(sim_kind_from_name("lt1") == SimKind::lt1);
    CHECK_FALSE(sim_kind_from_name("bogus").has_value());
}
