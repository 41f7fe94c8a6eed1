#include <doctest.h>

#include <random>

#include "lteval/dataset_io.hpp"
#include "lteval/errors.hpp"
#include "support.hpp"

using namespace lteval;
namespace fs = std::filesystem;

TEST_CASE("groundtruth lines") {
    const auto frames = parse_groundtruth("10,20,30,40\nnan,nan,nan,nan\n1.5,2.25,3,4\n");
    REQUIRE(frames.size() == 3);
    CHECK(frames[0].region == Box{10, 20, 30, 40});
    CHECK_FALSE(frames[1].region.has_value());
    CHECK(frames[2].region == Box{1.5, 2.25, 3, 4});
}

TEST_CASE("groundtruth accepts CRLF, spaces and a missing trailing newline") {
    const auto frames = parse_groundtruth("10,20,30,40\r\nNaN, nan ,nan,NAN\r\n5, 6, 7, 8");
    REQUIRE(frames.size() == 3);
    CHECK(frames[0].region.has_value());
    CHECK_FALSE(frames[1].region.has_value());
    CHECK(frames[2].region == Box{5, 6, 7, 8});
}

TEST_CASE("groundtruth errors carry line numbers") {
    try {
        parse_groundtruth("1,1,5,5\n10,20,-5,40\n", "gt.txt");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
        CHECK(e.file() == "gt.txt");
    }
    CHECK_THROWS_AS(parse_groundtruth("1,2,3\n"), ParseError);
    CHECK_THROWS_AS(parse_groundtruth("1,2,3,4,5\n"), ParseError);
    CHECK_THROWS_AS(parse_groundtruth("a,2,3,4\n"), ParseError);
    CHECK_THROWS_AS(parse_groundtruth("1,2,3,nan\n"), ParseError);  // mixed sentinel
    CHECK_THROWS_AS(parse_groundtruth("1,2,0,4\n"), ParseError);
    CHECK_THROWS_AS(parse_groundtruth("inf,2,3,4\n"), ParseError);
    CHECK_THROWS_AS(parse_groundtruth("1.5.2,2,3,4\n"), ParseError);
    CHECK_THROWS_AS(parse_groundtruth("\n1,2,3,4\n"), ParseError);  // blank line, not a sentinel
}

TEST_CASE("result lines") {
    const auto frames = parse_results("5,5,10,10,0.87\nnan,nan,nan,nan,0.10\n");
    REQUIRE(frames.size() == 2);
    CHECK(frames[0].region == Box{5, 5, 10, 10});
    CHECK(frames[0].score == doctest::Approx(0.87));
    CHECK_FALSE(frames[1].region.has_value());
    CHECK(frames[1].score == doctest::Approx(0.10));

    CHECK_THROWS_AS(parse_results("5,5,10,10\n"), ParseError);          // missing score
    CHECK_THROWS_AS(parse_results("5,5,10,10,nan\n"), ParseError);      // non-finite score
    CHECK_THROWS_AS(parse_results("nan,nan,nan,nan,inf\n"), ParseError);
    CHECK_THROWS_AS(parse_results("5,5,0,10,0.5\n"), ParseError);
}

TEST_CASE("attribute files") {
    const auto codes = parse_attributes("O,V,C\n");
    CHECK(codes == std::set<AttributeCode>{AttributeCode::full_occlusion,
                                           AttributeCode::out_of_view,
                                           AttributeCode::camera_motion});
    CHECK(parse_attributes("").empty());
    CHECK(parse_attributes("O,O,O\n").size() == 1);
    CHECK_THROWS_AS(parse_attributes("O,X\n"), ParseError);
    CHECK_THROWS_AS(parse_attributes("OV\n"), ParseError);
}

TEST_CASE("timing files") {
    const auto times = parse_times("50.0\n10.0\n10.0\n");
    CHECK(times == std::vector<double>{50.0, 10.0, 10.0});
    CHECK(parse_times("").empty());
    CHECK_THROWS_AS(parse_times("-1.0\n"), ParseError);
    CHECK_THROWS_AS(parse_times("abc\n"), ParseError);
}

TEST_CASE("serialization round-trips to an identical structure") {
    std::mt19937 rng(13);
    for (int i = 0; i < 25; ++i) {
        const auto truth = support::random_truth(rng);
        const auto run = support::random_run(rng, truth);

        const auto gt_text = serialize_groundtruth(truth.frames);
        const auto gt_again = serialize_groundtruth(parse_groundtruth(gt_text));
        CHECK(gt_text == gt_again);
        REQUIRE(parse_groundtruth(gt_text).size() == truth.frames.size());
        for (std::size_t t = 0; t < truth.frames.size(); ++t) {
            CHECK(parse_groundtruth(gt_text)[t].region == truth.frames[t].region);
        }

        const auto res_text = serialize_results(run.frames);
        const auto parsed = parse_results(res_text);
        REQUIRE(parsed.size() == run.frames.size());
        for (std::size_t t = 0; t < run.frames.size(); ++t) {
            CHECK(parsed[t].region == run.frames[t].region);
            CHECK(parsed[t].score == run.frames[t].score);
        }
        CHECK(serialize_results(parsed) == res_text);
    }
}

TEST_CASE("dataset and results loading") {
    const auto root = support::fresh_dir("tmp_io_dataset");
    const auto results = support::fresh_dir("tmp_io_results");

    auto seq_a = support::five_frame_truth();
    seq_a.name = "seq_a";
    seq_a.attributes = {AttributeCode::full_occlusion};
    auto seq_b = support::five_frame_truth();
    seq_b.name = "seq_b";
    support::write_sequence(root, seq_a);
    support::write_sequence(root, seq_b);

    auto run_a = support::five_frame_run();
    run_a.sequence_name = "seq_a";
    run_a.times_ms = std::vector<double>{9, 1, 2, 3, 4, 5};
    auto run_b = support::five_frame_run();
    run_b.sequence_name = "seq_b";
    support::write_run(results, "trk", run_a);
    support::write_run(results, "trk", run_b);

    const auto dataset = load_dataset(root);
    REQUIRE(dataset.size() == 2);
    CHECK(dataset[0].name == "seq_a");
    CHECK(dataset[0].attributes.count(AttributeCode::full_occlusion) == 1);
    CHECK(dataset[1].attributes.empty());
    CHECK(dataset[0].width == 10);
    CHECK(dataset[0].height == 10);

    const auto runs = load_results(results / "trk", dataset);
    REQUIRE(runs.size() == 2);
    CHECK(runs[0].sequence_name == "seq_a");
    CHECK(runs[0].times_ms.has_value());
    CHECK_FALSE(runs[1].times_ms.has_value());
    CHECK(runs[0].frames.size() == dataset[0].frames.size());
}

TEST_CASE("loading failures name the offender") {
    const auto root = support::fresh_dir("tmp_io_dataset2");
    const auto results = support::fresh_dir("tmp_io_results2");

    auto seq = support::five_frame_truth();
    seq.name = "seq_a";
    support::write_sequence(root, seq);
    const auto dataset = load_dataset(root);

    SUBCASE("missing results file") {
        fs::create_directories(results / "trk");
        try {
            load_results(results / "trk", dataset);
            FAIL("expected AlignmentError");
        } catch (const AlignmentError& e) {
            CHECK(std::string(e.what()).find("seq_a") != std::string::npos);
        }
    }

    SUBCASE("short results file") {
        auto run = support::five_frame_run();
        run.sequence_name = "seq_a";
        run.frames.pop_back();
        support::write_run(results, "trk", run);
        try {
            load_results(results / "trk", dataset);
            FAIL("expected AlignmentError");
        } catch (const AlignmentError& e) {
            const std::string what = e.what();
            CHECK(what.find("5") != std::string::npos);
            CHECK(what.find("6") != std::string::npos);
        }
    }

    SUBCASE("timing length mismatch") {
        auto run = support::five_frame_run();
        run.sequence_name = "seq_a";
        run.times_ms = std::vector<double>{1, 2, 3};
        support::write_run(results, "trk", run);
        CHECK_THROWS_AS(load_results(results / "trk", dataset), AlignmentError);
    }

    SUBCASE("first frame must be annotated") {
        const auto bad_root = support::fresh_dir("tmp_io_dataset3");
        fs::create_directories(bad_root / "seq");
        write_text_file(bad_root / "seq" / "groundtruth.txt", "nan,nan,nan,nan\n1,1,5,5\n");
        CHECK_THROWS_AS(load_dataset(bad_root), ParseError);
    }

    SUBCASE("missing groundtruth file") {
        const auto bad_root = support::fresh_dir("tmp_io_dataset4");
        fs::create_directories(bad_root / "seq");
        CHECK_THROWS_AS(load_dataset(bad_root), IoError);
    }

    SUBCASE("missing dataset root") {
        CHECK_THROWS_AS(load_dataset(root / "nope"), IoError);
    }
}
