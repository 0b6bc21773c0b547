#include <doctest.h>

#include "core/serialize.hpp"
#include "helpers.hpp"

using namespace semwave;
using test_helpers::random_state;

TEST_CASE("wavefunction json round trip is exact") {
    Rng rng(301);
    const SpatialGrid grid = make_grid(64, -5.0, 5.0, Boundary::periodic);
    const WaveFunction psi = random_state(grid, rng);
    const WaveFunction back = wavefunction_from_json(wavefunction_to_json(psi));
    CHECK(back.grid == psi.grid);
    CHECK(test_helpers::max_abs_diff(psi.amplitudes, back.amplitudes) == 0.0);
}

TEST_CASE("wavefunction csv round trip is exact") {
    Rng rng(303);
    const SpatialGrid grid = make_grid(32, -2.0, 6.0, Boundary::reflecting);
    const WaveFunction psi = random_state(grid, rng);
    const WaveFunction back = wavefunction_from_csv(wavefunction_to_csv(psi));
    CHECK(back.grid == psi.grid);
    CHECK(test_helpers::max_abs_diff(psi.amplitudes, back.amplitudes) == 0.0);
}

TEST_CASE("malformed wavefunction payloads are parse errors") {
    CHECK_ERROR_CODE(wavefunction_from_json("{not json"), ErrorCode::parse_error);
    CHECK_ERROR_CODE(wavefunction_from_json("{\"grid\":{}}"), ErrorCode::parse_error);
    CHECK_ERROR_CODE(
        wavefunction_from_json(
            R"({"grid":{"n":16,"x_min":0,"x_max":1,"boundary":"periodic"},"re":[1],"im":[0]})"),
        ErrorCode::parse_error);
    CHECK_ERROR_CODE(wavefunction_from_csv("re,im\n1,0\n"), ErrorCode::parse_error);
}

TEST_CASE("potential specs round trip through the tagged union") {
    const PotentialSpec specs[] = {
        PotentialSpec::free_particle(), PotentialSpec::harmonic(2.0, 0.5),
        PotentialSpec::double_well(1.5, 2.5), PotentialSpec::cubic_nonlinear(-1.25),
        PotentialSpec::mexican_hat(0.9, 1.1)};
    for (const PotentialSpec& spec : specs) {
        const PotentialSpec back = potential_from_json(potential_to_json(spec));
        CHECK(back.name() == spec.name());
        const SpatialGrid grid = make_grid(16, -3.0, 3.0, Boundary::periodic);
        for (int i = 0; i < grid.n_points; ++i)
            CHECK(back.evaluate(grid.x(i), 0.3) == spec.evaluate(grid.x(i), 0.3));
    }
    CHECK(potential_to_json(PotentialSpec::double_well(1.0, 2.0)) ==
          R"({"a":1.0,"b":2.0,"type":"double_well"})");
    CHECK_ERROR_CODE(potential_from_json(R"({"type":"coulomb"})"), ErrorCode::parse_error);
    CHECK_ERROR_CODE(potential_from_json(R"({"type":"harmonic","m":1.0})"),
                     ErrorCode::parse_error);
}

TEST_CASE("token spaces round trip through json") {
    const std::string payload = R"({
      "dim": 2,
      "tokens": [
        {"text": "alpha", "embedding": [1.0, 0.0], "charge": 1.0},
        {"text": "beta", "embedding": [0.0, 1.0]}
      ]
    })";
    const TokenSpace space = token_space_from_json(payload);
    CHECK(space.size() == 2);
    CHECK(space.dim() == 2);
    CHECK(space.charge(0) == 1.0);
    CHECK(space.charge(1) == 0.0); // defaulted
    const TokenSpace again = token_space_from_json(token_space_to_json(space));
    CHECK(again.size() == space.size());
    CHECK(again.embedding(0) == space.embedding(0));

    CHECK_ERROR_CODE(token_space_from_json("[]"), ErrorCode::parse_error);
    CHECK_ERROR_CODE(
        token_space_from_json(R"({"dim":3,"tokens":[{"text":"a","embedding":[1.0]}]})"),
        ErrorCode::parse_error);
}

TEST_CASE("chunk stores load from json lines") {
    const TokenSpace space = token_space_from_json(R"({
      "dim": 2,
      "tokens": [
        {"text": "alpha", "embedding": [1.0, 0.0], "charge": 0.0},
        {"text": "beta", "embedding": [0.0, 1.0], "charge": 0.0}
      ]
    })");
    const std::string jsonl =
        "{\"id\":\"c1\",\"text\":\"alpha\"}\n"
        "{\"id\":\"c2\",\"text\":\"alpha beta\"}\n"
        "\n"
        "{\"id\":\"c3\",\"text\":\"beta beta\"}\n";
    const ChunkStore store = chunk_store_from_jsonl(jsonl, space);
    REQUIRE(store.size() == 3);
    CHECK(store.at(0).id == "c1");
    CHECK(store.at(0).embedding == std::vector<double>{1.0, 0.0});
    CHECK(store.find("c3") != nullptr);
    CHECK(store.find("nope") == nullptr);

    CHECK_ERROR_CODE(chunk_store_from_jsonl("{\"id\":\"x\"}\n", space), ErrorCode::parse_error);
}

TEST_CASE("trajectory csv has the expected columns") {
    const SpatialGrid grid = make_grid(64, -10.0, 10.0, Boundary::periodic);
    const WaveFunction psi = make_gaussian(grid, 0.0, 1.0, 0.0);
    EvolutionConfig cfg;
    cfg.dt = 1e-3;
    cfg.n_steps = 4;
    cfg.record_every = 2;
    const Trajectory traj = evolve_linear(psi, PotentialSpec::free_particle(), cfg);
    const std::string csv = trajectory_to_csv(traj);
    CHECK(csv.rfind("t,norm,energy,x_expect,charge\n", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 4); // header + 3 records
}

TEST_CASE("file io reports missing paths") {
    CHECK_ERROR_CODE(read_file("/nonexistent/else.json"), ErrorCode::io_error);
}
