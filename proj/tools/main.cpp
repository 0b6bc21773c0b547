// semwave command-line front end. Everything numerical goes through the
// shared library's C API; this file only parses flags, shuttles buffers,
// and writes artifact files.

#include <semwave/semwave.h>

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <future>
#include <memory>
#include <string>
#include <vector>

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr double kPi = 3.14159265358979323846;

[[noreturn]] void die(sw_status status, const std::string& context) {
    json err{{"error", context}, {"status", static_cast<int>(status)},
             {"code", sw_status_name(status)}, {"message", sw_last_error()}};
    std::fprintf(stderr, "%s\n", err.dump().c_str());
    std::exit(status == SW_ERR_CONVERGENCE_FAILURE ? 1 : 2);
}

void check(sw_status status, const std::string& context) {
    if (status != SW_OK) die(status, context);
}

[[noreturn]] void usage_error(const std::string& message) {
    json err{{"error", "usage"}, {"status", 2}, {"message", message}};
    std::fprintf(stderr, "%s\n", err.dump().c_str());
    std::exit(2);
}

std::string take_string(char* s) {
    std::string out = s ? s : "";
    sw_string_free(s);
    return out;
}

void write_text(const fs::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) usage_error("cannot write " + path.string());
    out << text;
}

std::string read_text(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) usage_error("cannot read " + path.string());
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return text;
}

std::string default_out_dir() {
    const char* env = std::getenv("SEMWAVE_OUT");
    return env && *env ? env : "semwave_out";
}

// Manifests record every resolved parameter plus the artifact version, and
// deliberately no timestamps so reruns stay byte-identical.
void write_manifest(const fs::path& dir, const std::string& command, const json& params) {
    json manifest{{"artifact_version", sw_version()}, {"command", command},
                  {"parameters", params}};
    write_text(dir / "manifest.json", manifest.dump(2) + "\n");
}

struct GridArgs {
    double x_min = -10.0;
    double x_max = 10.0;
    int n = 512;
    std::string boundary = "periodic";

    void attach(CLI::App* cmd) {
        cmd->add_option("--x-min", x_min, "left edge of the semantic coordinate");
        cmd->add_option("--x-max", x_max, "right edge of the semantic coordinate");
        cmd->add_option("--n", n, "number of grid points");
        cmd->add_option("--boundary", boundary, "periodic | reflecting")
            ->check(CLI::IsMember({"periodic", "reflecting"}));
    }

    sw_grid* create() const {
        sw_grid* grid = nullptr;
        check(sw_grid_create(n, x_min, x_max,
                             boundary == "periodic" ? SW_BOUNDARY_PERIODIC
                                                    : SW_BOUNDARY_REFLECTING,
                             &grid),
              "grid");
        return grid;
    }

    json to_json() const {
        return json{{"x_min", x_min}, {"x_max", x_max}, {"n", n}, {"boundary", boundary}};
    }
};

struct PotentialArgs {
    std::string kind = "harmonic";
    double mass = 1.0;
    double omega = 1.0;
    double a = 1.0;
    double b = 2.0;
    double gamma = 1.0;
    double mu2 = 1.0;
    double lambda = 1.0;
    std::string potential_json;

    void attach(CLI::App* cmd) {
        cmd->add_option("--potential", kind,
                        "free | harmonic | double_well | cubic_nonlinear | mexican_hat")
            ->check(CLI::IsMember(
                {"free", "harmonic", "double_well", "cubic_nonlinear", "mexican_hat"}));
        cmd->add_option("--mass", mass, "semantic inertia m");
        cmd->add_option("--omega", omega, "harmonic angular frequency");
        cmd->add_option("--a", a, "double-well quartic coefficient");
        cmd->add_option("--b", b, "double-well minima location");
        cmd->add_option("--mu2", mu2, "mexican-hat quadratic coefficient");
        cmd->add_option("--lambda", lambda, "mexican-hat quartic coefficient");
        cmd->add_option("--potential-json", potential_json,
                        "potential as a JSON tagged union (overrides --potential)");
    }

    sw_potential* create() const {
        sw_potential* p = nullptr;
        if (!potential_json.empty()) {
            check(sw_potential_from_json(potential_json.c_str(), &p), "potential");
            return p;
        }
        if (kind == "free") check(sw_potential_free_particle(&p), "potential");
        else if (kind == "harmonic") check(sw_potential_harmonic(mass, omega, &p), "potential");
        else if (kind == "double_well") check(sw_potential_double_well(a, b, &p), "potential");
        else if (kind == "cubic_nonlinear")
            check(sw_potential_cubic_nonlinear(gamma, &p), "potential");
        else check(sw_potential_mexican_hat(mu2, lambda, &p), "potential");
        return p;
    }

    json to_json() const {
        sw_potential* p = create();
        char* js = nullptr;
        check(sw_potential_to_json(p, &js), "potential");
        sw_potential_free(p);
        return json::parse(take_string(js));
    }
};

// Mini-grammar for gauge profiles: zero | const:C | linear:SLOPE |
// sin:AMP,MODE | random:AMP,MODES (seeded).
std::vector<double> profile_from_spec(const std::string& spec, const std::vector<double>& xs,
                                      double length, std::uint64_t seed) {
    std::vector<double> out(xs.size(), 0.0);
    auto params_of = [&](const std::string& s) {
        std::vector<double> vals;
        size_t colon = s.find(':');
        if (colon == std::string::npos) return vals;
        std::string rest = s.substr(colon + 1);
        size_t pos = 0;
        while (pos < rest.size()) {
            size_t comma = rest.find(',', pos);
            if (comma == std::string::npos) comma = rest.size();
            try {
                vals.push_back(std::stod(rest.substr(pos, comma - pos)));
            } catch (...) {
                usage_error("bad profile spec '" + s + "'");
            }
            pos = comma + 1;
        }
        return vals;
    };
    const std::vector<double> p = params_of(spec);
    if (spec == "zero") {
        return out;
    } else if (spec.rfind("const:", 0) == 0 && p.size() == 1) {
        for (double& v : out) v = p[0];
    } else if (spec.rfind("linear:", 0) == 0 && p.size() == 1) {
        for (size_t i = 0; i < xs.size(); ++i) out[i] = p[0] * xs[i];
    } else if (spec.rfind("sin:", 0) == 0 && (p.size() == 1 || p.size() == 2)) {
        const double amp = p[0];
        const double mode = p.size() == 2 ? p[1] : 1.0;
        for (size_t i = 0; i < xs.size(); ++i)
            out[i] = amp * std::sin(2.0 * kPi * mode * (xs[i] - xs[0]) / length);
    } else if (spec.rfind("random:", 0) == 0 && (p.size() == 1 || p.size() == 2)) {
        const double amp = p[0];
        const int modes = p.size() == 2 ? static_cast<int>(p[1]) : 4;
        // xorshift-mixed coefficients keyed on the seed, stable across runs
        std::uint64_t s = seed * 0x9e3779b97f4a7c15ull + 0xda3e39cb94b95bdbull;
        auto next_coeff = [&s]() {
            s ^= s << 13;
            s ^= s >> 7;
            s ^= s << 17;
            return static_cast<double>(s >> 11) * 0x1.0p-53 * 2.0 - 1.0;
        };
        for (int m = 1; m <= modes; ++m) {
            const double cs = amp * next_coeff();
            const double cc = amp * next_coeff();
            for (size_t i = 0; i < xs.size(); ++i) {
                const double u = 2.0 * kPi * m * (xs[i] - xs[0]) / length;
                out[i] += cs * std::sin(u) + cc * std::cos(u);
            }
        }
    } else {
        usage_error("bad profile spec '" + spec + "' (zero|const:C|linear:S|sin:A,M|random:A,M)");
    }
    return out;
}

// -------- eigen --------

struct EigenCmd {
    GridArgs grid_args;
    PotentialArgs potential_args;
    int k = 5;
    double hbar = 1.0;
    double mass = 1.0;
    std::string out_dir = default_out_dir();
    std::string format = "json";

    int run() {
        if (k < 1) usage_error("--k must be at least 1");
        fs::create_directories(out_dir);
        sw_grid* grid = grid_args.create();
        sw_potential* potential = potential_args.create();

        sw_eigensolution* sol = nullptr;
        check(sw_eigenstates(potential, grid, k, hbar, mass, &sol), "eigenstates");

        const int count = sw_eigensolution_count(sol);
        std::vector<double> energies(static_cast<size_t>(count));
        check(sw_eigensolution_energies(sol, energies.data()), "energies");

        std::string energies_csv = "index,energy\n";
        char line[80];
        for (int i = 0; i < count; ++i) {
            std::snprintf(line, sizeof(line), "%d,%.17g\n", i, energies[static_cast<size_t>(i)]);
            energies_csv += line;
        }
        write_text(fs::path(out_dir) / "energies.csv", energies_csv);

        const int n = sw_grid_n_points(grid);
        std::vector<double> xs(static_cast<size_t>(n)), vs(static_cast<size_t>(n));
        check(sw_grid_points(grid, xs.data()), "grid points");
        check(sw_potential_profile(potential, grid, nullptr, vs.data()), "profile");
        std::string profile_csv = "x,potential\n";
        for (int i = 0; i < n; ++i) {
            std::snprintf(line, sizeof(line), "%.17g,%.17g\n", xs[static_cast<size_t>(i)],
                          vs[static_cast<size_t>(i)]);
            profile_csv += line;
        }
        write_text(fs::path(out_dir) / "potential_profile.csv", profile_csv);

        for (int i = 0; i < count; ++i) {
            sw_state* state = nullptr;
            check(sw_eigensolution_state(sol, i, &state), "eigenstate");
            char name[48];
            char* payload = nullptr;
            if (format == "json") {
                std::snprintf(name, sizeof(name), "eigenstate_%02d.json", i);
                check(sw_state_to_json(state, &payload), "state json");
            } else {
                std::snprintf(name, sizeof(name), "eigenstate_%02d.csv", i);
                check(sw_state_to_csv(state, &payload), "state csv");
            }
            write_text(fs::path(out_dir) / name, take_string(payload));
            sw_state_free(state);
        }

        write_manifest(out_dir, "eigen",
                       json{{"grid", grid_args.to_json()},
                            {"potential", potential_args.to_json()},
                            {"k", k},
                            {"hbar", hbar},
                            {"mass", mass},
                            {"format", format}});
        sw_eigensolution_free(sol);
        sw_potential_free(potential);
        sw_grid_free(grid);
        return 0;
    }
};

// -------- evolve --------

struct EvolveCmd {
    GridArgs grid_args;
    PotentialArgs potential_args;
    std::string initial = "gaussian"; // gaussian | soliton | file
    std::string state_file;
    double center = 0.0;
    double width = 1.0;
    double momentum = 0.0;
    bool use_gamma = false;
    double gamma = 0.0;
    std::string method = "crank_nicolson";
    double hbar = 1.0;
    double mass = 1.0;
    double dt = 1e-3;
    long steps = 1000;
    long record_every = 10;
    bool save_states = false;
    std::string sweep_file;
    std::string out_dir = default_out_dir();
    std::string format = "json";

    json params_json() const {
        json p{{"grid", grid_args.to_json()},
               {"initial", initial},
               {"method", method},
               {"hbar", hbar},
               {"mass", mass},
               {"dt", dt},
               {"steps", steps},
               {"record_every", record_every},
               {"save_states", save_states},
               {"format", format}};
        if (initial == "gaussian") {
            p["center"] = center;
            p["width"] = width;
            p["momentum"] = momentum;
        } else if (initial == "file") {
            p["state_file"] = state_file;
        }
        if (use_gamma) p["gamma"] = gamma;
        else p["potential"] = potential_args.to_json();
        return p;
    }

    sw_state* make_initial(sw_grid* grid) const {
        sw_state* state = nullptr;
        if (initial == "gaussian") {
            check(sw_state_gaussian(grid, center, width, momentum, &state), "initial state");
        } else if (initial == "soliton") {
            const int n = sw_grid_n_points(grid);
            std::vector<double> xs(static_cast<size_t>(n));
            check(sw_grid_points(grid, xs.data()), "grid points");
            std::vector<double> re(static_cast<size_t>(n)), im(static_cast<size_t>(n), 0.0);
            for (int i = 0; i < n; ++i)
                re[static_cast<size_t>(i)] = 1.0 / std::cosh(xs[static_cast<size_t>(i)]);
            check(sw_state_from_amplitudes(grid, re.data(), im.data(), &state), "initial state");
        } else if (initial == "file") {
            if (state_file.empty()) usage_error("--initial file needs --state");
            const std::string text = read_text(state_file);
            const sw_status st = state_file.size() > 4 &&
                                         state_file.substr(state_file.size() - 4) == ".csv"
                                     ? sw_state_from_csv(text.c_str(), &state)
                                     : sw_state_from_json(text.c_str(), &state);
            check(st, "initial state");
        } else {
            usage_error("--initial must be gaussian, soliton, or file");
        }
        return state;
    }

    int run_single(const fs::path& dir) const {
        fs::create_directories(dir);
        sw_grid* grid = grid_args.create();
        sw_state* psi0 = make_initial(grid);

        sw_evolution_config cfg;
        cfg.hbar = hbar;
        cfg.mass = mass;
        cfg.dt = dt;
        cfg.n_steps = steps;
        cfg.method = method == "split_step_spectral" ? SW_METHOD_SPLIT_STEP_SPECTRAL
                                                     : SW_METHOD_CRANK_NICOLSON;
        cfg.record_every = record_every;

        sw_trajectory* traj = nullptr;
        if (use_gamma) {
            check(sw_evolve_nlse(psi0, gamma, cfg, &traj), "evolve");
        } else {
            sw_potential* potential = potential_args.create();
            if (sw_potential_state_dependent(potential))
                usage_error("state-dependent potentials evolve through --gamma");
            check(sw_evolve_linear(psi0, potential, cfg, &traj), "evolve");
            sw_potential_free(potential);
        }

        char* csv = nullptr;
        check(sw_trajectory_to_csv(traj, &csv), "trajectory csv");
        write_text(dir / "trajectory.csv", take_string(csv));

        if (save_states) {
            fs::create_directories(dir / "states");
            const size_t count = sw_trajectory_size(traj);
            for (size_t i = 0; i < count; ++i) {
                sw_state* state = nullptr;
                check(sw_trajectory_state(traj, i, &state), "trajectory state");
                char name[48];
                char* payload = nullptr;
                if (format == "json") {
                    std::snprintf(name, sizeof(name), "state_%06zu.json", i);
                    check(sw_state_to_json(state, &payload), "state json");
                } else {
                    std::snprintf(name, sizeof(name), "state_%06zu.csv", i);
                    check(sw_state_to_csv(state, &payload), "state csv");
                }
                write_text(dir / "states" / name, take_string(payload));
                sw_state_free(state);
            }
        }

        write_manifest(dir, "evolve", params_json());
        sw_trajectory_free(traj);
        sw_state_free(psi0);
        sw_grid_free(grid);
        return 0;
    }

    int run() {
        if (!sweep_file.empty()) return run_sweep();
        return run_single(out_dir);
    }

    // Sweep file: JSON array of {"id": str, <flag overrides>}. Each entry
    // runs independently into out/<id>/.
    int run_sweep() {
        json entries;
        try {
            entries = json::parse(read_text(sweep_file));
        } catch (const std::exception& e) {
            usage_error(std::string("bad sweep file: ") + e.what());
        }
        if (!entries.is_array() || entries.empty())
            usage_error("sweep file must be a non-empty JSON array");

        std::vector<std::future<int>> jobs;
        for (const json& entry : entries) {
            if (!entry.contains("id") || !entry["id"].is_string())
                usage_error("every sweep entry needs a string id");
            EvolveCmd variant = *this;
            variant.sweep_file.clear();
            const std::string id = entry["id"].get<std::string>();
            if (entry.contains("gamma")) {
                variant.use_gamma = true;
                variant.gamma = entry["gamma"].get<double>();
            }
            if (entry.contains("dt")) variant.dt = entry["dt"].get<double>();
            if (entry.contains("steps")) variant.steps = entry["steps"].get<long>();
            if (entry.contains("record_every"))
                variant.record_every = entry["record_every"].get<long>();
            if (entry.contains("center")) variant.center = entry["center"].get<double>();
            if (entry.contains("width")) variant.width = entry["width"].get<double>();
            if (entry.contains("momentum")) variant.momentum = entry["momentum"].get<double>();
            const fs::path dir = fs::path(out_dir) / id;
            jobs.push_back(std::async(std::launch::async,
                                      [variant, dir]() { return variant.run_single(dir); }));
        }
        int rc = 0;
        for (std::future<int>& job : jobs) rc = std::max(rc, job.get());
        return rc;
    }
};

// -------- gauge-check --------

struct GaugeCheckCmd {
    std::string state_file;
    std::string a0_spec = "zero";
    std::string a1_spec = "zero";
    std::string theta_spec = "sin:0.5,1";
    double charge = 1.0;
    double hbar = 1.0;
    double mass = 1.0;
    std::uint64_t seed = 42;
    std::string out_dir = default_out_dir();

    int run() {
        fs::create_directories(out_dir);
        const std::string text = read_text(state_file);
        sw_state* state = nullptr;
        const sw_status st =
            state_file.size() > 4 && state_file.substr(state_file.size() - 4) == ".csv"
                ? sw_state_from_csv(text.c_str(), &state)
                : sw_state_from_json(text.c_str(), &state);
        check(st, "state file");

        // reconstruct the grid coordinates from the state's own metadata
        char* state_json = nullptr;
        check(sw_state_to_json(state, &state_json), "state json");
        const json meta = json::parse(take_string(state_json));
        const int n = sw_state_n_points(state);
        const double x_min = meta["grid"]["x_min"].get<double>();
        const double x_max = meta["grid"]["x_max"].get<double>();
        std::vector<double> xs(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i)
            xs[static_cast<size_t>(i)] = x_min + i * (x_max - x_min) / n;

        sw_grid* grid = nullptr;
        check(sw_grid_create(n, x_min, x_max,
                             meta["grid"]["boundary"].get<std::string>() == "periodic"
                                 ? SW_BOUNDARY_PERIODIC
                                 : SW_BOUNDARY_REFLECTING,
                             &grid),
              "grid");

        const std::vector<double> a0 = profile_from_spec(a0_spec, xs, x_max - x_min, seed);
        const std::vector<double> a1 = profile_from_spec(a1_spec, xs, x_max - x_min, seed + 1);
        const std::vector<double> theta =
            profile_from_spec(theta_spec, xs, x_max - x_min, seed + 2);

        sw_gauge_field* field = nullptr;
        check(sw_gauge_field_create(grid, a0.data(), a1.data(), charge, &field), "gauge field");

        char* report = nullptr;
        check(sw_gauge_check(state, field, theta.data(), hbar, mass, theta_spec.c_str(),
                             &report),
              "gauge check");
        write_text(fs::path(out_dir) / "gauge_report.json", take_string(report));

        write_manifest(out_dir, "gauge-check",
                       json{{"state", state_file},
                            {"a0", a0_spec},
                            {"a1", a1_spec},
                            {"theta", theta_spec},
                            {"charge", charge},
                            {"hbar", hbar},
                            {"mass", mass},
                            {"seed", seed}});
        sw_gauge_field_free(field);
        sw_grid_free(grid);
        sw_state_free(state);
        return 0;
    }
};

// -------- units --------

struct UnitsCmd {
    std::vector<std::string> identities;
    bool show_catalog = false;

    int run() {
        if (show_catalog) {
            char* catalog = nullptr;
            check(sw_units_catalog(&catalog), "catalog");
            const json j = json::parse(take_string(catalog));
            for (const auto& [name, dim] : j.items())
                std::printf("%-12s %s\n", name.c_str(), dim.get<std::string>().c_str());
            if (identities.empty()) return 0;
        }
        if (identities.empty()) usage_error("units needs at least one identity, or --catalog");
        int failures = 0;
        for (const std::string& identity : identities) {
            int holds = 0;
            char* report = nullptr;
            check(sw_units_check(identity.c_str(), &holds, &report), "units check");
            const json j = json::parse(take_string(report));
            if (holds) {
                std::printf("PASS %s\n", identity.c_str());
            } else {
                ++failures;
                std::printf("FAIL %s  delta m^%s x^%s t^%s\n", identity.c_str(),
                            j["difference"]["m"].get<std::string>().c_str(),
                            j["difference"]["x"].get<std::string>().c_str(),
                            j["difference"]["t"].get<std::string>().c_str());
            }
        }
        return failures == 0 ? 0 : 1;
    }
};

// -------- rag-demo --------

struct RagDemoCmd {
    std::string space_file;
    std::string chunks_file;
    std::string context;
    std::string question;
    int k = 5;
    int turns = 10;
    std::uint64_t seed = 42;
    std::string out_dir = default_out_dir();

    int run() {
        fs::create_directories(out_dir);
        sw_token_space* space = nullptr;
        check(sw_token_space_load(space_file.c_str(), &space), "token space");
        sw_chunk_store* store = nullptr;
        check(sw_chunk_store_load(chunks_file.c_str(), space, &store), "chunk store");

        char* transcript = nullptr;
        check(sw_rag_demo(space, store, context.c_str(), question.c_str(), k, turns, seed,
                          &transcript),
              "rag demo");
        write_text(fs::path(out_dir) / "transcript.json", take_string(transcript));

        write_manifest(out_dir, "rag-demo",
                       json{{"space", space_file},
                            {"chunks", chunks_file},
                            {"context", context},
                            {"question", question},
                            {"k", k},
                            {"turns", turns},
                            {"seed", seed}});
        sw_chunk_store_free(store);
        sw_token_space_free(space);
        return 0;
    }
};

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"semwave: semantic wavefunction simulator"};
    app.require_subcommand(1);
    app.set_version_flag("--version", sw_version());

    EigenCmd eigen;
    CLI::App* eigen_cmd = app.add_subcommand(
        "eigen", "solve for the lowest discrete states of a potential");
    eigen.grid_args.boundary = "reflecting";
    eigen.grid_args.attach(eigen_cmd);
    eigen.potential_args.attach(eigen_cmd);
    eigen_cmd->add_option("--k", eigen.k, "number of eigenpairs");
    eigen_cmd->add_option("--hbar", eigen.hbar, "semantic granularity");
    eigen_cmd->add_option("--mass-kinetic", eigen.mass, "kinetic-term mass");
    eigen_cmd->add_option("--out", eigen.out_dir, "output directory");
    eigen_cmd->add_option("--format", eigen.format, "json | csv state files")
        ->check(CLI::IsMember({"json", "csv"}));

    EvolveCmd evolve;
    CLI::App* evolve_cmd =
        app.add_subcommand("evolve", "integrate the time-dependent dynamics");
    evolve.grid_args.attach(evolve_cmd);
    evolve.potential_args.attach(evolve_cmd);
    evolve_cmd->add_option("--initial", evolve.initial, "gaussian | soliton | file");
    evolve_cmd->add_option("--state", evolve.state_file, "initial state file for --initial file");
    evolve_cmd->add_option("--center", evolve.center, "gaussian center");
    evolve_cmd->add_option("--width", evolve.width, "gaussian width");
    evolve_cmd->add_option("--momentum", evolve.momentum, "gaussian carrier momentum");
    CLI::Option* gamma_opt =
        evolve_cmd->add_option("--gamma", evolve.gamma, "cubic coupling (switches to the NLSE)");
    evolve_cmd->add_option("--method", evolve.method, "crank_nicolson | split_step_spectral")
        ->check(CLI::IsMember({"crank_nicolson", "split_step_spectral"}));
    evolve_cmd->add_option("--hbar", evolve.hbar, "semantic granularity");
    evolve_cmd->add_option("--mass-kinetic", evolve.mass, "kinetic-term mass");
    evolve_cmd->add_option("--dt", evolve.dt, "time step");
    evolve_cmd->add_option("--steps", evolve.steps, "number of steps");
    evolve_cmd->add_option("--record-every", evolve.record_every, "recording stride");
    evolve_cmd->add_flag("--save-states", evolve.save_states, "write recorded states");
    evolve_cmd->add_option("--sweep", evolve.sweep_file, "JSON sweep file of parameter variants");
    evolve_cmd->add_option("--out", evolve.out_dir, "output directory");
    evolve_cmd->add_option("--format", evolve.format, "json | csv state files")
        ->check(CLI::IsMember({"json", "csv"}));

    GaugeCheckCmd gauge;
    CLI::App* gauge_cmd =
        app.add_subcommand("gauge-check", "run the U(1) covariance suite on a saved state");
    gauge_cmd->add_option("--state", gauge.state_file, "wavefunction file (json or csv)")
        ->required();
    gauge_cmd->add_option("--a0", gauge.a0_spec, "scalar potential profile spec");
    gauge_cmd->add_option("--a1", gauge.a1_spec, "spatial component profile spec");
    gauge_cmd->add_option("--theta", gauge.theta_spec, "transform phase profile spec");
    gauge_cmd->add_option("--charge", gauge.charge, "semantic charge q");
    gauge_cmd->add_option("--hbar", gauge.hbar, "semantic granularity");
    gauge_cmd->add_option("--mass-kinetic", gauge.mass, "kinetic-term mass");
    gauge_cmd->add_option("--seed", gauge.seed, "seed for random profile specs");
    gauge_cmd->add_option("--out", gauge.out_dir, "output directory");

    UnitsCmd units;
    CLI::App* units_cmd =
        app.add_subcommand("units", "check semantic-unit identities like \"q^2 = E/x\"");
    units_cmd->add_option("identities", units.identities, "identity strings");
    units_cmd->add_flag("--catalog", units.show_catalog, "print the quantity catalog");

    RagDemoCmd rag;
    CLI::App* rag_cmd = app.add_subcommand(
        "rag-demo", "retrieval-and-composition conversation with drift accounting");
    rag_cmd->add_option("--space", rag.space_file, "token space JSON file")->required();
    rag_cmd->add_option("--chunks", rag.chunks_file, "chunk store JSONL file")->required();
    rag_cmd->add_option("--context", rag.context, "conversation context")->required();
    rag_cmd->add_option("--question", rag.question, "conversation question")->required();
    rag_cmd->add_option("--k", rag.k, "retrieved chunks per turn");
    rag_cmd->add_option("--turns", rag.turns, "number of conversation turns");
    rag_cmd->add_option("--seed", rag.seed, "rng seed");
    rag_cmd->add_option("--out", rag.out_dir, "output directory");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help / --version
        json err{{"error", "usage"}, {"status", 2}, {"message", e.what()}};
        std::fprintf(stderr, "%s\n", err.dump().c_str());
        return 2;
    }

    evolve.use_gamma = gamma_opt->count() > 0;

    if (eigen_cmd->parsed()) return eigen.run();
    if (evolve_cmd->parsed()) return evolve.run();
    if (gauge_cmd->parsed()) return gauge.run();
    if (units_cmd->parsed()) return units.run();
    if (rag_cmd->parsed()) return rag.run();
    return 2;
}
