// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit when any
// criterion fails. The CLI determinism checks need SEMWAVE_CLI_BIN and the
// retrieval checks need SEMWAVE_FIXTURE_DIR in the environment (both set by
// ctest).

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "core/gauge.hpp"
#include "core/potential.hpp"
#include "core/propagator.hpp"
#include "core/rag.hpp"
#include "core/rng.hpp"
#include "core/semantics.hpp"
#include "core/serialize.hpp"
#include "core/spectral.hpp"
#include "core/units.hpp"
#include "core/wavefunction.hpp"

using namespace semwave;
namespace fs = std::filesystem;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

int count_nodes(const WaveFunction& psi) {
    double peak = 0.0;
    for (const cplx& a : psi.amplitudes) peak = std::max(peak, std::abs(a.real()));
    const double floor = 1e-6 * peak;
    int nodes = 0;
    double last = 0.0;
    for (const cplx& a : psi.amplitudes) {
        const double v = a.real();
        if (std::abs(v) < floor) continue;
        if (last != 0.0 && v * last < 0.0) ++nodes;
        last = v;
    }
    return nodes;
}

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.3g", v);
    return buf;
}

// ---- 1: quantization ----
Outcome criterion_quantization() {
    const SpatialGrid grid = make_grid(512, -10.0, 10.0, Boundary::reflecting);
    const EigenSolution sol = eigenstates(PotentialSpec::harmonic(1.0, 1.0), grid, 5, 1.0, 1.0);
    double worst = 0.0;
    bool nodes_ok = true;
    for (int n = 0; n < 5; ++n) {
        worst = std::max(worst, std::abs(sol.energies[static_cast<size_t>(n)] - (n + 0.5)));
        nodes_ok = nodes_ok && count_nodes(sol.states[static_cast<size_t>(n)]) == n;
    }
    return {worst < 1e-3 && nodes_ok,
            "max |E_n - (n+1/2)| = " + fmt(worst) + (nodes_ok ? ", node counts 0-4"
                                                              : ", node counts WRONG")};
}

// Trajectories shared by criteria 2, 3 and 6.
struct NamedTrajectory {
    std::string name;
    Trajectory traj;
    double norm_tol;
};

std::vector<NamedTrajectory> g_trajectories;

EvolutionConfig base_config(Method m) {
    EvolutionConfig cfg;
    cfg.method = m;
    cfg.dt = 1e-3;
    cfg.n_steps = 1000;
    cfg.record_every = 1;
    return cfg;
}

void build_trajectories() {
    const SpatialGrid grid = make_grid(512, -10.0, 10.0, Boundary::periodic);
    const WaveFunction psi0 = make_gaussian(grid, 1.0, 0.8, 0.5);
    const std::vector<std::pair<std::string, PotentialSpec>> potentials = {
        {"free", PotentialSpec::free_particle()},
        {"harmonic", PotentialSpec::harmonic(1.0, 1.0)},
        {"double_well", PotentialSpec::double_well(1.0, 2.0)}};
    for (const auto& [name, spec] : potentials) {
        g_trajectories.push_back(
            {"cn/" + name, evolve_linear(psi0, spec, base_config(Method::crank_nicolson)),
             1e-10});
        g_trajectories.push_back(
            {"ss/" + name, evolve_linear(psi0, spec, base_config(Method::split_step_spectral)),
             1e-8});
    }

    const SpatialGrid wide = make_grid(1024, -20.0, 20.0, Boundary::periodic);
    std::vector<cplx> amp(static_cast<size_t>(wide.n_points));
    for (int i = 0; i < wide.n_points; ++i)
        amp[static_cast<size_t>(i)] = cplx{1.0 / std::cosh(wide.x(i)), 0.0};
    g_trajectories.push_back({"nlse/soliton",
                              evolve_nlse(WaveFunction{wide, amp}, -1.0,
                                          base_config(Method::split_step_spectral)),
                              1e-8});
}

// ---- 2: unitarity ----
Outcome criterion_unitarity() {
    double worst_cn = 0.0, worst_ss = 0.0;
    for (const NamedTrajectory& nt : g_trajectories) {
        if (nt.name.rfind("nlse", 0) == 0) continue;
        for (const ObservableRecord& r : nt.traj.observables) {
            const double drift = std::abs(r.norm * r.norm - 1.0);
            if (nt.name.rfind("cn", 0) == 0) worst_cn = std::max(worst_cn, drift);
            else worst_ss = std::max(worst_ss, drift);
        }
    }
    return {worst_cn < 1e-10 && worst_ss < 1e-8,
            "max norm drift: crank-nicolson " + fmt(worst_cn) + ", split-step " + fmt(worst_ss)};
}

// ---- 3: soliton ----
Outcome criterion_soliton() {
    const Trajectory* soliton = nullptr;
    for (const NamedTrajectory& nt : g_trajectories)
        if (nt.name == "nlse/soliton") soliton = &nt.traj;
    const WaveFunction& psiT = soliton->final_state();
    double err2 = 0.0;
    for (int i = 0; i < psiT.grid.n_points; ++i) {
        const double diff = std::abs(psiT.amplitudes[static_cast<size_t>(i)]) -
                            1.0 / std::cosh(psiT.grid.x(i));
        err2 += diff * diff;
    }
    const double l2 = std::sqrt(err2 * psiT.grid.dx());

    // gamma = 0 control against free linear evolution
    const SpatialGrid grid = make_grid(512, -10.0, 10.0, Boundary::periodic);
    const WaveFunction psi0 = make_gaussian(grid, 0.0, 1.0, 1.0);
    EvolutionConfig cfg = base_config(Method::split_step_spectral);
    cfg.record_every = 200;
    const Trajectory control = evolve_nlse(psi0, 0.0, cfg);
    const Trajectory linear = evolve_linear(psi0, PotentialSpec::free_particle(), cfg);
    double control_diff = 0.0;
    for (size_t t = 0; t < control.size(); ++t)
        for (size_t i = 0; i < control.states[t].amplitudes.size(); ++i)
            control_diff = std::max(control_diff,
                                    std::abs(control.states[t].amplitudes[i] -
                                             linear.states[t].amplitudes[i]));
    return {l2 < 1e-3 && control_diff < 1e-10,
            "soliton L2 modulus error " + fmt(l2) + ", gamma=0 vs linear " + fmt(control_diff)};
}

// ---- 4: Euler-Lagrange residual ----
Outcome criterion_residual() {
    const PotentialSpec well = PotentialSpec::harmonic(1.0, 1.0);
    auto residual_at = [&](int n, double dt) {
        const SpatialGrid grid = make_grid(n, -10.0, 10.0, Boundary::periodic);
        const WaveFunction psi0 = make_gaussian(grid, 1.0, 0.8, 0.0);
        EvolutionConfig cfg;
        cfg.method = Method::crank_nicolson;
        cfg.dt = dt;
        cfg.n_steps = 200;
        cfg.record_every = 1;
        return euler_lagrange_residual(evolve_linear(psi0, well, cfg), well, cfg);
    };
    const double r1 = residual_at(512, 1e-3);
    const double r2 = residual_at(1024, 5e-4);
    const double factor = r1 / r2;
    return {r1 < 1e-3 && factor > 3.0 && factor < 5.0,
            "residual " + fmt(r1) + ", shrink factor " + fmt(factor)};
}

// ---- 5: gauge invariance ----
Outcome criterion_gauge() {
    const SpatialGrid grid = make_grid(256, -10.0, 10.0, Boundary::periodic);
    const WaveFunction psi = make_gaussian(grid, 0.0, 1.0, 1.0);
    std::vector<double> a0(static_cast<size_t>(grid.n_points));
    std::vector<double> a1(static_cast<size_t>(grid.n_points));
    const double two_pi = 6.283185307179586477;
    for (int i = 0; i < grid.n_points; ++i) {
        const double u = two_pi * (grid.x(i) - grid.x_min) / grid.length();
        a0[static_cast<size_t>(i)] = 0.3 * std::sin(u);
        a1[static_cast<size_t>(i)] = 0.2 * std::cos(2.0 * u);
    }
    const GaugeField field = make_gauge_field(grid, a0, a1, 0.7);

    double worst_density = 0.0, worst_cov = 0.0, worst_lag = 0.0, worst_charge = 0.0;
    Rng rng(42);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<double> theta(static_cast<size_t>(grid.n_points), 0.0);
        for (int m = 1; m <= 4; ++m) {
            const double cs = rng.uniform(-1.0, 1.0);
            const double cc = rng.uniform(-1.0, 1.0);
            for (int i = 0; i < grid.n_points; ++i) {
                const double u = two_pi * m * (grid.x(i) - grid.x_min) / grid.length();
                theta[static_cast<size_t>(i)] += cs * std::sin(u) + cc * std::cos(u);
            }
        }
        const GaugeCheckReport report = gauge_check(psi, field, theta, 1.0, 1.0, "seeded");
        worst_density = std::max(worst_density, report.max_abs_density_diff);
        worst_cov = std::max(worst_cov, report.max_covariance_residual);
        worst_lag = std::max(worst_lag, report.max_lagrangian_density_diff);
        worst_charge =
            std::max(worst_charge, std::abs(report.charge_after - report.charge_before));
    }
    const bool pass = worst_density <= 1e-14 && worst_cov <= 1e-8 && worst_lag <= 1e-8 &&
                      worst_charge <= 1e-12;
    return {pass, "density " + fmt(worst_density) + ", covariance " + fmt(worst_cov) +
                      ", lagrangian " + fmt(worst_lag) + ", charge " + fmt(worst_charge)};
}

// ---- 6: charge conservation + continuity ----
Outcome criterion_charge() {
    double worst_drift = 0.0, worst_continuity = 0.0;
    for (const NamedTrajectory& nt : g_trajectories) {
        const double q0 = nt.traj.observables.front().noether_charge;
        for (const ObservableRecord& r : nt.traj.observables)
            worst_drift = std::max(worst_drift, std::abs(r.noether_charge - q0));

        const SpatialGrid& grid = nt.traj.states.front().grid;
        const GaugeField zero = make_zero_gauge_field(grid, 1.0);
        // stride the continuity probe; each probe is a centered difference
        for (size_t t = 1; t + 1 < nt.traj.size(); t += 97) {
            const NoetherRecord prev = noether(nt.traj.states[t - 1], zero, 1.0, 1.0);
            const NoetherRecord here = noether(nt.traj.states[t], zero, 1.0, 1.0);
            const NoetherRecord next = noether(nt.traj.states[t + 1], zero, 1.0, 1.0);
            const std::vector<double> dj1_dx = derivative(here.j1, grid);
            double integral = 0.0;
            for (size_t i = 0; i < here.j0.size(); ++i)
                integral +=
                    (next.j0[i] - prev.j0[i]) / (2.0 * nt.traj.config.dt) + dj1_dx[i];
            worst_continuity = std::max(worst_continuity, std::abs(integral * grid.dx()));
        }
    }
    return {worst_drift < 1e-8 && worst_continuity < 1e-8,
            "max charge drift " + fmt(worst_drift) + ", continuity integral " +
                fmt(worst_continuity)};
}

// ---- 7: dimensional analysis ----
Outcome criterion_units() {
    using namespace semwave::units;
    const bool identities = check_identity("E", "m*x^2/t^2").holds &&
                            check_identity("hbar", "m*x^2/t").holds &&
                            check_identity("q", "(m*x)^(1/2)/t").holds &&
                            check_identity("A", "1/(q*x)").holds &&
                            check_identity("A", "t/(x*(m*x)^(1/2))").holds &&
                            check_identity("q^2", "E/x").holds;
    const bool homogeneous =
        check_equation_terms(std::vector<std::string>{"hbar/t", "hbar^2/(m*x^2)", "E"});
    const bool rejects = !check_identity("hbar", "E").holds;
    return {identities && homogeneous && rejects,
            std::string("printed identities ") + (identities ? "hold" : "FAIL") +
                ", equation homogeneity " + (homogeneous ? "holds" : "FAIL")};
}

// ---- 8: disambiguation analog ----
Outcome criterion_disambiguation() {
    const SpatialGrid grid = make_grid(256, -8.0, 8.0, Boundary::periodic);
    const PotentialSpec well = PotentialSpec::double_well(1.0, 2.0);
    EvolutionConfig cfg;
    cfg.method = Method::split_step_spectral;
    cfg.dt = 0.01;
    cfg.n_steps = 50000;
    const GroundStateResult right = imaginary_time_ground_state(
        well, grid, make_gaussian(grid, 1.5, 0.5, 0.0), cfg, 1e-9);
    const GroundStateResult left = imaginary_time_ground_state(
        well, grid, make_gaussian(grid, -1.5, 0.5, 0.0), cfg, 1e-9);
    const double xr = position_expectation(right.state);
    const double xl = position_expectation(left.state);
    const double energy_gap = std::abs(right.energy - left.energy);

    const SpatialGrid hgrid = make_grid(256, -10.0, 10.0, Boundary::periodic);
    Rng rng(7);
    std::vector<cplx> amp(static_cast<size_t>(hgrid.n_points));
    for (cplx& a : amp) a = cplx{rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)};
    const GroundStateResult harmonic = imaginary_time_ground_state(
        PotentialSpec::harmonic(1.0, 1.0), hgrid, normalize(WaveFunction{hgrid, amp}), cfg,
        1e-10);

    const bool pass = xr > 1.0 && xl < -1.0 && energy_gap < 1e-6 &&
                      std::abs(harmonic.energy - 0.5) < 1e-3;
    return {pass, "<x> = " + fmt(xr) + " / " + fmt(xl) + ", energy gap " + fmt(energy_gap) +
                      ", harmonic E0 " + fmt(harmonic.energy)};
}

// ---- 9: RAG anchor ----
Outcome criterion_rag() {
    const char* fixture_dir = std::getenv("SEMWAVE_FIXTURE_DIR");
    if (!fixture_dir) return {false, "SEMWAVE_FIXTURE_DIR not set"};
    const TokenSpace space =
        token_space_from_json(read_file(std::string(fixture_dir) + "/token_space_64.json"));
    const ChunkStore store = chunk_store_from_jsonl(
        read_file(std::string(fixture_dir) + "/chunks_64.jsonl"), space);
    if (store.size() != 64) return {false, "fixture store has the wrong size"};

    const RagTranscript t =
        run_rag_demo(space, store, "wave packet drift", "gauge charge state", 5, 10, 42);

    // brute-force oracle over every turn's recorded query
    bool retrieval_ok = true;
    for (const RagTurn& turn : t.turns) {
        std::vector<std::pair<double, std::string>> all;
        for (size_t i = 0; i < store.size(); ++i)
            all.emplace_back(cosine_similarity(turn.query_embedding, store.at(i).embedding),
                             store.at(i).id);
        std::sort(all.begin(), all.end(), [](const auto& a, const auto& b) {
            if (a.first != b.first) return a.first > b.first;
            return a.second < b.second;
        });
        for (size_t i = 0; i < turn.retrieved_ids.size(); ++i)
            retrieval_ok = retrieval_ok && turn.retrieved_ids[i] == all[i].second;
    }
    const bool pass = retrieval_ok && t.max_drift < t.max_control_drift;
    return {pass, std::string("retrieval ") + (retrieval_ok ? "matches oracle" : "MISMATCH") +
                      ", max drift " + fmt(t.max_drift) + " vs control " +
                      fmt(t.max_control_drift)};
}

// ---- 10: CLI determinism ----
Outcome criterion_determinism() {
    const char* cli = std::getenv("SEMWAVE_CLI_BIN");
    const char* fixture_dir = std::getenv("SEMWAVE_FIXTURE_DIR");
    if (!cli || !fixture_dir) return {false, "SEMWAVE_CLI_BIN / SEMWAVE_FIXTURE_DIR not set"};

    const fs::path work = fs::temp_directory_path() / "semwave_acceptance";
    fs::remove_all(work);
    fs::create_directories(work);

    auto run = [&](const std::string& args, const fs::path& out) {
        const std::string cmd = std::string(cli) + " " + args + " --out " + out.string() +
                                " > " + (out.string() + ".stdout") + " 2>&1";
        return std::system(cmd.c_str()) == 0;
    };
    // snapshot of every regular file under a directory
    auto snapshot = [](const fs::path& dir) {
        std::vector<std::pair<std::string, std::string>> files;
        for (const auto& entry : fs::recursive_directory_iterator(dir)) {
            if (!entry.is_regular_file()) continue;
            std::ifstream in(entry.path(), std::ios::binary);
            std::stringstream body;
            body << in.rdbuf();
            files.emplace_back(fs::relative(entry.path(), dir).string(), body.str());
        }
        std::sort(files.begin(), files.end());
        return files;
    };

    const std::vector<std::pair<std::string, std::string>> commands = {
        {"eigen", "eigen --potential harmonic --k 3 --n 256"},
        {"evolve", "evolve --potential harmonic --steps 50 --record-every 10 --save-states"},
        {"nlse", "evolve --gamma -1 --method split_step_spectral --initial soliton "
                 "--x-min -20 --x-max 20 --n 256 --steps 50 --record-every 25"},
        {"rag", "rag-demo --space " + std::string(fixture_dir) + "/token_space_64.json" +
                    " --chunks " + std::string(fixture_dir) + "/chunks_64.jsonl" +
                    " --context \"wave packet drift\" --question \"gauge charge state\" "
                    "--k 5 --turns 5 --seed 42"}};

    for (const auto& [name, args] : commands) {
        // the exact same invocation, repeated into the same directory
        const fs::path out = work / name;
        if (!run(args, out)) return {false, name + ": command failed"};
        const auto first = snapshot(out);
        if (first.empty()) return {false, name + ": produced no output files"};
        if (!run(args, out)) return {false, name + ": repeat command failed"};
        if (snapshot(out) != first)
            return {false, name + ": outputs differ between identical runs"};
    }
    return {true, "repeated runs are byte-identical across " +
                      std::to_string(commands.size()) + " commands"};
}

} // namespace

int main() {
    build_trajectories();

    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"quantization", criterion_quantization},
        {"unitarity", criterion_unitarity},
        {"nlse soliton", criterion_soliton},
        {"euler-lagrange consistency", criterion_residual},
        {"gauge invariance", criterion_gauge},
        {"charge conservation", criterion_charge},
        {"dimensional analysis", criterion_units},
        {"disambiguation analog", criterion_disambiguation},
        {"rag anchor", criterion_rag},
        {"determinism", criterion_determinism},
    };

    int failures = 0;
    for (size_t i = 0; i < criteria.size(); ++i) {
        Outcome outcome;
        try {
            outcome = criteria[i].second();
        } catch (const std::exception& e) {
            outcome = {false, std::string("exception: ") + e.what()};
        }
        if (!outcome.pass) ++failures;
        std::printf("%s criterion %zu (%s): %s\n", outcome.pass ? "PASS" : "FAIL", i + 1,
                    criteria[i].first.c_str(), outcome.detail.c_str());
        std::fflush(stdout);
    }
    return failures == 0 ? 0 : 1;
}
