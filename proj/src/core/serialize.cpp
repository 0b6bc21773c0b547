#include "serialize.hpp"

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

namespace semwave {

using nlohmann::json;

namespace {

// %.17g round-trips doubles exactly and keeps file output deterministic.
std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

json parse_json(const std::string& text, const char* what) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded())
        throw_error(ErrorCode::parse_error, std::string(what) + ": malformed JSON");
    return j;
}

double get_number(const json& j, const char* key, const char* what) {
    if (!j.contains(key) || !j[key].is_number())
        throw_error(ErrorCode::parse_error,
                    std::string(what) + ": missing numeric field '" + key + "'");
    return j[key].get<double>();
}

SpatialGrid grid_from_json(const json& g, const char* what) {
    if (!g.is_object()) throw_error(ErrorCode::parse_error, std::string(what) + ": bad grid");
    const int n = static_cast<int>(get_number(g, "n", what));
    const double x_min = get_number(g, "x_min", what);
    const double x_max = get_number(g, "x_max", what);
    if (!g.contains("boundary") || !g["boundary"].is_string())
        throw_error(ErrorCode::parse_error, std::string(what) + ": missing grid boundary");
    return make_grid(n, x_min, x_max, boundary_from_name(g["boundary"].get<std::string>()));
}

json grid_to_json(const SpatialGrid& grid) {
    return json{{"n", grid.n_points},
                {"x_min", grid.x_min},
                {"x_max", grid.x_max},
                {"boundary", boundary_name(grid.boundary)}};
}

} // namespace

std::string wavefunction_to_json(const WaveFunction& psi) {
    json j;
    j["grid"] = grid_to_json(psi.grid);
    json re = json::array(), im = json::array();
    for (const cplx& a : psi.amplitudes) {
        re.push_back(a.real());
        im.push_back(a.imag());
    }
    j["re"] = std::move(re);
    j["im"] = std::move(im);
    return j.dump();
}

WaveFunction wavefunction_from_json(const std::string& text) {
    const json j = parse_json(text, "wavefunction");
    if (!j.contains("grid") || !j.contains("re") || !j.contains("im"))
        throw_error(ErrorCode::parse_error, "wavefunction: needs grid, re, im");
    const SpatialGrid grid = grid_from_json(j["grid"], "wavefunction");
    if (!j["re"].is_array() || !j["im"].is_array() ||
        j["re"].size() != static_cast<size_t>(grid.n_points) ||
        j["im"].size() != static_cast<size_t>(grid.n_points))
        throw_error(ErrorCode::parse_error, "wavefunction: re/im arrays must match grid size");
    std::vector<cplx> amp(static_cast<size_t>(grid.n_points));
    for (size_t i = 0; i < amp.size(); ++i) {
        if (!j["re"][i].is_number() || !j["im"][i].is_number())
            throw_error(ErrorCode::parse_error, "wavefunction: non-numeric amplitude");
        amp[i] = cplx{j["re"][i].get<double>(), j["im"][i].get<double>()};
    }
    return make_wavefunction(grid, std::move(amp));
}

std::string wavefunction_to_csv(const WaveFunction& psi) {
    std::ostringstream out;
    out << "# grid n=" << psi.grid.n_points << " x_min=" << fmt(psi.grid.x_min)
        << " x_max=" << fmt(psi.grid.x_max) << " boundary=" << boundary_name(psi.grid.boundary)
        << "\n";
    out << "re,im\n";
    for (const cplx& a : psi.amplitudes) out << fmt(a.real()) << "," << fmt(a.imag()) << "\n";
    return out.str();
}

WaveFunction wavefunction_from_csv(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line) || line.rfind("# grid ", 0) != 0)
        throw_error(ErrorCode::parse_error, "wavefunction csv: missing grid metadata comment");
    int n = 0;
    double x_min = 0.0, x_max = 0.0;
    char boundary_buf[32] = {0};
    if (std::sscanf(line.c_str(), "# grid n=%d x_min=%lf x_max=%lf boundary=%31s", &n, &x_min,
                    &x_max, boundary_buf) != 4)
        throw_error(ErrorCode::parse_error, "wavefunction csv: bad grid metadata");
    const SpatialGrid grid = make_grid(n, x_min, x_max, boundary_from_name(boundary_buf));
    if (!std::getline(in, line) || line != "re,im")
        throw_error(ErrorCode::parse_error, "wavefunction csv: missing re,im header");
    std::vector<cplx> amp;
    amp.reserve(static_cast<size_t>(n));
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        double re = 0.0, im = 0.0;
        if (std::sscanf(line.c_str(), "%lf,%lf", &re, &im) != 2)
            throw_error(ErrorCode::parse_error, "wavefunction csv: bad data row '" + line + "'");
        amp.emplace_back(re, im);
    }
    return make_wavefunction(grid, std::move(amp));
}

std::string potential_to_json(const PotentialSpec& spec) {
    json j;
    j["type"] = spec.name();
    switch (spec.kind()) {
        case PotentialKind::free: break;
        case PotentialKind::harmonic:
            j["m"] = spec.mass();
            j["omega"] = spec.omega();
            break;
        case PotentialKind::double_well:
            j["a"] = spec.well_a();
            j["b"] = spec.well_b();
            break;
        case PotentialKind::cubic_nonlinear:
            j["gamma"] = spec.gamma();
            break;
        case PotentialKind::mexican_hat:
            j["mu2"] = spec.mu2();
            j["lambda"] = spec.lambda();
            break;
    }
    return j.dump();
}

PotentialSpec potential_from_json(const std::string& text) {
    const json j = parse_json(text, "potential");
    if (!j.contains("type") || !j["type"].is_string())
        throw_error(ErrorCode::parse_error, "potential: missing type tag");
    const std::string type = j["type"].get<std::string>();
    if (type == "free") return PotentialSpec::free_particle();
    if (type == "harmonic")
        return PotentialSpec::harmonic(get_number(j, "m", "potential"),
                                       get_number(j, "omega", "potential"));
    if (type == "double_well")
        return PotentialSpec::double_well(get_number(j, "a", "potential"),
                                          get_number(j, "b", "potential"));
    if (type == "cubic_nonlinear")
        return PotentialSpec::cubic_nonlinear(get_number(j, "gamma", "potential"));
    if (type == "mexican_hat")
        return PotentialSpec::mexican_hat(get_number(j, "mu2", "potential"),
                                          get_number(j, "lambda", "potential"));
    throw_error(ErrorCode::parse_error, "potential: unknown type '" + type + "'");
}

std::string token_space_to_json(const TokenSpace& space) {
    json tokens = json::array();
    for (size_t i = 0; i < space.size(); ++i) {
        tokens.push_back(json{{"text", space.tokens()[i]},
                              {"embedding", space.embedding(i)},
                              {"charge", space.charge(i)}});
    }
    return json{{"dim", space.dim()}, {"tokens", std::move(tokens)}}.dump();
}

TokenSpace token_space_from_json(const std::string& text) {
    const json j = parse_json(text, "token space");
    if (!j.contains("dim") || !j.contains("tokens") || !j["tokens"].is_array())
        throw_error(ErrorCode::parse_error, "token space: needs dim and tokens");
    const int dim = static_cast<int>(get_number(j, "dim", "token space"));
    std::vector<std::string> tokens;
    std::vector<std::vector<double>> embeddings;
    std::vector<double> charges;
    for (const json& t : j["tokens"]) {
        if (!t.contains("text") || !t["text"].is_string() || !t.contains("embedding") ||
            !t["embedding"].is_array())
            throw_error(ErrorCode::parse_error, "token space: bad token entry");
        tokens.push_back(t["text"].get<std::string>());
        std::vector<double> e;
        for (const json& v : t["embedding"]) {
            if (!v.is_number())
                throw_error(ErrorCode::parse_error, "token space: non-numeric embedding entry");
            e.push_back(v.get<double>());
        }
        if (static_cast<int>(e.size()) != dim)
            throw_error(ErrorCode::parse_error,
                        "token space: embedding size disagrees with dim for '" +
                            tokens.back() + "'");
        embeddings.push_back(std::move(e));
        charges.push_back(t.contains("charge") ? get_number(t, "charge", "token space") : 0.0);
    }
    return TokenSpace(std::move(tokens), std::move(embeddings), std::move(charges));
}

ChunkStore chunk_store_from_jsonl(const std::string& text, const TokenSpace& space) {
    std::vector<Chunk> chunks;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const json j = parse_json(line, "chunk store line");
        if (!j.contains("id") || !j.contains("text") || !j["text"].is_string())
            throw_error(ErrorCode::parse_error, "chunk store: each line needs id and text");
        Chunk c;
        c.id = j["id"].is_string() ? j["id"].get<std::string>()
                                   : std::to_string(j["id"].get<long long>());
        c.tokens = tokenize(j["text"].get<std::string>(), space);
        c.embedding = embed(c.tokens, space);
        chunks.push_back(std::move(c));
    }
    return ChunkStore(std::move(chunks));
}

std::string gauge_report_to_json(const GaugeCheckReport& report) {
    json j{{"theta_description", report.theta_description},
           {"max_abs_density_diff", report.max_abs_density_diff},
           {"max_covariance_residual", report.max_covariance_residual},
           {"max_lagrangian_density_diff", report.max_lagrangian_density_diff},
           {"charge_before", report.charge_before},
           {"charge_after", report.charge_after},
           {"convention", report.convention}};
    return j.dump(2) + "\n";
}

std::string transcript_to_json(const RagTranscript& t) {
    json turns = json::array();
    for (const RagTurn& turn : t.turns) {
        turns.push_back(json{{"turn", turn.turn},
                             {"retrieved_ids", turn.retrieved_ids},
                             {"query_embedding", turn.query_embedding},
                             {"response_embedding", turn.response_embedding},
                             {"nearest_token", turn.nearest_token},
                             {"prompt_charge", turn.prompt_charge},
                             {"drift", turn.drift}});
    }
    json j{{"context", t.context},
           {"question", t.question},
           {"k", t.k},
           {"turns_requested", t.n_turns},
           {"seed", t.seed},
           {"noise_sigma", t.noise_sigma},
           {"anchor", t.anchor},
           {"turns", std::move(turns)},
           {"drift_series", t.drift_series},
           {"control_drift_series", t.control_drift_series},
           {"max_drift", t.max_drift},
           {"max_control_drift", t.max_control_drift}};
    return j.dump(2) + "\n";
}

std::string trajectory_to_csv(const Trajectory& traj) {
    std::ostringstream out;
    out << "t,norm,energy,x_expect,charge\n";
    for (size_t i = 0; i < traj.size(); ++i) {
        const ObservableRecord& r = traj.observables[i];
        out << fmt(traj.times[i]) << "," << fmt(r.norm) << "," << fmt(r.energy) << ","
            << fmt(r.x_expect) << "," << fmt(r.noether_charge) << "\n";
    }
    return out.str();
}

std::string energies_to_csv(const EigenSolution& solution) {
    std::ostringstream out;
    out << "index,energy\n";
    for (size_t i = 0; i < solution.energies.size(); ++i)
        out << i << "," << fmt(solution.energies[i]) << "\n";
    return out.str();
}

std::string profile_to_csv(const SpatialGrid& grid, const std::vector<double>& values,
                           const std::string& value_column) {
    std::ostringstream out;
    out << "x," << value_column << "\n";
    for (int i = 0; i < grid.n_points; ++i)
        out << fmt(grid.x(i)) << "," << fmt(values[static_cast<size_t>(i)]) << "\n";
    return out.str();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw_error(ErrorCode::io_error, "cannot open '" + path + "' for reading");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw_error(ErrorCode::io_error, "cannot open '" + path + "' for writing");
    out << contents;
    if (!out) throw_error(ErrorCode::io_error, "failed writing '" + path + "'");
}

} // namespace semwave
