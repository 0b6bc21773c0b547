#include "semwave/semwave.h"

#include <json.hpp>

#include <cstring>
#include <string>

#include "core/gauge.hpp"
#include "core/potential.hpp"
#include "core/propagator.hpp"
#include "core/rag.hpp"
#include "core/semantics.hpp"
#include "core/serialize.hpp"
#include "core/units.hpp"
#include "core/wavefunction.hpp"

using namespace semwave;

struct sw_grid {
    SpatialGrid value;
};
struct sw_state {
    WaveFunction value;
};
struct sw_potential {
    PotentialSpec value;
};
struct sw_trajectory {
    Trajectory value;
};
struct sw_eigensolution {
    EigenSolution value;
};
struct sw_gauge_field {
    GaugeField value;
};
struct sw_token_space {
    TokenSpace value;
};
struct sw_chunk_store {
    ChunkStore value;
};

namespace {

thread_local std::string g_last_error;

sw_status to_status(ErrorCode code) {
    switch (code) {
        case ErrorCode::ok: return SW_OK;
        case ErrorCode::invalid_parameter: return SW_ERR_INVALID_PARAMETER;
        case ErrorCode::incompatible_grids: return SW_ERR_INCOMPATIBLE_GRIDS;
        case ErrorCode::degenerate_state: return SW_ERR_DEGENERATE_STATE;
        case ErrorCode::wrong_method: return SW_ERR_WRONG_METHOD;
        case ErrorCode::unsupported_combination: return SW_ERR_UNSUPPORTED_COMBINATION;
        case ErrorCode::convergence_failure: return SW_ERR_CONVERGENCE_FAILURE;
        case ErrorCode::unknown_quantity: return SW_ERR_UNKNOWN_QUANTITY;
        case ErrorCode::degenerate_vector: return SW_ERR_DEGENERATE_VECTOR;
        case ErrorCode::degenerate_embedding: return SW_ERR_DEGENERATE_EMBEDDING;
        case ErrorCode::parse_error: return SW_ERR_PARSE;
        case ErrorCode::io_error: return SW_ERR_IO;
        case ErrorCode::internal: return SW_ERR_INTERNAL;
    }
    return SW_ERR_INTERNAL;
}

template <typename Fn>
sw_status guarded(Fn&& fn) {
    try {
        fn();
        return SW_OK;
    } catch (const Error& e) {
        g_last_error = e.what();
        return to_status(e.code());
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return SW_ERR_INTERNAL;
    } catch (...) {
        g_last_error = "unknown failure";
        return SW_ERR_INTERNAL;
    }
}

sw_status fail_null(const char* what) {
    g_last_error = std::string(what) + ": null argument";
    return SW_ERR_INVALID_PARAMETER;
}

char* dup_string(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

EvolutionConfig from_c(sw_evolution_config c) {
    EvolutionConfig cfg;
    cfg.hbar = c.hbar;
    cfg.mass = c.mass;
    cfg.dt = c.dt;
    cfg.n_steps = c.n_steps;
    cfg.method = c.method == SW_METHOD_SPLIT_STEP_SPECTRAL ? Method::split_step_spectral
                                                           : Method::crank_nicolson;
    cfg.record_every = c.record_every;
    return cfg;
}

std::vector<double> collect(const double* data, size_t n) {
    return std::vector<double>(data, data + n);
}

std::vector<cplx> collect_complex(const double* re, const double* im, size_t n) {
    std::vector<cplx> out(n);
    for (size_t i = 0; i < n; ++i) out[i] = cplx{re[i], im[i]};
    return out;
}

void split_complex(const std::vector<cplx>& in, double* out_re, double* out_im) {
    for (size_t i = 0; i < in.size(); ++i) {
        out_re[i] = in[i].real();
        out_im[i] = in[i].imag();
    }
}

} // namespace

extern "C" {

const char* sw_version(void) { return "0.1.0"; }

const char* sw_status_name(sw_status status) {
    switch (status) {
        case SW_OK: return "ok";
        case SW_ERR_INVALID_PARAMETER: return "invalid_parameter";
        case SW_ERR_INCOMPATIBLE_GRIDS: return "incompatible_grids";
        case SW_ERR_DEGENERATE_STATE: return "degenerate_state";
        case SW_ERR_WRONG_METHOD: return "wrong_method";
        case SW_ERR_UNSUPPORTED_COMBINATION: return "unsupported_combination";
        case SW_ERR_CONVERGENCE_FAILURE: return "convergence_failure";
        case SW_ERR_UNKNOWN_QUANTITY: return "unknown_quantity";
        case SW_ERR_DEGENERATE_VECTOR: return "degenerate_vector";
        case SW_ERR_DEGENERATE_EMBEDDING: return "degenerate_embedding";
        case SW_ERR_PARSE: return "parse_error";
        case SW_ERR_IO: return "io_error";
        case SW_ERR_INTERNAL: return "internal";
    }
    return "unknown";
}

const char* sw_last_error(void) { return g_last_error.c_str(); }

void sw_string_free(char* s) { delete[] s; }

/* -------- grid -------- */

sw_status sw_grid_create(int n_points, double x_min, double x_max, sw_boundary boundary,
                         sw_grid** out) {
    if (!out) return fail_null("sw_grid_create");
    return guarded([&] {
        *out = new sw_grid{make_grid(n_points, x_min, x_max,
                                     boundary == SW_BOUNDARY_PERIODIC ? Boundary::periodic
                                                                      : Boundary::reflecting)};
    });
}

void sw_grid_free(sw_grid* grid) { delete grid; }

int sw_grid_n_points(const sw_grid* grid) { return grid ? grid->value.n_points : 0; }

double sw_grid_dx(const sw_grid* grid) { return grid ? grid->value.dx() : 0.0; }

sw_status sw_grid_points(const sw_grid* grid, double* out_x) {
    if (!grid || !out_x) return fail_null("sw_grid_points");
    return guarded([&] {
        for (int i = 0; i < grid->value.n_points; ++i) out_x[i] = grid->value.x(i);
    });
}

/* -------- states -------- */

sw_status sw_state_gaussian(const sw_grid* grid, double center, double width, double momentum,
                            sw_state** out) {
    if (!grid || !out) return fail_null("sw_state_gaussian");
    return guarded([&] {
        *out = new sw_state{make_gaussian(grid->value, center, width, momentum)};
    });
}

sw_status sw_state_plane_wave(const sw_grid* grid, double k, sw_state** out) {
    if (!grid || !out) return fail_null("sw_state_plane_wave");
    return guarded([&] { *out = new sw_state{make_plane_wave(grid->value, k)}; });
}

sw_status sw_state_from_amplitudes(const sw_grid* grid, const double* re, const double* im,
                                   sw_state** out) {
    if (!grid || !re || !im || !out) return fail_null("sw_state_from_amplitudes");
    return guarded([&] {
        const size_t n = static_cast<size_t>(grid->value.n_points);
        *out = new sw_state{make_wavefunction(grid->value, collect_complex(re, im, n))};
    });
}

sw_status sw_state_clone(const sw_state* state, sw_state** out) {
    if (!state || !out) return fail_null("sw_state_clone");
    return guarded([&] { *out = new sw_state{state->value}; });
}

void sw_state_free(sw_state* state) { delete state; }

int sw_state_n_points(const sw_state* state) { return state ? state->value.size() : 0; }

sw_status sw_state_amplitudes(const sw_state* state, double* out_re, double* out_im) {
    if (!state || !out_re || !out_im) return fail_null("sw_state_amplitudes");
    return guarded([&] { split_complex(state->value.amplitudes, out_re, out_im); });
}

sw_status sw_state_projection(const sw_state* state, double* out_abs) {
    if (!state || !out_abs) return fail_null("sw_state_projection");
    return guarded([&] {
        const std::vector<double> p = embedding_projection(state->value);
        std::memcpy(out_abs, p.data(), p.size() * sizeof(double));
    });
}

sw_status sw_state_norm(const sw_state* state, double* out_norm) {
    if (!state || !out_norm) return fail_null("sw_state_norm");
    return guarded([&] { *out_norm = norm(state->value); });
}

sw_status sw_state_position_expectation(const sw_state* state, double* out_x) {
    if (!state || !out_x) return fail_null("sw_state_position_expectation");
    return guarded([&] { *out_x = position_expectation(state->value); });
}

sw_status sw_state_normalize(const sw_state* state, sw_state** out) {
    if (!state || !out) return fail_null("sw_state_normalize");
    return guarded([&] { *out = new sw_state{normalize(state->value)}; });
}

sw_status sw_state_inner_product(const sw_state* bra, const sw_state* ket, double* out_re,
                                 double* out_im) {
    if (!bra || !ket || !out_re || !out_im) return fail_null("sw_state_inner_product");
    return guarded([&] {
        const cplx v = inner_product(bra->value, ket->value);
        *out_re = v.real();
        *out_im = v.imag();
    });
}

sw_status sw_state_superpose(const sw_state* const* states, const double* coeff_re,
                             const double* coeff_im, size_t count, sw_state** out) {
    if (!states || !coeff_re || !coeff_im || !out) return fail_null("sw_state_superpose");
    return guarded([&] {
        std::vector<SuperpositionTerm> terms;
        terms.reserve(count);
        for (size_t i = 0; i < count; ++i) {
            if (!states[i])
                throw_error(ErrorCode::invalid_parameter, "null state in superposition");
            terms.push_back({&states[i]->value, cplx{coeff_re[i], coeff_im[i]}});
        }
        *out = new sw_state{superpose(terms)};
    });
}

sw_status sw_state_to_json(const sw_state* state, char** out_json) {
    if (!state || !out_json) return fail_null("sw_state_to_json");
    return guarded([&] { *out_json = dup_string(wavefunction_to_json(state->value)); });
}

sw_status sw_state_from_json(const char* json, sw_state** out) {
    if (!json || !out) return fail_null("sw_state_from_json");
    return guarded([&] { *out = new sw_state{wavefunction_from_json(json)}; });
}

sw_status sw_state_to_csv(const sw_state* state, char** out_csv) {
    if (!state || !out_csv) return fail_null("sw_state_to_csv");
    return guarded([&] { *out_csv = dup_string(wavefunction_to_csv(state->value)); });
}

sw_status sw_state_from_csv(const char* csv, sw_state** out) {
    if (!csv || !out) return fail_null("sw_state_from_csv");
    return guarded([&] { *out = new sw_state{wavefunction_from_csv(csv)}; });
}

/* -------- potentials -------- */

sw_status sw_potential_free_particle(sw_potential** out) {
    if (!out) return fail_null("sw_potential_free_particle");
    return guarded([&] { *out = new sw_potential{PotentialSpec::free_particle()}; });
}

sw_status sw_potential_harmonic(double mass, double omega, sw_potential** out) {
    if (!out) return fail_null("sw_potential_harmonic");
    return guarded([&] { *out = new sw_potential{PotentialSpec::harmonic(mass, omega)}; });
}

sw_status sw_potential_double_well(double a, double b, sw_potential** out) {
    if (!out) return fail_null("sw_potential_double_well");
    return guarded([&] { *out = new sw_potential{PotentialSpec::double_well(a, b)}; });
}

sw_status sw_potential_cubic_nonlinear(double gamma, sw_potential** out) {
    if (!out) return fail_null("sw_potential_cubic_nonlinear");
    return guarded([&] { *out = new sw_potential{PotentialSpec::cubic_nonlinear(gamma)}; });
}

sw_status sw_potential_mexican_hat(double mu2, double lambda, sw_potential** out) {
    if (!out) return fail_null("sw_potential_mexican_hat");
    return guarded([&] { *out = new sw_potential{PotentialSpec::mexican_hat(mu2, lambda)}; });
}

sw_status sw_potential_from_json(const char* json, sw_potential** out) {
    if (!json || !out) return fail_null("sw_potential_from_json");
    return guarded([&] { *out = new sw_potential{potential_from_json(json)}; });
}

sw_status sw_potential_to_json(const sw_potential* potential, char** out_json) {
    if (!potential || !out_json) return fail_null("sw_potential_to_json");
    return guarded([&] { *out_json = dup_string(potential_to_json(potential->value)); });
}

void sw_potential_free(sw_potential* potential) { delete potential; }

int sw_potential_state_dependent(const sw_potential* potential) {
    return potential && potential->value.state_dependent() ? 1 : 0;
}

sw_status sw_potential_evaluate(const sw_potential* potential, double x, double psi_abs2,
                                double* out_v) {
    if (!potential || !out_v) return fail_null("sw_potential_evaluate");
    return guarded([&] { *out_v = potential->value.evaluate(x, psi_abs2); });
}

sw_status sw_potential_profile(const sw_potential* potential, const sw_grid* grid,
                               const sw_state* state, double* out_v) {
    if (!potential || !grid || !out_v) return fail_null("sw_potential_profile");
    return guarded([&] {
        const std::vector<double> p =
            potential_profile(potential->value, grid->value, state ? &state->value : nullptr);
        std::memcpy(out_v, p.data(), p.size() * sizeof(double));
    });
}

/* -------- propagation -------- */

sw_status sw_evolve_linear(const sw_state* initial, const sw_potential* potential,
                           sw_evolution_config config, sw_trajectory** out) {
    if (!initial || !potential || !out) return fail_null("sw_evolve_linear");
    return guarded([&] {
        *out = new sw_trajectory{evolve_linear(initial->value, potential->value, from_c(config))};
    });
}

sw_status sw_evolve_nlse(const sw_state* initial, double gamma, sw_evolution_config config,
                         sw_trajectory** out) {
    if (!initial || !out) return fail_null("sw_evolve_nlse");
    return guarded([&] {
        *out = new sw_trajectory{evolve_nlse(initial->value, gamma, from_c(config))};
    });
}

void sw_trajectory_free(sw_trajectory* trajectory) { delete trajectory; }

size_t sw_trajectory_size(const sw_trajectory* trajectory) {
    return trajectory ? trajectory->value.size() : 0;
}

sw_status sw_trajectory_times(const sw_trajectory* trajectory, double* out_t) {
    if (!trajectory || !out_t) return fail_null("sw_trajectory_times");
    return guarded([&] {
        std::memcpy(out_t, trajectory->value.times.data(),
                    trajectory->value.times.size() * sizeof(double));
    });
}

sw_status sw_trajectory_observable(const sw_trajectory* trajectory, sw_observable which,
                                   double* out_values) {
    if (!trajectory || !out_values) return fail_null("sw_trajectory_observable");
    return guarded([&] {
        const std::vector<ObservableRecord>& obs = trajectory->value.observables;
        for (size_t i = 0; i < obs.size(); ++i) {
            switch (which) {
                case SW_OBSERVABLE_NORM: out_values[i] = obs[i].norm; break;
                case SW_OBSERVABLE_ENERGY: out_values[i] = obs[i].energy; break;
                case SW_OBSERVABLE_X_EXPECT: out_values[i] = obs[i].x_expect; break;
                case SW_OBSERVABLE_CHARGE: out_values[i] = obs[i].noether_charge; break;
                default:
                    throw_error(ErrorCode::invalid_parameter, "unknown observable selector");
            }
        }
    });
}

sw_status sw_trajectory_state(const sw_trajectory* trajectory, size_t index, sw_state** out) {
    if (!trajectory || !out) return fail_null("sw_trajectory_state");
    return guarded([&] {
        if (index >= trajectory->value.size())
            throw_error(ErrorCode::invalid_parameter, "trajectory index out of range");
        *out = new sw_state{trajectory->value.states[index]};
    });
}

sw_status sw_trajectory_to_csv(const sw_trajectory* trajectory, char** out_csv) {
    if (!trajectory || !out_csv) return fail_null("sw_trajectory_to_csv");
    return guarded([&] { *out_csv = dup_string(trajectory_to_csv(trajectory->value)); });
}

sw_status sw_eigenstates(const sw_potential* potential, const sw_grid* grid, int k, double hbar,
                         double mass, sw_eigensolution** out) {
    if (!potential || !grid || !out) return fail_null("sw_eigenstates");
    return guarded([&] {
        *out = new sw_eigensolution{eigenstates(potential->value, grid->value, k, hbar, mass)};
    });
}

void sw_eigensolution_free(sw_eigensolution* solution) { delete solution; }

int sw_eigensolution_count(const sw_eigensolution* solution) {
    return solution ? static_cast<int>(solution->value.energies.size()) : 0;
}

sw_status sw_eigensolution_energies(const sw_eigensolution* solution, double* out_e) {
    if (!solution || !out_e) return fail_null("sw_eigensolution_energies");
    return guarded([&] {
        std::memcpy(out_e, solution->value.energies.data(),
                    solution->value.energies.size() * sizeof(double));
    });
}

sw_status sw_eigensolution_state(const sw_eigensolution* solution, int index, sw_state** out) {
    if (!solution || !out) return fail_null("sw_eigensolution_state");
    return guarded([&] {
        if (index < 0 || index >= static_cast<int>(solution->value.states.size()))
            throw_error(ErrorCode::invalid_parameter, "eigenstate index out of range");
        *out = new sw_state{solution->value.states[static_cast<size_t>(index)]};
    });
}

sw_status sw_imaginary_time_ground_state(const sw_potential* potential, const sw_grid* grid,
                                         const sw_state* initial, sw_evolution_config config,
                                         double tol, double* out_energy, sw_state** out_state) {
    if (!potential || !grid || !initial || !out_energy || !out_state)
        return fail_null("sw_imaginary_time_ground_state");
    return guarded([&] {
        GroundStateResult r = imaginary_time_ground_state(potential->value, grid->value,
                                                          initial->value, from_c(config), tol);
        *out_energy = r.energy;
        *out_state = new sw_state{std::move(r.state)};
    });
}

sw_status sw_energy(const sw_state* state, const sw_potential* potential, double hbar,
                    double mass, double* out_energy) {
    if (!state || !potential || !out_energy) return fail_null("sw_energy");
    return guarded([&] { *out_energy = energy(state->value, potential->value, hbar, mass); });
}

/* -------- gauge layer -------- */

sw_status sw_gauge_field_create(const sw_grid* grid, const double* a0, const double* a1,
                                double charge, sw_gauge_field** out) {
    if (!grid || !a0 || !a1 || !out) return fail_null("sw_gauge_field_create");
    return guarded([&] {
        const size_t n = static_cast<size_t>(grid->value.n_points);
        *out = new sw_gauge_field{
            make_gauge_field(grid->value, collect(a0, n), collect(a1, n), charge)};
    });
}

sw_status sw_gauge_field_zero(const sw_grid* grid, double charge, sw_gauge_field** out) {
    if (!grid || !out) return fail_null("sw_gauge_field_zero");
    return guarded([&] { *out = new sw_gauge_field{make_zero_gauge_field(grid->value, charge)}; });
}

void sw_gauge_field_free(sw_gauge_field* field) { delete field; }

sw_status sw_gauge_field_components(const sw_gauge_field* field, double* out_a0,
                                    double* out_a1) {
    if (!field || !out_a0 || !out_a1) return fail_null("sw_gauge_field_components");
    return guarded([&] {
        std::memcpy(out_a0, field->value.a0.data(), field->value.a0.size() * sizeof(double));
        std::memcpy(out_a1, field->value.a1.data(), field->value.a1.size() * sizeof(double));
    });
}

sw_status sw_apply_gauge_transform(const sw_state* state, const sw_gauge_field* field,
                                   const double* theta, const double* theta_dot,
                                   sw_state** out_state, sw_gauge_field** out_field) {
    if (!state || !field || !theta || !out_state || !out_field)
        return fail_null("sw_apply_gauge_transform");
    return guarded([&] {
        const size_t n = static_cast<size_t>(state->value.size());
        GaugeTransform g;
        g.theta = collect(theta, n);
        if (theta_dot) g.theta_dot = collect(theta_dot, n);
        auto [psi2, field2] = apply_gauge_transform(state->value, field->value, g);
        *out_state = new sw_state{std::move(psi2)};
        *out_field = new sw_gauge_field{std::move(field2)};
    });
}

sw_status sw_covariant_derivative_space(const sw_state* state, const sw_gauge_field* field,
                                        double* out_re, double* out_im) {
    if (!state || !field || !out_re || !out_im)
        return fail_null("sw_covariant_derivative_space");
    return guarded([&] {
        split_complex(covariant_derivative_space(state->value, field->value), out_re, out_im);
    });
}

sw_status sw_covariant_derivative_time(const sw_state* state, const sw_gauge_field* field,
                                       const double* dpsi_dt_re, const double* dpsi_dt_im,
                                       double* out_re, double* out_im) {
    if (!state || !field || !out_re || !out_im) return fail_null("sw_covariant_derivative_time");
    return guarded([&] {
        if (!dpsi_dt_re || !dpsi_dt_im)
            throw_error(ErrorCode::invalid_parameter,
                        "time covariant derivative needs the caller-supplied dpsi_dt");
        const size_t n = static_cast<size_t>(state->value.size());
        split_complex(covariant_derivative_time(state->value, field->value,
                                                collect_complex(dpsi_dt_re, dpsi_dt_im, n)),
                      out_re, out_im);
    });
}

sw_status sw_field_strength(const sw_gauge_field* before, const sw_gauge_field* after,
                            double dt, double* out_f01) {
    if (!before || !after || !out_f01) return fail_null("sw_field_strength");
    return guarded([&] {
        const std::vector<double> f = field_strength(before->value, after->value, dt);
        std::memcpy(out_f01, f.data(), f.size() * sizeof(double));
    });
}

sw_status sw_lagrangian_density(const sw_state* state, const double* dpsi_dt_re,
                                const double* dpsi_dt_im, const sw_gauge_field* field,
                                const double* f01, int nonlinearity, double param1,
                                double param2, double hbar, double mass, double* out_density) {
    if (!state || !dpsi_dt_re || !dpsi_dt_im || !field || !f01 || !out_density)
        return fail_null("sw_lagrangian_density");
    return guarded([&] {
        Nonlinearity nl = Nonlinearity::none();
        if (nonlinearity == 1) nl = Nonlinearity::cubic(param1);
        else if (nonlinearity == 2) nl = Nonlinearity::mexican_hat(param1, param2);
        else if (nonlinearity != 0)
            throw_error(ErrorCode::invalid_parameter, "unknown nonlinearity selector");
        const size_t n = static_cast<size_t>(state->value.size());
        const std::vector<double> density = lagrangian_density(
            state->value, collect_complex(dpsi_dt_re, dpsi_dt_im, n), field->value,
            collect(f01, n), nl, hbar, mass);
        std::memcpy(out_density, density.data(), density.size() * sizeof(double));
    });
}

sw_status sw_euler_lagrange_residual(const sw_trajectory* trajectory,
                                     const sw_potential* potential, sw_evolution_config config,
                                     double* out_residual) {
    if (!trajectory || !potential || !out_residual)
        return fail_null("sw_euler_lagrange_residual");
    return guarded([&] {
        *out_residual =
            euler_lagrange_residual(trajectory->value, potential->value, from_c(config));
    });
}

sw_status sw_noether(const sw_state* state, const sw_gauge_field* field, double hbar,
                     double mass, double* out_charge, double* out_j0, double* out_j1) {
    if (!state || !field || !out_charge) return fail_null("sw_noether");
    return guarded([&] {
        const NoetherRecord rec = noether(state->value, field->value, hbar, mass);
        *out_charge = rec.charge;
        if (out_j0) std::memcpy(out_j0, rec.j0.data(), rec.j0.size() * sizeof(double));
        if (out_j1) std::memcpy(out_j1, rec.j1.data(), rec.j1.size() * sizeof(double));
    });
}

sw_status sw_gauge_check(const sw_state* state, const sw_gauge_field* field,
                         const double* theta, double hbar, double mass,
                         const char* theta_description, char** out_report_json) {
    if (!state || !field || !theta || !out_report_json) return fail_null("sw_gauge_check");
    return guarded([&] {
        const size_t n = static_cast<size_t>(state->value.size());
        const GaugeCheckReport report =
            gauge_check(state->value, field->value, collect(theta, n), hbar, mass,
                        theta_description ? theta_description : "");
        *out_report_json = dup_string(gauge_report_to_json(report));
    });
}

/* -------- semantic units -------- */

sw_status sw_units_check(const char* equation, int* out_holds, char** out_report_json) {
    if (!equation || !out_holds) return fail_null("sw_units_check");
    return guarded([&] {
        const units::IdentityResult r = units::check_identity(equation);
        *out_holds = r.holds ? 1 : 0;
        if (out_report_json) {
            nlohmann::json j{{"holds", r.holds},
                             {"lhs", r.lhs.str()},
                             {"rhs", r.rhs.str()},
                             {"difference",
                              {{"m", r.difference.pow_m.str()},
                               {"x", r.difference.pow_x.str()},
                               {"t", r.difference.pow_t.str()}}}};
            *out_report_json = dup_string(j.dump());
        }
    });
}

sw_status sw_units_dimension_of(const char* name, char** out_dimension) {
    if (!name || !out_dimension) return fail_null("sw_units_dimension_of");
    return guarded([&] { *out_dimension = dup_string(units::dimension_of(name).str()); });
}

sw_status sw_units_catalog(char** out_json) {
    if (!out_json) return fail_null("sw_units_catalog");
    return guarded([&] {
        nlohmann::json j = nlohmann::json::object();
        for (const auto& [name, dim] : units::catalog()) j[name] = dim.str();
        *out_json = dup_string(j.dump());
    });
}

/* -------- token layer -------- */

sw_status sw_token_space_from_json(const char* json, sw_token_space** out) {
    if (!json || !out) return fail_null("sw_token_space_from_json");
    return guarded([&] { *out = new sw_token_space{token_space_from_json(json)}; });
}

sw_status sw_token_space_load(const char* path, sw_token_space** out) {
    if (!path || !out) return fail_null("sw_token_space_load");
    return guarded([&] { *out = new sw_token_space{token_space_from_json(read_file(path))}; });
}

void sw_token_space_free(sw_token_space* space) { delete space; }

int sw_token_space_dim(const sw_token_space* space) { return space ? space->value.dim() : 0; }

size_t sw_token_space_size(const sw_token_space* space) {
    return space ? space->value.size() : 0;
}

sw_status sw_chunk_store_from_jsonl(const char* jsonl, const sw_token_space* space,
                                    sw_chunk_store** out) {
    if (!jsonl || !space || !out) return fail_null("sw_chunk_store_from_jsonl");
    return guarded([&] {
        *out = new sw_chunk_store{chunk_store_from_jsonl(jsonl, space->value)};
    });
}

sw_status sw_chunk_store_load(const char* path, const sw_token_space* space,
                              sw_chunk_store** out) {
    if (!path || !space || !out) return fail_null("sw_chunk_store_load");
    return guarded([&] {
        *out = new sw_chunk_store{chunk_store_from_jsonl(read_file(path), space->value)};
    });
}

void sw_chunk_store_free(sw_chunk_store* store) { delete store; }

size_t sw_chunk_store_size(const sw_chunk_store* store) {
    return store ? store->value.size() : 0;
}

sw_status sw_tokenize(const sw_token_space* space, const char* text, char** out_tokens_json) {
    if (!space || !text || !out_tokens_json) return fail_null("sw_tokenize");
    return guarded([&] {
        *out_tokens_json = dup_string(nlohmann::json(tokenize(text, space->value)).dump());
    });
}

sw_status sw_coverage(const sw_token_space* space, const char* corpus, double* out_fraction) {
    if (!space || !corpus || !out_fraction) return fail_null("sw_coverage");
    return guarded([&] { *out_fraction = coverage(corpus, space->value); });
}

sw_status sw_cosine_similarity(const double* u, const double* v, size_t dim, double* out_sim) {
    if (!u || !v || !out_sim) return fail_null("sw_cosine_similarity");
    return guarded([&] {
        *out_sim = cosine_similarity(collect(u, dim), collect(v, dim));
    });
}

sw_status sw_retrieve_top_k(const sw_chunk_store* store, const double* query, size_t dim,
                            int k, char** out_ids_json) {
    if (!store || !query || !out_ids_json) return fail_null("sw_retrieve_top_k");
    return guarded([&] {
        *out_ids_json = dup_string(
            nlohmann::json(retrieve_top_k(collect(query, dim), store->value, k)).dump());
    });
}

sw_status sw_embed_text(const sw_token_space* space, const char* text, double* out_embedding) {
    if (!space || !text || !out_embedding) return fail_null("sw_embed_text");
    return guarded([&] {
        const std::vector<double> e = embed(tokenize(text, space->value), space->value);
        std::memcpy(out_embedding, e.data(), e.size() * sizeof(double));
    });
}

sw_status sw_total_semantic_charge(const sw_token_space* space, const char* text,
                                   double* out_charge) {
    if (!space || !text || !out_charge) return fail_null("sw_total_semantic_charge");
    return guarded([&] {
        *out_charge = total_semantic_charge(tokenize(text, space->value), space->value);
    });
}

sw_status sw_embedding_to_wavepacket(const double* v, const double* axis, size_t dim,
                                     const sw_grid* grid, double width, sw_state** out) {
    if (!v || !axis || !grid || !out) return fail_null("sw_embedding_to_wavepacket");
    return guarded([&] {
        *out = new sw_state{
            embedding_to_wavepacket(collect(v, dim), collect(axis, dim), grid->value, width)};
    });
}

sw_status sw_rag_demo(const sw_token_space* space, const sw_chunk_store* store,
                      const char* context, const char* question, int k, int turns,
                      uint64_t seed, char** out_transcript_json) {
    if (!space || !store || !context || !question || !out_transcript_json)
        return fail_null("sw_rag_demo");
    return guarded([&] {
        const RagTranscript t =
            run_rag_demo(space->value, store->value, context, question, k, turns, seed);
        *out_transcript_json = dup_string(transcript_to_json(t));
    });
}

} /* extern "C" */
