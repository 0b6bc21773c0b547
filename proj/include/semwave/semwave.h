/* semwave: semantic wavefunction simulator - public C API.
 *
 * All entry points return sw_status; outputs go through pointers. Every
 * handle type is opaque and freed with its matching sw_*_free function.
 * On failure the thread-local message from sw_last_error() describes what
 * went wrong. Buffer-filling functions expect caller-allocated storage
 * sized via the corresponding count/size query.
 */

#ifndef SEMWAVE_H
#define SEMWAVE_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sw_status {
    SW_OK = 0,
    SW_ERR_INVALID_PARAMETER = 1,
    SW_ERR_INCOMPATIBLE_GRIDS = 2,
    SW_ERR_DEGENERATE_STATE = 3,
    SW_ERR_WRONG_METHOD = 4,
    SW_ERR_UNSUPPORTED_COMBINATION = 5,
    SW_ERR_CONVERGENCE_FAILURE = 6,
    SW_ERR_UNKNOWN_QUANTITY = 7,
    SW_ERR_DEGENERATE_VECTOR = 8,
    SW_ERR_DEGENERATE_EMBEDDING = 9,
    SW_ERR_PARSE = 10,
    SW_ERR_IO = 11,
    SW_ERR_INTERNAL = 12
} sw_status;

typedef enum sw_boundary { SW_BOUNDARY_PERIODIC = 0, SW_BOUNDARY_REFLECTING = 1 } sw_boundary;

typedef enum sw_method {
    SW_METHOD_CRANK_NICOLSON = 0,
    SW_METHOD_SPLIT_STEP_SPECTRAL = 1
} sw_method;

typedef enum sw_observable {
    SW_OBSERVABLE_NORM = 0,
    SW_OBSERVABLE_ENERGY = 1,
    SW_OBSERVABLE_X_EXPECT = 2,
    SW_OBSERVABLE_CHARGE = 3
} sw_observable;

typedef struct sw_grid sw_grid;
typedef struct sw_state sw_state;
typedef struct sw_potential sw_potential;
typedef struct sw_trajectory sw_trajectory;
typedef struct sw_eigensolution sw_eigensolution;
typedef struct sw_gauge_field sw_gauge_field;
typedef struct sw_token_space sw_token_space;
typedef struct sw_chunk_store sw_chunk_store;

typedef struct sw_evolution_config {
    double hbar;
    double mass;
    double dt;
    long n_steps;
    sw_method method;
    long record_every;
} sw_evolution_config;

const char* sw_version(void);
/* Symbolic name of a status code, e.g. "parse_error". */
const char* sw_status_name(sw_status status);
/* Message for the most recent failure on this thread; never NULL. */
const char* sw_last_error(void);
/* Frees any string returned through a char** out-parameter. */
void sw_string_free(char* s);

/* -------- grid -------- */
sw_status sw_grid_create(int n_points, double x_min, double x_max, sw_boundary boundary,
                         sw_grid** out);
void sw_grid_free(sw_grid* grid);
int sw_grid_n_points(const sw_grid* grid);
double sw_grid_dx(const sw_grid* grid);
sw_status sw_grid_points(const sw_grid* grid, double* out_x);

/* -------- states -------- */
sw_status sw_state_gaussian(const sw_grid* grid, double center, double width, double momentum,
                            sw_state** out);
sw_status sw_state_plane_wave(const sw_grid* grid, double k, sw_state** out);
sw_status sw_state_from_amplitudes(const sw_grid* grid, const double* re, const double* im,
                                   sw_state** out);
sw_status sw_state_clone(const sw_state* state, sw_state** out);
void sw_state_free(sw_state* state);

int sw_state_n_points(const sw_state* state);
sw_status sw_state_amplitudes(const sw_state* state, double* out_re, double* out_im);
/* |psi| per grid point: the projection back to the real embedding axis. */
sw_status sw_state_projection(const sw_state* state, double* out_abs);
sw_status sw_state_norm(const sw_state* state, double* out_norm);
sw_status sw_state_position_expectation(const sw_state* state, double* out_x);
sw_status sw_state_normalize(const sw_state* state, sw_state** out);
sw_status sw_state_inner_product(const sw_state* bra, const sw_state* ket, double* out_re,
                                 double* out_im);
sw_status sw_state_superpose(const sw_state* const* states, const double* coeff_re,
                             const double* coeff_im, size_t count, sw_state** out);
sw_status sw_state_to_json(const sw_state* state, char** out_json);
sw_status sw_state_from_json(const char* json, sw_state** out);
sw_status sw_state_to_csv(const sw_state* state, char** out_csv);
sw_status sw_state_from_csv(const char* csv, sw_state** out);

/* -------- potentials -------- */
sw_status sw_potential_free_particle(sw_potential** out);
sw_status sw_potential_harmonic(double mass, double omega, sw_potential** out);
sw_status sw_potential_double_well(double a, double b, sw_potential** out);
sw_status sw_potential_cubic_nonlinear(double gamma, sw_potential** out);
sw_status sw_potential_mexican_hat(double mu2, double lambda, sw_potential** out);
sw_status sw_potential_from_json(const char* json, sw_potential** out);
sw_status sw_potential_to_json(const sw_potential* potential, char** out_json);
void sw_potential_free(sw_potential* potential);
int sw_potential_state_dependent(const sw_potential* potential);
sw_status sw_potential_evaluate(const sw_potential* potential, double x, double psi_abs2,
                                double* out_v);
/* state may be NULL for state-independent potentials. */
sw_status sw_potential_profile(const sw_potential* potential, const sw_grid* grid,
                               const sw_state* state, double* out_v);

/* -------- propagation -------- */
sw_status sw_evolve_linear(const sw_state* initial, const sw_potential* potential,
                           sw_evolution_config config, sw_trajectory** out);
sw_status sw_evolve_nlse(const sw_state* initial, double gamma, sw_evolution_config config,
                         sw_trajectory** out);
void sw_trajectory_free(sw_trajectory* trajectory);
size_t sw_trajectory_size(const sw_trajectory* trajectory);
sw_status sw_trajectory_times(const sw_trajectory* trajectory, double* out_t);
sw_status sw_trajectory_observable(const sw_trajectory* trajectory, sw_observable which,
                                   double* out_values);
sw_status sw_trajectory_state(const sw_trajectory* trajectory, size_t index, sw_state** out);
sw_status sw_trajectory_to_csv(const sw_trajectory* trajectory, char** out_csv);

sw_status sw_eigenstates(const sw_potential* potential, const sw_grid* grid, int k, double hbar,
                         double mass, sw_eigensolution** out);
void sw_eigensolution_free(sw_eigensolution* solution);
int sw_eigensolution_count(const sw_eigensolution* solution);
sw_status sw_eigensolution_energies(const sw_eigensolution* solution, double* out_e);
sw_status sw_eigensolution_state(const sw_eigensolution* solution, int index, sw_state** out);

sw_status sw_imaginary_time_ground_state(const sw_potential* potential, const sw_grid* grid,
                                         const sw_state* initial, sw_evolution_config config,
                                         double tol, double* out_energy, sw_state** out_state);
sw_status sw_energy(const sw_state* state, const sw_potential* potential, double hbar,
                    double mass, double* out_energy);

/* -------- gauge layer -------- */
sw_status sw_gauge_field_create(const sw_grid* grid, const double* a0, const double* a1,
                                double charge, sw_gauge_field** out);
sw_status sw_gauge_field_zero(const sw_grid* grid, double charge, sw_gauge_field** out);
void sw_gauge_field_free(sw_gauge_field* field);
sw_status sw_gauge_field_components(const sw_gauge_field* field, double* out_a0,
                                    double* out_a1);

/* theta_dot may be NULL for time-independent transforms. */
sw_status sw_apply_gauge_transform(const sw_state* state, const sw_gauge_field* field,
                                   const double* theta, const double* theta_dot,
                                   sw_state** out_state, sw_gauge_field** out_field);
sw_status sw_covariant_derivative_space(const sw_state* state, const sw_gauge_field* field,
                                        double* out_re, double* out_im);
sw_status sw_covariant_derivative_time(const sw_state* state, const sw_gauge_field* field,
                                       const double* dpsi_dt_re, const double* dpsi_dt_im,
                                       double* out_re, double* out_im);
sw_status sw_field_strength(const sw_gauge_field* before, const sw_gauge_field* after,
                            double dt, double* out_f01);
/* nonlinearity: 0 none, 1 cubic (param1 = gamma), 2 mexican hat
 * (param1 = mu2, param2 = lambda). */
sw_status sw_lagrangian_density(const sw_state* state, const double* dpsi_dt_re,
                                const double* dpsi_dt_im, const sw_gauge_field* field,
                                const double* f01, int nonlinearity, double param1,
                                double param2, double hbar, double mass, double* out_density);
sw_status sw_euler_lagrange_residual(const sw_trajectory* trajectory,
                                     const sw_potential* potential, sw_evolution_config config,
                                     double* out_residual);
sw_status sw_noether(const sw_state* state, const sw_gauge_field* field, double hbar,
                     double mass, double* out_charge, double* out_j0, double* out_j1);
sw_status sw_gauge_check(const sw_state* state, const sw_gauge_field* field,
                         const double* theta, double hbar, double mass,
                         const char* theta_description, char** out_report_json);

/* -------- semantic units -------- */
/* Verdict 1 when the identity holds; report carries both sides and the
 * exponent difference as JSON. */
sw_status sw_units_check(const char* equation, int* out_holds, char** out_report_json);
sw_status sw_units_dimension_of(const char* name, char** out_dimension);
sw_status sw_units_catalog(char** out_json);

/* -------- token layer -------- */
sw_status sw_token_space_from_json(const char* json, sw_token_space** out);
sw_status sw_token_space_load(const char* path, sw_token_space** out);
void sw_token_space_free(sw_token_space* space);
int sw_token_space_dim(const sw_token_space* space);
size_t sw_token_space_size(const sw_token_space* space);

sw_status sw_chunk_store_from_jsonl(const char* jsonl, const sw_token_space* space,
                                    sw_chunk_store** out);
sw_status sw_chunk_store_load(const char* path, const sw_token_space* space,
                              sw_chunk_store** out);
void sw_chunk_store_free(sw_chunk_store* store);
size_t sw_chunk_store_size(const sw_chunk_store* store);

/* Tokens come back as a JSON array of strings. */
sw_status sw_tokenize(const sw_token_space* space, const char* text, char** out_tokens_json);
sw_status sw_coverage(const sw_token_space* space, const char* corpus, double* out_fraction);
sw_status sw_cosine_similarity(const double* u, const double* v, size_t dim, double* out_sim);
sw_status sw_retrieve_top_k(const sw_chunk_store* store, const double* query, size_t dim,
                            int k, char** out_ids_json);
sw_status sw_embed_text(const sw_token_space* space, const char* text, double* out_embedding);
sw_status sw_total_semantic_charge(const sw_token_space* space, const char* text,
                                   double* out_charge);
sw_status sw_embedding_to_wavepacket(const double* v, const double* axis, size_t dim,
                                     const sw_grid* grid, double width, sw_state** out);
sw_status sw_rag_demo(const sw_token_space* space, const sw_chunk_store* store,
                      const char* context, const char* question, int k, int turns,
                      uint64_t seed, char** out_transcript_json);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* SEMWAVE_H */
