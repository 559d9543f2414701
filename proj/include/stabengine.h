/* C interface to the stabilizer-model analysis engine.
 *
 * All report functions return a status code and, on success, a heap-allocated
 * NUL-terminated artifact in *out; release it with se_free(). Status codes:
 *   0 success, 1 configuration error, 2 consistency-check failure,
 *   3 resource limit exceeded.
 */
#ifndef STABENGINE_H
#define STABENGINE_H

#ifdef __cplusplus
extern "C" {
#endif

typedef struct se_model se_model;

enum se_status {
  SE_OK = 0,
  SE_CONFIG_ERROR = 1,
  SE_CHECK_FAILED = 2,
  SE_RESOURCE_LIMIT = 3
};

const char* se_version(void);
/* message from the most recent failing call on this thread */
const char* se_last_error(void);

/* family: "toric" or "xz"; periodic: 0 open boundaries, 1 periodic */
int se_model_create(const char* family, int lx, int ly, double alpha,
                    int periodic, se_model** out);
void se_model_destroy(se_model* m);

/* symmetry/localization/closure report (JSON) */
int se_analyze(se_model* m, char** out);
/* order-parameter sweep over the alpha grid (CSV) */
int se_sweep(se_model* m, const double* alphas, int n_alphas, char** out);
/* adaptive-measurement protocol run record (JSON) */
int se_simulate(se_model* m, int shots, unsigned long long seed,
                int strict_separation, char** out);
/* sector invariants, statistics and mobility report (JSON) */
int se_invariants(se_model* m, char** out);
/* chain-vs-dense and channel-scaling cross-check report (JSON) */
int se_oracle(se_model* m, const double* alphas, int n_alphas, char** out);

void se_free(char* buf);

#ifdef __cplusplus
}
#endif

#endif /* STABENGINE_H */
