/* Copyright 2026 the ifbm authors
 * SPDX-License-Identifier: Apache-2.0
 *
 * Confirms the public header compiles as plain C and the shared library
 * drives end to end from C.
 */

#include <stdio.h>
#include <stdlib.h>

#include <ifbm/ifbm.h>

int main(void) {
  ifbm_plan* plan = NULL;
  if (ifbm_plan_unilateral(0.5, 16, &plan) != IFBM_OK) {
    fprintf(stderr, "plan: %s\n", ifbm_last_error());
    return 1;
  }
  const int64_t points = ifbm_plan_points(plan);
  double* values = malloc((size_t)points * sizeof(double));
  if (ifbm_generate(plan, 1, 0, values) != IFBM_OK) return 1;
  if (values[0] != 0.0) return 1;

  ifbm_stats stats;
  if (ifbm_extract_stats(plan, values, &stats) != IFBM_OK) return 1;
  if (stats.occupation < 0.0 || stats.occupation > 1.0) return 1;

  double err = 0.0;
  if (ifbm_verify_map_exactness(plan, &err) != IFBM_OK) return 1;
  if (err > 1e-8) return 1;

  free(values);
  ifbm_plan_free(plan);
  return 0;
}
