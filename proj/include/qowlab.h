/* Copyright 2026 The qowlab Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* C interface to the qowlab experiment runner. All experiment logic lives
 * behind this boundary; clients exchange JSON strings and error codes only.
 */

#ifndef QOWLAB_H
#define QOWLAB_H

#ifdef __cplusplus
extern "C" {
#endif

typedef struct qowlab_runner qowlab_runner;

qowlab_runner* qowlab_runner_new(void);
void qowlab_runner_free(qowlab_runner* runner);

/* Runs a named experiment. params_json is a JSON object (NULL or "" for all
 * defaults); format is "json" or "csv" (NULL means json). On any return
 * value except -1 without output, *report_out receives a malloc'd report
 * string to release with qowlab_free_string.
 *
 * Returns 0 when every checked property passed, 2 when the report's verdict
 * is "fail" or a numeric check aborted the run, 1 on a usage error (unknown
 * experiment, bad parameter, unsupported size), -1 on internal failure.
 * A report is produced for 0 and for verdict-fail 2; error returns leave
 * *report_out NULL and the message readable via qowlab_last_error. */
int qowlab_run(qowlab_runner* runner, const char* experiment,
               const char* params_json, const char* format,
               char** report_out);

/* Newline-separated experiment names; release with qowlab_free_string. */
int qowlab_experiments(qowlab_runner* runner, char** names_out);

/* Message from the most recent failing call on this runner. */
const char* qowlab_last_error(const qowlab_runner* runner);

void qowlab_free_string(char* s);

const char* qowlab_version(void);

#ifdef __cplusplus
}
#endif

#endif /* QOWLAB_H */
