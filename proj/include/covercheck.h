#ifndef COVERCHECK_H
#define COVERCHECK_H

/* C interface of the covercheck shared library. All analysis results cross
 * this boundary as rendered reports; no C++ types or exceptions escape. */

#ifdef __cplusplus
extern "C" {
#endif

typedef enum cc_status {
    CC_OK = 0,          /* computed; the report is valid */
    CC_INPUT_ERROR = 1, /* bad problem text, flags, or preconditions */
    CC_LIMIT = 2,       /* cooperative timeout hit */
    CC_INTERNAL = 3     /* invariant violation or unexpected failure */
} cc_status;

/* Opaque parsed problem file. */
typedef struct cc_problem cc_problem;

typedef struct cc_options {
    const char* command; /* gb, is-finite, non-finite-locus, is-flat,
                            non-flat-locus, is-etale, non-etale-locus,
                            covering, fiber */
    int json;            /* nonzero: machine report (one JSON object) */
    const char* point;   /* point name for `fiber`; may be NULL otherwise */
    int assume_reduced;  /* `covering` only */
    long timeout_seconds;/* <= 0 means unlimited */
    const char* order;   /* NULL keeps the file's order; else
                            "lex" | "grevlex" | "<fiber>,<base>" */
} cc_options;

/* Fills defaults: no command, text output, no point, no limit. */
void cc_options_init(cc_options* opts);

/* Parses problem text into *out. The handle must be released. */
cc_status cc_problem_parse(const char* text, cc_problem** out);
void cc_problem_release(cc_problem* problem);

/* Runs one command against a parsed problem. On CC_OK, *report_out holds a
 * NUL-terminated report owned by the caller via cc_string_release. */
cc_status cc_run(const cc_problem* problem, const cc_options* opts,
                 char** report_out);

void cc_string_release(char* s);

/* Human message for the most recent failure on the calling thread. */
const char* cc_last_error(void);

const char* cc_version(void);

#ifdef __cplusplus
}
#endif

#endif /* COVERCHECK_H */
