#ifndef PCURV_H
#define PCURV_H

#if defined(__GNUC__)
#define PCURV_API __attribute__((visibility("default")))
#else
#define PCURV_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
  PCURV_OK = 0,
  PCURV_ERR_PARSE = 2,
  PCURV_ERR_MATH = 3,
  PCURV_ERR_ARG = 4,
  PCURV_ERR_INTERNAL = 5
} pcurv_status;

typedef struct pcurv_op pcurv_op;

PCURV_API const char* pcurv_version(void);

/* Last failure on the calling thread as a JSON object {kind, message[, position]}, or "" */
PCURV_API const char* pcurv_last_error(void);

/* Strings returned through out-parameters are owned by the caller. */
PCURV_API void pcurv_string_free(char* s);

/* Operators over Q(x). */
PCURV_API pcurv_status pcurv_op_parse(const char* text, pcurv_op** out);
PCURV_API void pcurv_op_free(pcurv_op* op);
PCURV_API int pcurv_op_order(const pcurv_op* op);
PCURV_API char* pcurv_op_to_string(const pcurv_op* op);
PCURV_API pcurv_status pcurv_op_mul(const pcurv_op* a, const pcurv_op* b, pcurv_op** out);
/* a = q*b + r with ord r < ord b */
PCURV_API pcurv_status pcurv_op_divmod(const pcurv_op* a, const pcurv_op* b, pcurv_op** q, pcurv_op** r);

/* Runs a subcommand. args_json is an object of flag name -> string value.
   On success and on failure, *json_out (if non-null) receives a report. */
PCURV_API pcurv_status pcurv_run(const char* command, const char* args_json, char** text_out, char** json_out);

/* NULL-terminated list of subcommand names. */
PCURV_API const char* const* pcurv_commands(void);

#ifdef __cplusplus
}
#endif

#endif
