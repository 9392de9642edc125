#include <stdio.h>
#include <string.h>

#include "splitcomp/splitcomp.h"

int main(void) {
  sc_session* s = NULL;
  sc_census* c = NULL;
  char* key = NULL;
  size_t b = 0, u = 0, o = 0;
  int failures = 0;

  if (sc_session_create(2, &s) != SC_OK) return 1;
  if (sc_census_create(s, "poset", 5, 0, &c) != SC_OK) return 1;
  sc_census_counts(c, &b, &u, &o);
  if (sc_census_size(c) != 21 || u != 17) ++failures;
  sc_census_destroy(c);

  if (sc_canonical_key(s, "@", &key) != SC_OK) return 1;
  if (strncmp(key, "01", 2) != 0) ++failures;
  sc_string_free(key);

  if (sc_canonical_key(s, "{\"class\":\"cover\"", &key) != SC_ERR_PARSE) ++failures;
  if (strlen(sc_session_last_error(s)) == 0) ++failures;

  sc_session_destroy(s);
  printf("capi smoke: %s\n", failures == 0 ? "ok" : "failed");
  return failures == 0 ? 0 : 1;
}
