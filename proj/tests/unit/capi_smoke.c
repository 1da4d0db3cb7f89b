#include <stdio.h>
#include <string.h>

#include "gcx/gcx.h"

/* The header must be usable from plain C. */
int main(void) {
  gcx_graph* g = NULL;
  gcx_complex* k = NULL;
  int64_t f[8];
  size_t len = 0;
  if (gcx_graph_family("path-complement", 8, NULL, 0, 0, &g) != GCX_OK) return 1;
  if (gcx_complex_from_graph(g, 0, &k) != GCX_OK) return 1;
  if (gcx_complex_fvector(k, f, 8, &len) != GCX_OK || len != 4) return 1;
  if (f[0] != 8 || f[1] != 21 || f[2] != 20 || f[3] != 5) return 1;
  gcx_complex_free(k);
  gcx_graph_free(g);
  if (gcx_graph_family("paley", 0, NULL, 0, 9, &g) != GCX_ERR_INVALID) return 1;
  printf("%s\n", gcx_last_error());
  return 0;
}
