/* The public header must compile as C and be usable from C. */
#include <stdio.h>
#include <string.h>

#include "leavitt/leavitt.h"

int main(void) {
  lv_graph* g = NULL;
  lv_rank rank = LV_RANK_ONE;
  char* text = NULL;
  if (lv_graph_generate("enm(2,3)", &g) != LV_OK) return 1;
  if (lv_stable_rank(g, 0, LV_FORMAT_TEXT, &rank, &text) != LV_OK) return 1;
  if (rank != LV_RANK_INFINITE || strncmp(text, "sr = inf", 8) != 0) return 1;
  lv_string_free(text);
  lv_graph_free(g);
  if (lv_graph_parse("vertices: a\nedge a -> nowhere\n", &g) != LV_ERR_UNKNOWN_VERTEX) return 1;
  printf("c api smoke test passed\n");
  return 0;
}
