#include <stdio.h>
#include <string.h>
#include "wreathlab.h"

static int fails = 0;

static void expect(int ok, const char *what) {
    if (!ok) {
        fprintf(stderr, "failed: %s\n", what);
        fails++;
    }
}

int main(void) {
    WlTree *a = NULL, *b = NULL, *ab = NULL;
    expect(wl_tree_parse("2x3", "[1; 0,0]", &a) == WL_STATUS_OK, "parse a");
    expect(wl_tree_parse("2x3", "[0; 1,0]", &b) == WL_STATUS_OK, "parse b");
    expect(wl_tree_mul(a, b, &ab) == WL_STATUS_OK, "mul");
    uint64_t order = 0;
    expect(wl_tree_order(ab, &order) == WL_STATUS_OK && order == 6, "order 6");
    char *s = NULL;
    expect(wl_tree_format(ab, &s) == WL_STATUS_OK && strcmp(s, "[1; 0,1]") == 0, "format");
    wl_string_free(s);

    WlTree *bad = NULL;
    expect(wl_tree_parse("2x3", "[1; 0,0", &bad) == WL_STATUS_PARSE, "parse error code");
    expect(bad == NULL, "no handle on error");
    expect(strstr(wl_last_error(), "byte 7") != NULL, "error offset");

    WlH *h = NULL;
    bool central = false;
    expect(wl_h_normalize("r^4", 2, true, &h) == WL_STATUS_OK, "normalize");
    expect(wl_h_is_central(h, &central) == WL_STATUS_OK && central, "rho^4 central");

    wl_h_free(h);
    wl_tree_free(a);
    wl_tree_free(b);
    wl_tree_free(ab);
    if (fails == 0) {
        printf("ok\n");
    }
    return fails;
}
