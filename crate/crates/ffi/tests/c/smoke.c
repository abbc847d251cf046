#include <stdio.h>
#include <string.h>

#include "mwpoly.h"

#define CHECK(cond)                                                   \
    do {                                                              \
        if (!(cond)) {                                                \
            fprintf(stderr, "%s:%d: %s (%s)\n", __FILE__, __LINE__,   \
                    #cond, mw_last_error_message());                  \
            return 1;                                                 \
        }                                                             \
    } while (0)

int main(void) {
    MwPoly *f = NULL, *h = NULL, *g = NULL;
    char *s = NULL;

    CHECK(mw_poly_parse("mw:5,4", &f) == MW_STATUS_OK);
    CHECK(mw_poly_parse("x^4+x+1", &h) == MW_STATUS_OK);
    CHECK(mw_poly_mul(f, h, &g) == MW_STATUS_OK);
    CHECK(mw_poly_to_string(g, &s) == MW_STATUS_OK);
    CHECK(strcmp(s, "x^9+x^7+1") == 0);
    mw_string_free(s);

    MwHitList *hits = NULL;
    CHECK(mw_verify_table1(&hits) == MW_STATUS_OK);
    CHECK(mw_hit_list_len(hits) == 14);
    mw_hit_list_free(hits);

    size_t pairs = 0, found = 1;
    CHECK(mw_corollary1_sweep(9, 11, 1, &pairs, &found) == MW_STATUS_OK);
    CHECK(pairs == 18 && found == 0);

    MwPoly *bad = NULL;
    CHECK(mw_poly_parse("x^^2", &bad) == MW_STATUS_PARSE);
    CHECK(bad == NULL);

    mw_poly_free(f);
    mw_poly_free(h);
    mw_poly_free(g);
    printf("ok\n");
    return 0;
}
