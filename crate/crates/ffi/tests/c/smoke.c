#include <stdio.h>
#include <string.h>

#include "poisson3.h"

#define CHECK(cond)                                                   \
    do {                                                              \
        if (!(cond)) {                                                \
            fprintf(stderr, "%s:%d: %s\n", __FILE__, __LINE__, #cond); \
            return 1;                                                 \
        }                                                             \
    } while (0)

int main(void) {
    P3Algebra *alg = NULL;
    CHECK(p3_algebra_new("heisenberg", NULL, &alg) == P3_STATUS_OK);

    P3Table *table = NULL;
    CHECK(p3_table_compute(alg, 4, &table) == P3_STATUS_OK);
    size_t dim = 0;
    CHECK(p3_table_dim(table, 3, 4, &dim) == P3_STATUS_OK);
    CHECK(dim == 5);

    char *text = NULL;
    CHECK(p3_poisson_differential(alg, "x", &text) == P3_STATUS_OK);
    CHECK(strcmp(text, "-1*z*dy") == 0);
    p3_string_free(text);

    CHECK(p3_algebra_new("book", NULL, &alg) == P3_STATUS_INVALID_PARAMETER);
    CHECK(strstr(p3_last_error(), "tau") != NULL);

    p3_table_free(table);
    p3_algebra_free(alg);
    printf("ok %s\n", p3_version());
    return 0;
}
