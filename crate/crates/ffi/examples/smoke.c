#include <stdio.h>
#include "firebreak.h"

int main(void) {
    FbGraph *g = NULL;
    if (fb_graph_generate("complete", 4, -1, -1, -1, -1, -1, 0, &g) != FB_STATUS_OK) {
        fprintf(stderr, "%s\n", fb_last_error());
        return 1;
    }
    size_t beta = 0;
    bool exact = false;
    if (fb_solve_best(g, 1, 0, 1, &beta, &exact, NULL) != FB_STATUS_OK) {
        fprintf(stderr, "%s\n", fb_last_error());
        return 1;
    }
    fb_graph_free(g);
    if (fb_graph_generate("nonsense", 4, -1, -1, -1, -1, -1, 0, &g) != FB_STATUS_UNKNOWN) {
        return 1;
    }
    printf("beta=%zu exact=%d\n", beta, exact ? 1 : 0);
    return 0;
}
