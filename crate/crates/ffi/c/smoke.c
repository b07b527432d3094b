#include <stdio.h>
#include "thompson_stab.h"
int main(void) {
    FsPoint *p = NULL; FsGens *g = NULL; bool ok = false;
    if (fs_point_parse("4/15", &p) != FS_STATUS_OK) return 1;
    if (fs_gens_compute(p, 0, &g) != FS_STATUS_OK) return 2;
    char *t = fs_gens_to_text(g); printf("%s", t); fs_string_free(t);
    if (fs_gens_verify(g, 10, 6, 0, &ok) != FS_STATUS_OK || !ok) return 3;
    FsPoint *bad = NULL;
    int st = fs_point_parse("10()", &bad); printf("%d %s\n", st, fs_last_error_message());
    fs_gens_free(g); fs_point_free(p);
    return 0;
}
