#include <stdio.h>
#include <string.h>
#include "wronskian_appell.h"

static int fail(const char *what) {
    const char *msg = wap_last_error_message();
    fprintf(stderr, "%s: %s\n", what, msg ? msg : "(no message)");
    return 1;
}

int main(void) {
    WapSpec *spec = NULL;
    WapPoly *poly = NULL;
    char *text = NULL;

    if (wap_spec_parse("yablonskii", &spec) != WAP_STATUS_OK) return fail("parse");
    if (wap_compute(spec, "2,1", WAP_ROUTE_CROSS_CHECKED, &poly) != WAP_STATUS_OK) return fail("compute");
    if (wap_poly_degree(poly) != 3) return fail("degree");
    if (wap_poly_render(poly, WAP_FORMAT_PLAIN, &text) != WAP_STATUS_OK) return fail("render");
    printf("%s\n", text);
    int ok = strcmp(text, "x^3 + 4") == 0;
    wap_string_free(text);
    wap_poly_free(poly);

    if (wap_compute(spec, "1,3", WAP_ROUTE_DIRECT, &poly) != WAP_STATUS_PARSE_ERROR) ok = 0;
    if (wap_last_error_message() == NULL) ok = 0;

    wap_spec_free(spec);
    return ok ? 0 : 2;
}
