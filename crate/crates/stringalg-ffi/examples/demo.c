/* Demonstration of the C interface: parse a presentation, solve its
 * hammock order types, and query the exceptional-band report.
 *
 * Build (from the workspace root, after `cargo build -p stringalg-ffi`):
 *   cc crates/stringalg-ffi/examples/demo.c \
 *      -Icrates/stringalg-ffi/include \
 *      target/debug/libstringalg_ffi.a -lpthread -ldl -lm -o demo
 */
#include "stringalg.h"

#include <assert.h>
#include <stdio.h>
#include <string.h>

static const char *TWO_LOOPS =
    "{\"vertices\":[\"v\"],"
    "\"arrows\":[{\"name\":\"a\",\"source\":\"v\",\"target\":\"v\"},"
    "{\"name\":\"b\",\"source\":\"v\",\"target\":\"v\"}],"
    "\"relations\":[[\"a\",\"a\"],[\"b\",\"b\",\"b\"],[\"a\",\"b\"],[\"b\",\"a\"]]}";

int main(void) {
    SaPresentation *p = NULL;
    if (sa_presentation_parse(TWO_LOOPS, &p) != SA_OK) {
        fprintf(stderr, "parse: %s\n", sa_last_error_message());
        return 1;
    }

    char *text = NULL;
    if (sa_order_type_text(p, "v", 1, &text) != SA_OK) {
        fprintf(stderr, "order-type: %s\n", sa_last_error_message());
        sa_presentation_free(p);
        return 1;
    }
    printf("%s", text);
    assert(strstr(text, "w + sh(w* + w) + w*") != NULL);
    sa_string_free(text);

    int domestic = -1;
    assert(sa_is_domestic(p, &domestic) == SA_OK);
    printf("domestic: %s\n", domestic ? "true" : "false");

    size_t e = 0;
    assert(sa_exceptional_report_json(p, &e, NULL) == SA_OK);
    printf("e = %zu\n", e);

    sa_presentation_free(p);
    return 0;
}
