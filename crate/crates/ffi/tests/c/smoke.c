#include <stdio.h>
#include <string.h>

#include "qtmac.h"

int main(void) {
    QtmacExpansion *h = NULL;
    char *json = NULL;
    if (qtmac_hmn("2", 1, 2, NULL, &h) != QTMAC_STATUS_OK) {
        fprintf(stderr, "%s\n", qtmac_last_error_message());
        return 1;
    }
    if (qtmac_expansion_to_json(h, &json) != QTMAC_STATUS_OK) {
        return 1;
    }
    puts(json);
    qtmac_string_free(json);
    qtmac_expansion_free(h);

    if (qtmac_hmu("2,1", "3", &h) != QTMAC_STATUS_BAD_REARRANGEMENT) {
        return 1;
    }
    puts(qtmac_last_error_message());
    return 0;
}
