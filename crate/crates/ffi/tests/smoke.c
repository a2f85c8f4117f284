#include <stdio.h>
#include <string.h>

#include "legendre_overlap.h"

int main(void) {
    char *value = NULL;
    enum LoVanishingReason reason;
    if (lo_overlap(10, 3, 10, 3, &value, &reason) != LO_STATUS_OK) return 1;
    if (reason != LO_VANISHING_REASON_NONE) return 2;

    struct LoGram *gram = NULL;
    if (lo_gram_new(1, 1, 8, 8, LO_GRAM_METHOD_CLOSED_FORM, &gram) != LO_STATUS_OK) return 3;
    uint32_t rows = 0, cols = 0;
    lo_gram_dims(gram, &rows, &cols);

    char *entry = NULL;
    enum LoStatus st = lo_gram_entry(gram, 9, 0, &entry);
    if (st != LO_STATUS_OUT_OF_RANGE || entry != NULL) return 4;
    if (lo_gram_entry(NULL, 0, 0, &entry) != LO_STATUS_NULL_POINTER) return 5;

    printf("%s %ux%u %s\n", value, rows, cols, lo_status_message(LO_STATUS_OK));
    lo_string_free(value);
    lo_gram_free(gram);
    return 0;
}
