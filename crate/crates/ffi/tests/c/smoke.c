#include <stdio.h>
#include <string.h>

#include "quadpow.h"

static int expect_text(QpValue *value, const char *want) {
    char *text = NULL;
    if (qp_value_to_string(value, &text) != QP_STATUS_OK) {
        return 1;
    }
    int bad = strcmp(text, want) != 0;
    if (bad) {
        fprintf(stderr, "got %s, want %s\n", text, want);
    }
    qp_string_free(text);
    qp_value_free(value);
    return bad;
}

int main(void) {
    QpValue *v = NULL;
    int failures = 0;

    failures += qp_pm("1", "-1", 100, QP_ENGINE_DOUBLING, 0, &v) != QP_STATUS_OK;
    failures += expect_text(v, "354224848179261915075");

    failures += qp_matpow("1,1;1,0", 5, QP_ENGINE_ITERATIVE, 0, &v) != QP_STATUS_OK;
    failures += expect_text(v, "8,5;5,3");

    failures += qp_fib(12, QP_ENGINE_BINOMIAL, 100, &v) != QP_STATUS_OK;
    failures += expect_text(v, "44 mod 100");

    failures += qp_symbolic(3, &v) != QP_STATUS_OK;
    failures += expect_text(v, "T^2 - D");

    if (qp_matpow("1,2;3", 2, QP_ENGINE_DOUBLING, 0, &v) != QP_STATUS_PARSE ||
        qp_last_error_message() == NULL) {
        failures++;
    }

    printf("%s\n", failures == 0 ? "ok" : "failed");
    return failures;
}
