/* Consumer of the shared library through the C header only. */
#include "spinorlab/spinorlab.h"

#include <stdio.h>
#include <stdlib.h>
#include <string.h>

static int failures = 0;

#define EXPECT(cond)                                                        \
    do {                                                                    \
        if (!(cond)) {                                                      \
            fprintf(stderr, "%s:%d: expected %s\n", __FILE__, __LINE__, #cond); \
            ++failures;                                                     \
        }                                                                   \
    } while (0)

static int count_lines(const char* s) {
    int n = 0;
    for (; *s; ++s) n += *s == '\n';
    return n;
}

static void test_spectra(void) {
    spl_text* t = NULL;
    EXPECT(spl_spectra(3, 0, 2, "csv", &t) == SPL_OK);
    EXPECT(count_lines(spl_text_data(t)) == 7);
    EXPECT(strstr(spl_text_data(t), "3,0,0,dirac,+,3/2,2") != NULL);

    spl_text* json = NULL;
    EXPECT(spl_spectra_convert(spl_text_data(t), "csv", "json", &json) == SPL_OK);
    spl_text* back = NULL;
    EXPECT(spl_spectra_convert(spl_text_data(json), "json", "csv", &back) == SPL_OK);
    EXPECT(strcmp(spl_text_data(back), spl_text_data(t)) == 0);
    EXPECT(spl_text_size(back) == strlen(spl_text_data(back)));
    spl_text_free(t);
    spl_text_free(json);
    spl_text_free(back);

    t = NULL;
    EXPECT(spl_spectra(4, 1, 1, "csv", &t) == SPL_OK);
    EXPECT(count_lines(spl_text_data(t)) == 5);
    EXPECT(strstr(spl_text_data(t), "4,1,1,mu1,+,3/1,20") != NULL);
    EXPECT(strstr(spl_text_data(t), "4,1,1,mu2,+,3/2,16") != NULL);
    spl_text_free(t);

    t = NULL;
    EXPECT(spl_spectra(4, 2, 1, "csv", &t) == SPL_USAGE);
    EXPECT(t == NULL);
    EXPECT(strlen(spl_last_error()) > 0);
    EXPECT(spl_spectra(3, 0, 1, "xml", &t) == SPL_USAGE);
    EXPECT(spl_spectra_convert("garbage", "csv", "json", &t) == SPL_INPUT);
    EXPECT(spl_spectra(3, 0, 1, "csv", NULL) == SPL_USAGE);
}

static void test_solutions(void) {
    spl_solution* sol = NULL;
    size_t dim = 0;
    EXPECT(spl_solution_create(4, 1, "monogenic", &sol) == SPL_OK);
    EXPECT(spl_solution_dim(sol, &dim) == SPL_OK);
    EXPECT(dim == 12);
    spl_text* t = NULL;
    EXPECT(spl_solution_report(sol, 1, 0, "json", &t) == SPL_USAGE);
    EXPECT(spl_solution_report(sol, 0, 1, "json", &t) == SPL_OK);
    EXPECT(strstr(spl_text_data(t), "\"basis\"") != NULL);
    spl_text_free(t);
    spl_solution_free(sol);

    sol = NULL;
    EXPECT(spl_solution_create(3, 1, "rs", &sol) == SPL_OK);
    EXPECT(spl_solution_dim(sol, &dim) == SPL_OK);
    EXPECT(dim == 8);
    t = NULL;
    EXPECT(spl_solution_report(sol, 1, 0, "json", &t) == SPL_OK);
    EXPECT(strstr(spl_text_data(t), "\"direct_sum\": true") != NULL);
    spl_text_free(t);
    spl_solution_free(sol);

    sol = NULL;
    EXPECT(spl_solution_create(2, 1, "monogenic", &sol) == SPL_USAGE);
    EXPECT(sol == NULL);
    EXPECT(spl_solution_create(3, 1, "vector", &sol) == SPL_USAGE);
    spl_solution_free(NULL);
}

static void test_index(void) {
    spl_descriptor* d = NULL;
    EXPECT(spl_descriptor_parse("{\"dim\": 4, \"pontryagin_numbers\": {\"p1\": -48}}", &d) == SPL_OK);
    int dim = 0;
    EXPECT(spl_descriptor_dim(d, &dim) == SPL_OK);
    EXPECT(dim == 4);

    const char* ops[] = {"D_1/2", "D_3/2", "D_T"};
    const char* expected[] = {"2", "-38", "-40"};
    for (int i = 0; i < 3; ++i) {
        spl_text* v = NULL;
        EXPECT(spl_index_value(d, ops[i], 1, &v) == SPL_OK);
        EXPECT(v != NULL && strcmp(spl_text_data(v), expected[i]) == 0);
        spl_text_free(v);
    }
    spl_text* r = NULL;
    EXPECT(spl_index(d, "D_j", 1, &r) == SPL_OK);
    EXPECT(strstr(spl_text_data(r), "difference_form") != NULL);
    spl_text_free(r);
    r = NULL;
    EXPECT(spl_index(d, "D_9", 1, &r) == SPL_USAGE);
    spl_descriptor_free(d);

    spl_text* cls = NULL;
    EXPECT(spl_symbolic_class(8, "D_1/2", 1, &cls) == SPL_OK);
    EXPECT(strcmp(spl_text_data(cls), "7/5760*p1^2 - 1/1440*p2") == 0);
    spl_text_free(cls);

    d = NULL;
    EXPECT(spl_descriptor_parse("{\"dim\": 8, \"pontryagin_numbers\": {\"p1\": 1}}", &d) == SPL_INPUT);
    EXPECT(d == NULL);
    EXPECT(spl_descriptor_parse("not json", &d) == SPL_INPUT);

    spl_text* audit = NULL;
    EXPECT(spl_dim8_audit(&audit) == SPL_OK);
    EXPECT(strstr(spl_text_data(audit), "self_consistent") != NULL);
    spl_text_free(audit);
}

static void test_verify(void) {
    spl_text* names = NULL;
    EXPECT(spl_verify_checks(&names) == SPL_OK);
    EXPECT(strstr(spl_text_data(names), "theorem1") != NULL);
    spl_text_free(names);

    spl_text* a = NULL;
    spl_text* b = NULL;
    EXPECT(spl_verify("theorem1,weyl", 1, "json", &a) == SPL_OK);
    EXPECT(spl_verify("theorem1,weyl", 1, "json", &b) == SPL_OK);
    EXPECT(strcmp(spl_text_data(a), spl_text_data(b)) == 0);
    spl_text_free(a);
    spl_text_free(b);

    a = NULL;
    EXPECT(spl_verify("bogus", 1, "json", &a) == SPL_USAGE);
    EXPECT(a == NULL);
}

int main(void) {
    EXPECT(strcmp(spl_version(), "1.0.0") == 0);
    test_spectra();
    test_solutions();
    test_index();
    test_verify();
    if (failures) {
        fprintf(stderr, "%d C API expectation(s) failed\n", failures);
        return EXIT_FAILURE;
    }
    printf("C API: all expectations met\n");
    return EXIT_SUCCESS;
}
