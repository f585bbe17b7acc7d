#include <atomic>
#include <cstring>
#include <string>

#include "doctest.h"
#include "json.hpp"
#include "qcldpc/qcldpc.h"

namespace {

const char kMono34[] =
    "r 31\n"
    "1 2 4 8\n"
    "5 10 20 9\n"
    "25 19 7 14\n";

const char kBinom34[] =
    "r 46\n"
    "1,2 - 4 8\n"
    "5 9 10,20 -\n"
    "- 19,25 - 7,14\n";

struct MatrixGuard {
    qcldpc_matrix* m = nullptr;
    ~MatrixGuard() { qcldpc_matrix_free(m); }
};

}  // namespace

TEST_CASE("c api parse and accessors") {
    MatrixGuard g;
    REQUIRE(qcldpc_parse(kMono34, sizeof kMono34 - 1, &g.m) == QCLDPC_OK);
    CHECK(qcldpc_rows(g.m) == 3);
    CHECK(qcldpc_cols(g.m) == 4);
    CHECK(qcldpc_modulus(g.m) == 31);

    char* text = nullptr;
    REQUIRE(qcldpc_serialize(g.m, &text) == QCLDPC_OK);
    CHECK(std::string(text) == kMono34);
    qcldpc_string_free(text);
}

TEST_CASE("c api parse failure reports line and leaves no object") {
    qcldpc_matrix* m = reinterpret_cast<qcldpc_matrix*>(0x1);
    const char bad[] = "r 15\n0 oops\n";
    CHECK(qcldpc_parse(bad, sizeof bad - 1, &m) == QCLDPC_ERR_INPUT);
    CHECK(m == nullptr);
    CHECK(std::strstr(qcldpc_last_error(), "2") != nullptr);

    CHECK(qcldpc_parse(nullptr, 0, &m) == QCLDPC_ERR_NULLARG);
    CHECK(qcldpc_parse(bad, sizeof bad - 1, nullptr) == QCLDPC_ERR_NULLARG);
    CHECK(qcldpc_read_file("no_such_file_anywhere.qcpm", &m) == QCLDPC_ERR_INPUT);
}

TEST_CASE("c api analyze json") {
    MatrixGuard g;
    REQUIRE(qcldpc_parse(kMono34, sizeof kMono34 - 1, &g.m) == QCLDPC_OK);
    char* out = nullptr;
    REQUIRE(qcldpc_analyze_json(g.m, &out) == QCLDPC_OK);
    auto j = nlohmann::json::parse(out);
    CHECK(j["n"] == 124);
    CHECK(j["k"] == 33);
    CHECK(j["bounds"]["poly"] == 24);
    CHECK(j["girth"] == 8);
    qcldpc_string_free(out);

    CHECK(qcldpc_analyze_json(nullptr, &out) == QCLDPC_ERR_NULLARG);
}

TEST_CASE("c api cycles json") {
    MatrixGuard g;
    REQUIRE(qcldpc_parse(kBinom34, sizeof kBinom34 - 1, &g.m) == QCLDPC_OK);
    char* out = nullptr;
    REQUIRE(qcldpc_cycles_json(g.m, &out) == QCLDPC_OK);
    auto j = nlohmann::json::parse(out);
    CHECK(j["girth"] == 8);
    CHECK(j["type2"]["pass"] == true);
    qcldpc_string_free(out);
}

TEST_CASE("c api expansion text") {
    MatrixGuard g;
    const char one[] = "r 4\n1\n";
    REQUIRE(qcldpc_parse(one, sizeof one - 1, &g.m) == QCLDPC_OK);
    char* out = nullptr;
    REQUIRE(qcldpc_expand_text(g.m, &out) == QCLDPC_OK);
    CHECK(std::string(out) == "0001\n1000\n0100\n0010\n");
    qcldpc_string_free(out);
}

TEST_CASE("c api dmin") {
    MatrixGuard g;
    const char small[] =
        "r 21\n"
        "1 2 4 8\n"
        "5 10 20 9\n"
        "4 19 7 14\n";
    REQUIRE(qcldpc_parse(small, sizeof small - 1, &g.m) == QCLDPC_OK);

    qcldpc_dmin_result res;
    REQUIRE(qcldpc_dmin(g.m, 0, 2, nullptr, nullptr, &res) == QCLDPC_OK);
    CHECK(res.status == 0);
    CHECK(res.dmin == 10);
    CHECK(res.dmin_upper == 10);
    CHECK(res.n == 84);

    // low cap degrades to status 2 with an upper bound from the construction
    REQUIRE(qcldpc_dmin(g.m, 4, 1, nullptr, nullptr, &res) == QCLDPC_OK);
    CHECK(res.status == 2);
    CHECK(res.dmin_upper <= 24);

    // cancelling from the progress callback degrades to status 1
    auto cancel = [](uint64_t, uint64_t, void* user) -> int {
        ++*static_cast<std::atomic<int>*>(user);
        return 0;
    };
    std::atomic<int> calls{0};
    REQUIRE(qcldpc_dmin(g.m, 0, 2, cancel, &calls, &res) == QCLDPC_OK);
    CHECK(res.status == 1);
    CHECK(calls.load() >= 1);

    CHECK(qcldpc_dmin(g.m, 0, 1, nullptr, nullptr, nullptr) == QCLDPC_ERR_NULLARG);
}

TEST_CASE("c api cover") {
    MatrixGuard g;
    REQUIRE(qcldpc_parse(kBinom34, sizeof kBinom34 - 1, &g.m) == QCLDPC_OK);
    char* qcpm = nullptr;
    char* json = nullptr;
    REQUIRE(qcldpc_cover_json(g.m, 0, nullptr, 32, &qcpm, &json) == QCLDPC_OK);
    CHECK(std::string(qcpm).rfind("r 46\n", 0) == 0);
    auto j = nlohmann::json::parse(json);
    CHECK(j["n"] == 368);
    CHECK(j["k"] == 93);
    CHECK(j["projection_ok"] == true);
    CHECK(j["sandwich"][0] == 32);
    CHECK(j["sandwich"][1] == 64);
    qcldpc_string_free(qcpm);
    qcldpc_string_free(json);

    // manual split round trip through text
    MatrixGuard t;
    const char trinom[] =
        "r 31\n"
        "2,4,8 - - 1\n"
        "- 9,10,20 - 5\n"
        "- - 7,14,19 25\n";
    REQUIRE(qcldpc_parse(trinom, sizeof trinom - 1, &t.m) == QCLDPC_OK);
    CHECK(qcldpc_cover_json(t.m, 0, nullptr, -1, &qcpm, nullptr) ==
          QCLDPC_ERR_INPUT);
    const char part1[] =
        "r 31\n"
        "2,4 - - 1\n"
        "- 9,10 - 5\n"
        "- - 7,14 25\n";
    REQUIRE(qcldpc_cover_json(t.m, 1, part1, -1, nullptr, &json) == QCLDPC_OK);
    auto jt = nlohmann::json::parse(json);
    CHECK(jt["layout"] == "interleaved");
    CHECK(jt.count("sandwich") == 0);
    qcldpc_string_free(json);
}

TEST_CASE("c api weight class enumeration") {
    char* out = nullptr;
    REQUIRE(qcldpc_enum_wm_json(3, 4, 3, 4, 2, &out) == QCLDPC_OK);
    auto j = nlohmann::json::parse(out);
    CHECK(j["count"] == 5);
    CHECK(j["classes"][0]["bound"] == 32);
    qcldpc_string_free(out);

    CHECK(qcldpc_enum_wm_json(7, 4, 4, 7, 2, &out) == QCLDPC_ERR_LIMIT);
    CHECK(qcldpc_last_error()[0] != '\0');
}
