#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <cstring>
#include <string>

#include "qslkit.h"

namespace {

struct State {
    qslk_state* p = nullptr;
    ~State() { qslk_state_free(p); }
};

struct Str {
    char* p = nullptr;
    ~Str() { qslk_string_free(p); }
};

}  // namespace

TEST_CASE("state lifecycle and json round trip") {
    State s;
    REQUIRE(qslk_state_werner(0.5, &s.p) == QSLK_OK);
    CHECK(qslk_state_dim(s.p) == 2);

    Str json;
    REQUIRE(qslk_state_to_json(s.p, &json.p) == QSLK_OK);
    State back;
    REQUIRE(qslk_state_from_json(json.p, &back.p) == QSLK_OK);

    double v = 0.0;
    REQUIRE(qslk_fidelity("newf", s.p, back.p, &v) == QSLK_OK);
    CHECK(std::abs(v - 1.0) < 1e-12);
}

TEST_CASE("status codes separate the failure classes") {
    State s;
    CHECK(qslk_state_from_json("garbage", &s.p) == QSLK_ERR_USAGE);
    CHECK(std::strlen(qslk_last_error()) > 0);

    CHECK(qslk_state_from_json("{\"dim\":2,\"entries\":[[1,0],[0,0],[0,0],[1,0]]}", &s.p) ==
          QSLK_ERR_INVALID_STATE);

    REQUIRE(qslk_state_werner(0.5, &s.p) == QSLK_OK);
    double v = 0.0;
    CHECK(qslk_fidelity("uhlmann", s.p, s.p, &v) == QSLK_ERR_USAGE);
    CHECK(qslk_fidelity(nullptr, s.p, s.p, &v) == QSLK_ERR_USAGE);

    const qslk_reservoir res{2.0, 1.0, 1.0};
    Str out;
    CHECK(qslk_bound(s.p, &res, -1.0, nullptr, &out.p) == QSLK_ERR_USAGE);

    // mixed state through the pure-only bound
    CHECK(qslk_mt_pure_bound(s.p, &res, 1.0, nullptr, &v) == QSLK_ERR_USAGE);

    // success clears the error message
    CHECK(qslk_bound(s.p, &res, 1.0, nullptr, &out.p) == QSLK_OK);
    CHECK(std::strlen(qslk_last_error()) == 0);
}

TEST_CASE("bound json matches the frozen reference values") {
    State s;
    REQUIRE(qslk_state_werner(0.5, &s.p) == QSLK_OK);
    const qslk_reservoir res{2.0, 1.0, 1.0};
    Str out;
    REQUIRE(qslk_bound(s.p, &res, 1.0, nullptr, &out.p) == QSLK_OK);
    const std::string json(out.p);
    CHECK(json.find("\"tau_qsl\":0.2206333") != std::string::npos);
    CHECK(json.find("\"converged\":true") != std::string::npos);
}

TEST_CASE("verify returns reports and flags unknown properties") {
    Str out;
    CHECK(qslk_verify("monotonicity-fixed", nullptr, 1, nullptr, 0, &out.p) == QSLK_OK);
    CHECK(std::string(out.p).find("monotonicity-fixed") != std::string::npos);

    Str out2;
    CHECK(qslk_verify("no-such-property", "newf", 10, nullptr, 0, &out2.p) == QSLK_ERR_USAGE);
    CHECK(qslk_verify("jozsa", "newf", 10, "1,2", 0, &out2.p) == QSLK_ERR_USAGE);
}

TEST_CASE("sweep csv through the c api") {
    const char* cfg =
        "{\"gamma0_grid\": [0.5, 2.0], \"r_values\": [1.0],"
        " \"quadrature\": {\"n_points\": 201}}";
    Str csv;
    REQUIRE(qslk_sweep_csv(cfg, 2, &csv.p) == QSLK_OK);
    const std::string text(csv.p);
    CHECK(text.rfind("gamma0,r,", 0) == 0);
    CHECK(std::count(text.begin(), text.end(), '\n') == 3);
}

TEST_CASE("gmodel csv through the c api") {
    const qslk_reservoir res{5.0, 1.0, 1.0};
    Str csv;
    REQUIRE(qslk_gmodel_csv(&res, 2.0, 200, 1, &csv.p) == QSLK_OK);
    CHECK(std::string(csv.p).find("# max_deviation = ") != std::string::npos);

    CHECK(qslk_gmodel_csv(&res, 2.0, 10, 0, &csv.p) == QSLK_ERR_USAGE);
}

TEST_CASE("version string is set") {
    CHECK(std::strlen(qslk_version()) > 0);
}
