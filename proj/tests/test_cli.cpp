#include "s4embed/classifier.hpp"
#include "s4embed/manifold_expr.hpp"
#include "s4embed/report_json.hpp"

#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <string>

using namespace s4embed;

namespace {

int run_cli(const std::string& args) {
    const std::string cmd = std::string(S4EMBED_CLI_PATH) + " " + args + " >/dev/null 2>&1";
    const int rc = std::system(cmd.c_str());
    return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
}

}  // namespace

TEST_CASE("parsing") {
    CHECK(parse_manifold("lens(3,1)+lens(3,2)").value == Manifold{LensSum{{{3, 1}, {3, 2}}}});
    CHECK(parse_manifold("seifert(S2; 0; (4,1),(4,1),(12,-7))").value ==
          Manifold{SeifertManifold{{}, 0, {{4, 1}, {4, 1}, {12, -7}}}});
    CHECK(parse_manifold(" pretzel( 2 , -2,3,-3 ) ").value == Manifold{PretzelCover{{2, -2, 3, -3}}});
    CHECK(parse_manifold("S3").value == Manifold{LensSum{}});
    CHECK(parse_manifold("seifert(N(2); -1; )").value ==
          Manifold{SeifertManifold{{BaseKind::NonOrientable, 2}, -1, {}}});
    CHECK(parse_manifold("seifert(O(1); 2; (3,1))").value ==
          Manifold{SeifertManifold{{BaseKind::Orientable, 1}, 2, {{3, 1}}}});
}

TEST_CASE("parse errors carry position and token") {
    const auto error_at = [](const std::string& text) -> std::pair<std::size_t, std::string> {
        try {
            parse_manifold(text);
        } catch (const ParseError& e) {
            return {e.position, e.token};
        }
        return {std::string::npos, ""};
    };
    CHECK(error_at("lens(3,x)") == std::pair<std::size_t, std::string>{7, "x"});
    CHECK(error_at("pretzel(2,0,3)") == std::pair<std::size_t, std::string>{10, "0"});
    CHECK(error_at("lens(4,2)").first != std::string::npos);
    CHECK(error_at("lens(3,4)").first != std::string::npos);
    CHECK(error_at("lens(3,1)+pretzel(3,3,3)").first != std::string::npos);
    CHECK(error_at("pretzel(2,3)").first != std::string::npos);
    CHECK(error_at("lens(3,1").first != std::string::npos);
    CHECK(error_at("").first != std::string::npos);
}

TEST_CASE("print and parse round trip") {
    for (const char* text : {"lens(3,1)+lens(3,2)", "S3", "lens(7,3)", "seifert(S2; 0; (4,1),(4,1),(12,-7))",
                             "seifert(N(1); 0; (3,1),(2,1))", "seifert(O(2); -3; )", "pretzel(3,-5,-8)",
                             "pretzel(1,-4,-4,-4)"}) {
        const ManifoldExpr e = parse_manifold(text);
        const ManifoldExpr again = parse_manifold(print_manifold(e));
        CHECK(again == e);
        CHECK(print_manifold(again) == print_manifold(e));
    }
}

TEST_CASE("JSON reports are byte stable") {
    const Manifold m = parse_manifold("pretzel(3,-3,3)").value;
    const std::string a = report_to_json(full_report(m), true).dump(2);
    const std::string b = report_to_json(full_report(m), true).dump(2);
    CHECK(a == b);
    const auto j = nlohmann::json::parse(a);
    CHECK(j["status"] == "EMBEDS");
    CHECK(j["invariants"]["torsion_factors"] == nlohmann::json::array({3, 3}));
    for (const char* key : {"input", "canonical_form", "invariants", "obstructions", "status", "reason"})
        CHECK(j.contains(key));
}

TEST_CASE("exit codes follow the status") {
    CHECK(run_cli("--manifold 'lens(2,1)+lens(2,1)' --json") == 1);
    CHECK(run_cli("--manifold 'pretzel(3,-3,3)'") == 0);
    CHECK(run_cli("'pretzel(3,-5,-8)'") == 2);
    CHECK(run_cli("--manifold 'lens(2,'") == 64);
    CHECK(run_cli("") == 64);
    CHECK(run_cli("--no-such-flag") == 64);
}
