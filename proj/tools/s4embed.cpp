#include "s4embed/classifier.hpp"
#include "s4embed/manifold_expr.hpp"
#include "s4embed/report_json.hpp"

#include <CLI11.hpp>

#include <iostream>

int main(int argc, char** argv) {
    CLI::App app{"Decide whether a 3-manifold embeds smoothly in S4"};
    std::string positional, flag;
    bool json = false, certificates = false, quiet = false;
    std::uint64_t budget = 10'000'000;
    unsigned threads = 1;
    std::uint64_t seed = 0;
    std::vector<std::string> only;
    app.add_option("expr", positional, "manifold expression");
    app.add_option("-m,--manifold", flag, "manifold expression, e.g. \"lens(3,1)+lens(3,2)\"");
    app.add_flag("--json", json, "emit a JSON report");
    app.add_flag("--certificates", certificates, "include certificates");
    app.add_option("--budget", budget, "search node budget per obstruction")->capture_default_str();
    app.add_option("--obstruction", only, "run only the named obstructions (repeatable)");
    app.add_option("--threads", threads, "worker threads for lattice search")->capture_default_str();
    app.add_flag("-q,--quiet", quiet, "print only the status");
    app.add_option("--seed", seed, "accepted and ignored; results are deterministic");
    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 64;
    }
    if (positional.empty() == flag.empty()) {
        std::cerr << "error: give the manifold either positionally or with --manifold\n";
        return 64;
    }
    const std::string& text = flag.empty() ? positional : flag;

    s4embed::ManifoldExpr expr;
    try {
        expr = s4embed::parse_manifold(text);
        std::visit([](const auto& x) { s4embed::validate(x); }, expr.value);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 64;
    }

    s4embed::ObstructionReport rep;
    try {
        rep = s4embed::full_report(expr.value, {budget, threads, only});
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 70;
    }
    if (json)
        std::cout << s4embed::report_to_json(rep, certificates).dump(2) << "\n";
    else if (quiet)
        std::cout << s4embed::to_string(rep.status) << "\n";
    else
        std::cout << s4embed::report_to_text(rep, certificates);
    if (rep.conflict) {
        std::cerr << "internal error: catalog entry " << s4embed::catalog_lookup(expr.value)->name
                  << " conflicts with obstruction " << rep.reason << "\n";
        return 70;
    }
    switch (rep.status) {
        case s4embed::Status::Embeds: return 0;
        case s4embed::Status::Obstructed: return 1;
        case s4embed::Status::Unknown: return 2;
    }
    return 70;
}
