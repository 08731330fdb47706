#include "s4embed/report_json.hpp"

#include <sstream>

namespace s4embed {
namespace {

nlohmann::ordered_json integer_json(const Integer& x) {
    if (fits_int64(x)) return to_int64(x);
    return x.get_str();
}

nlohmann::ordered_json vector_json(const IntVector& v) {
    auto a = nlohmann::ordered_json::array();
    for (const auto& x : v) a.push_back(integer_json(x));
    return a;
}

nlohmann::ordered_json matrix_json(const IntMatrix& M) {
    auto a = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < M.rows(); ++i) a.push_back(vector_json(M.row(i)));
    return a;
}

std::string join(const IntVector& v) {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i].get_str();
    os << "]";
    return os.str();
}

}  // namespace

nlohmann::ordered_json certificate_to_json(const Certificate& c) {
    nlohmann::ordered_json j = nlohmann::ordered_json::object();
    if (!c.matrices.empty()) {
        auto& m = j["matrices"] = nlohmann::ordered_json::object();
        for (const auto& [name, A] : c.matrices) m[name] = matrix_json(A);
    }
    if (!c.groups.empty()) {
        auto& g = j["groups"] = nlohmann::ordered_json::object();
        for (const auto& [name, f] : c.groups) g[name] = vector_json(f);
    }
    if (!c.values.empty()) {
        auto& v = j["values"] = nlohmann::ordered_json::object();
        for (const auto& [name, xs] : c.values) v[name] = xs;
    }
    return j;
}

nlohmann::ordered_json report_to_json(const ObstructionReport& r, bool certificates) {
    nlohmann::ordered_json j;
    j["input"] = r.input;
    j["canonical_form"] = r.canonical_form;
    auto& inv = j["invariants"];
    inv["b1"] = r.invariants.b1;
    inv["torsion_factors"] = vector_json(r.invariants.torsion_factors);
    inv["euler"] = r.invariants.euler ? nlohmann::ordered_json(r.invariants.euler->get_str()) : nlohmann::ordered_json();
    inv["spin_count"] = integer_json(r.invariants.spin_count);
    auto obs = nlohmann::ordered_json::array();
    for (const auto& o : r.obstructions) {
        nlohmann::ordered_json e;
        e["name"] = o.name;
        e["verdict"] = to_string(o.verdict);
        if (!o.notes.empty()) e["notes"] = o.notes;
        if (certificates && !o.certificate.empty()) e["certificate"] = certificate_to_json(o.certificate);
        obs.push_back(std::move(e));
    }
    j["obstructions"] = std::move(obs);
    j["status"] = to_string(r.status);
    j["reason"] = r.reason;
    if (r.conflict) j["conflict"] = true;
    return j;
}

std::string report_to_text(const ObstructionReport& r, bool certificates) {
    std::ostringstream os;
    os << "input:          " << r.input << "\n";
    os << "canonical form: " << r.canonical_form << "\n";
    os << "invariants:     b1=" << r.invariants.b1 << " torsion=" << join(r.invariants.torsion_factors);
    if (r.invariants.euler) os << " e=" << r.invariants.euler->get_str();
    os << " spin_structures=" << r.invariants.spin_count.get_str() << "\n";
    std::size_t width = 0;
    for (const auto& o : r.obstructions) width = std::max(width, o.name.size());
    for (const auto& o : r.obstructions) {
        os << "  " << o.name << std::string(width - o.name.size() + 2, ' ') << to_string(o.verdict);
        if (!o.notes.empty()) os << "  (" << o.notes << ")";
        os << "\n";
        if (!certificates) continue;
        for (const auto& [name, A] : o.certificate.matrices) os << "      " << name << " = " << A.to_string() << "\n";
        for (const auto& [name, g] : o.certificate.groups) os << "      " << name << " = " << join(g) << "\n";
        for (const auto& [name, v] : o.certificate.values) {
            IntVector iv;
            for (auto x : v) iv.push_back(static_cast<long>(x));
            os << "      " << name << " = " << join(iv) << "\n";
        }
    }
    os << "status: " << to_string(r.status) << " (" << r.reason << ")" << (r.conflict ? " [conflict]" : "") << "\n";
    return os.str();
}

}  // namespace s4embed
