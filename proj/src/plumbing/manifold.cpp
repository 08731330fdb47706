#include "s4embed/manifold.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace s4embed {

void validate(const LensSum& L) {
    for (const auto& l : L.summands)
        if (!(l.p > l.q && l.q > 0) || std::gcd(l.p, l.q) != 1)
            throw std::invalid_argument("lens space L(" + std::to_string(l.p) + "," + std::to_string(l.q) +
                                        ") needs p > q > 0 coprime");
}

void validate(const SeifertManifold& Y) {
    if (Y.base.kind == BaseKind::Orientable && Y.base.genus < 0)
        throw std::invalid_argument("orientable base genus must be >= 0");
    if (Y.base.kind == BaseKind::NonOrientable && Y.base.genus < 1)
        throw std::invalid_argument("non-orientable base genus must be >= 1");
    for (const auto& f : Y.fibres)
        if (f.a < 2 || std::gcd(f.a, f.b) != 1)
            throw std::invalid_argument("Seifert invariant (" + std::to_string(f.a) + "," + std::to_string(f.b) +
                                        ") needs a >= 2 and gcd(a,b) = 1");
}

void validate(const PretzelCover& P) {
    if (P.strands.size() < 3 || P.strands.size() > 4)
        throw std::invalid_argument("pretzel cover needs 3 or 4 strands");
    for (auto a : P.strands)
        if (a == 0) throw std::invalid_argument("pretzel strand must be nonzero");
}

std::string describe(const LensSum& L) {
    if (L.summands.empty()) return "S3";
    std::ostringstream os;
    for (std::size_t i = 0; i < L.summands.size(); ++i) {
        if (i) os << " + ";
        os << "lens(" << L.summands[i].p << "," << L.summands[i].q << ")";
    }
    return os.str();
}

std::string describe(const SeifertManifold& Y) {
    std::ostringstream os;
    os << "seifert(";
    if (Y.base.kind == BaseKind::NonOrientable)
        os << "N(" << Y.base.genus << ")";
    else if (Y.base.genus == 0)
        os << "S2";
    else
        os << "O(" << Y.base.genus << ")";
    os << "; " << Y.r << ";";
    for (std::size_t i = 0; i < Y.fibres.size(); ++i)
        os << (i ? ", " : " ") << "(" << Y.fibres[i].a << "," << Y.fibres[i].b << ")";
    os << ")";
    return os.str();
}

std::string describe(const PretzelCover& P) {
    std::ostringstream os;
    os << "pretzel(";
    for (std::size_t i = 0; i < P.strands.size(); ++i) os << (i ? "," : "") << P.strands[i];
    os << ")";
    return os.str();
}

std::string describe(const Manifold& m) {
    return std::visit([](const auto& x) { return describe(x); }, m);
}

}  // namespace s4embed
