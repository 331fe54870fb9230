#include "lozenge/json_io.hpp"

#include <limits>
#include <stdexcept>

namespace lozenge {

nlohmann::json tiling_to_json(const Tiling& t, const Basis& basis) {
    if (hermite_normal_form(basis) != t.hnf)
        throw std::invalid_argument("basis does not generate the tiling's lattice");
    return {{"basis", {{basis.a.x, basis.b.x}, {basis.a.y, basis.b.y}}},
            {"hnf", {{"a", t.hnf.a}, {"b", t.hnf.b}, {"c", t.hnf.c}}},
            {"cells", t.cells_string()}};
}

std::pair<Tiling, Basis> tiling_from_json(const nlohmann::json& j) {
    const auto& m = j.at("basis");
    Basis basis{{m.at(0).at(0).get<Int>(), m.at(1).at(0).get<Int>()},
                {m.at(0).at(1).get<Int>(), m.at(1).at(1).get<Int>()}};
    HnfForm h = hermite_normal_form(basis);
    const auto& hj = j.at("hnf");
    HnfForm stated{hj.at("a").get<Int>(), hj.at("b").get<Int>(), hj.at("c").get<Int>()};
    if (stated != h)
        throw std::invalid_argument("stated canonical form does not match the basis");
    Tiling t = tiling_from_cells_string(h, j.at("cells").get<std::string>());
    return {t, basis};
}

nlohmann::json poly_to_json(const Poly& p) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [m, c] : p.terms()) {
        if (c > std::numeric_limits<long long>::max() || c < std::numeric_limits<long long>::min())
            throw std::domain_error("coefficient exceeds the 64-bit JSON number range");
        arr.push_back({{"l", m.l}, {"d", m.d}, {"r", m.r},
                       {"coeff", static_cast<long long>(c)}});
    }
    return arr;
}

Poly poly_from_json(const nlohmann::json& j) {
    Poly p;
    for (const auto& term : j)
        p.add_term({term.at("l").get<int>(), term.at("d").get<int>(), term.at("r").get<int>()},
                   term.at("coeff").get<long long>());
    return p;
}

}  // namespace lozenge
