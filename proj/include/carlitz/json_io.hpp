#ifndef CARLITZ_JSON_IO_HPP
#define CARLITZ_JSON_IO_HPP

#include <json.hpp>
#include <memory>
#include <optional>

#include "carlitz/series.hpp"

namespace carlitz {

using Json = nlohmann::ordered_json;

// Polynomials encode as coefficient lists low-to-high, each F_q element as
// its F_p digit vector: q = 3, T^2 + 1  <->  [[1],[0],[1]].
Json poly_to_json(const Field& F, const Poly& a);
Poly poly_from_json(const Field& F, const Json& j);

Json rat_to_json(const Field& F, const Rat& a);
Rat rat_from_json(const Field& F, const Json& j);

// { "q", "p_char", "fq_modulus", "pi", "prec", "scale_e", "coeffs" }
Json series_to_json(const Series<KRing>& f, const Poly* pi = nullptr, int scale_e = 0);

struct ParsedSeries {
    std::shared_ptr<Field> field;
    std::optional<Poly> pi;
    int scale_e = 0;
    int prec = 0;
    std::vector<Rat> coeffs;
};

ParsedSeries series_from_json(const Json& j);

// Validates that the payload's field data matches F and returns the series.
Series<KRing> series_from_json_in(const Field& F, const Json& j);

std::string series_to_text(const Series<KRing>& f, const std::string& var = "u");

}  // namespace carlitz

#endif
