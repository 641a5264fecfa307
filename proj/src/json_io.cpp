#include "carlitz/json_io.hpp"

#include <stdexcept>

namespace carlitz {

Json poly_to_json(const Field& F, const Poly& a) {
    Json out = Json::array();
    for (fq c : a.c) out.push_back(F.digits(c));
    return out;
}

Poly poly_from_json(const Field& F, const Json& j) {
    if (!j.is_array()) throw std::invalid_argument("polynomial JSON must be an array");
    Poly r;
    for (const auto& entry : j) {
        std::vector<std::uint32_t> digits;
        if (entry.is_number()) {
            digits.push_back(entry.get<std::uint32_t>());
        } else {
            for (const auto& d : entry) digits.push_back(d.get<std::uint32_t>());
        }
        r.c.push_back(F.from_digits(digits));
    }
    poly_trim(r);
    return r;
}

Json rat_to_json(const Field& F, const Rat& a) {
    Json out;
    out["num"] = poly_to_json(F, a.num);
    out["den"] = poly_to_json(F, a.den);
    return out;
}

Rat rat_from_json(const Field& F, const Json& j) {
    if (j.is_array()) return rat_from_poly(poly_from_json(F, j));  // bare polynomial
    Poly num = poly_from_json(F, j.at("num"));
    Poly den = j.contains("den") ? poly_from_json(F, j.at("den")) : poly_one();
    return rat_make(F, num, den);
}

Json series_to_json(const Series<KRing>& f, const Poly* pi, int scale_e) {
    const Field& F = f.ring.field();
    Json out;
    out["q"] = F.q();
    out["p_char"] = F.p();
    out["fq_modulus"] = F.modulus();
    if (pi) out["pi"] = poly_to_json(F, *pi);
    out["prec"] = f.prec;
    out["scale_e"] = scale_e;
    Json coeffs = Json::array();
    for (const Rat& c : f.c) coeffs.push_back(rat_to_json(F, c));
    out["coeffs"] = coeffs;
    return out;
}

ParsedSeries series_from_json(const Json& j) {
    ParsedSeries out;
    std::uint32_t p = j.at("p_char").get<std::uint32_t>();
    std::uint32_t q = j.at("q").get<std::uint32_t>();
    std::uint32_t e = 0;
    std::uint32_t qq = 1;
    while (qq < q) {
        qq *= p;
        ++e;
    }
    if (qq != q) throw std::invalid_argument("q is not a power of p_char");
    if (e == 0) e = 1;
    if (j.contains("fq_modulus")) {
        out.field = std::make_shared<Field>(p, e, j.at("fq_modulus").get<std::vector<std::uint32_t>>());
    } else {
        out.field = std::make_shared<Field>(p, e);
    }
    if (j.contains("pi") && !j.at("pi").is_null())
        out.pi = poly_from_json(*out.field, j.at("pi"));
    out.scale_e = j.value("scale_e", 0);
    out.prec = j.at("prec").get<int>();
    for (const auto& c : j.at("coeffs")) out.coeffs.push_back(rat_from_json(*out.field, c));
    if (static_cast<int>(out.coeffs.size()) != out.prec)
        throw std::invalid_argument("series coefficient count does not match prec");
    return out;
}

Series<KRing> series_from_json_in(const Field& F, const Json& j) {
    ParsedSeries p = series_from_json(j);
    if (*p.field != F) throw std::invalid_argument("series field data does not match the run config");
    KRing ring(F, CoeffTag::rational);
    return Series<KRing>(ring, p.coeffs, p.prec);
}

std::string series_to_text(const Series<KRing>& f, const std::string& var) {
    const Field& F = f.ring.field();
    std::string s;
    for (int i = 0; i < f.prec; ++i) {
        if (f.c[i].is_zero()) continue;
        if (!s.empty()) s += " + ";
        std::string cs = rat_to_string(F, f.c[i]);
        bool parens = cs.find('+') != std::string::npos && cs.front() != '(';
        std::string coeff = parens ? "(" + cs + ")" : cs;
        if (i == 0) {
            s += coeff;
        } else {
            if (cs != "1") s += coeff + "*";
            s += (i == 1) ? var : var + "^" + std::to_string(i);
        }
    }
    if (s.empty()) s = "0";
    return s + " + O(" + var + "^" + std::to_string(f.prec) + ")";
}

}  // namespace carlitz
