#include "json_io.hpp"

#include "flagcalc/errors.hpp"

#include <fstream>
#include <sstream>

namespace flagcalc::io {

namespace {

mpq_class rational_from_json(const json& j) {
    if (j.is_string()) return GaussianRational::parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return GaussianRational::parse_rational(std::to_string(j.get<long long>()));
    throw PreconditionError("expected a rational as \"num/den\" or an integer, got " + j.dump());
}

std::array<unsigned, 3> exponents_from_json(const json& j) {
    if (!j.is_array() || j.size() != 3) throw PreconditionError("expected three exponents, got " + j.dump());
    std::array<unsigned, 3> out{};
    for (std::size_t i = 0; i < 3; ++i) {
        if (!j[i].is_number_integer() || j[i].get<long long>() < 0) {
            throw PreconditionError("exponent must be a nonnegative integer, got " + j[i].dump());
        }
        out[i] = j[i].get<unsigned>();
    }
    return out;
}

const json& member(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw PreconditionError(std::string("missing field \"") + key + "\"");
    return j.at(key);
}

}  // namespace

json to_json(const GaussianRational& z) {
    return json{{"re", rational_to_string(z.re())}, {"im", rational_to_string(z.im())}};
}

json to_json(const ProjPoint& x) {
    return json::array({to_json(x[0]), to_json(x[1]), to_json(x[2])});
}

json to_json(const Conic& c) {
    return json{{"q", to_json(c.q())}, {"m", to_json(c.m())}};
}

json to_json(const BinaryForm& f) {
    json coeffs = json::array();
    for (const auto& c : f.coeffs()) coeffs.push_back(to_json(c));
    return json{{"degree", f.degree()}, {"coeffs", std::move(coeffs)}};
}

json to_json(const BiForm& f) {
    json terms = json::array();
    for (const auto& [m, c] : f.terms()) {
        terms.push_back(json{{"p", m.p}, {"l", m.l}, {"c", to_json(c)}});
    }
    return json{{"bidegree", {f.a(), f.b()}}, {"terms", std::move(terms)}};
}

json to_json(const FpConic& c) {
    return json{{"q", c.q}, {"m", c.m}};
}

GaussianRational gaussian_from_json(const json& j) {
    if (j.is_object()) {
        const mpq_class re = j.contains("re") ? rational_from_json(j.at("re")) : mpq_class(0);
        const mpq_class im = j.contains("im") ? rational_from_json(j.at("im")) : mpq_class(0);
        return {re, im};
    }
    return GaussianRational(rational_from_json(j));
}

ProjPoint point_from_json(const json& j) {
    if (!j.is_array() || j.size() != 3) throw PreconditionError("expected a point with three coordinates, got " + j.dump());
    return ProjPoint(gaussian_from_json(j[0]), gaussian_from_json(j[1]), gaussian_from_json(j[2]));
}

Conic conic_from_json(const json& j) {
    return Conic(point_from_json(member(j, "q")), point_from_json(member(j, "m")));
}

BinaryForm binary_form_from_json(const json& j) {
    const json& coeffs = member(j, "coeffs");
    if (!coeffs.is_array() || coeffs.empty()) throw PreconditionError("binary form needs a nonempty coeffs array");
    std::vector<GaussianRational> c;
    for (const auto& x : coeffs) c.push_back(gaussian_from_json(x));
    if (j.contains("degree") && j.at("degree").get<long long>() + 1 != static_cast<long long>(c.size())) {
        throw PreconditionError("binary form degree does not match its coefficient count");
    }
    return BinaryForm(std::move(c));
}

BiForm biform_from_json(const json& j) {
    const json& bidegree = member(j, "bidegree");
    if (!bidegree.is_array() || bidegree.size() != 2) throw PreconditionError("bidegree must be [a, b]");
    const long long a = bidegree[0].get<long long>();
    const long long b = bidegree[1].get<long long>();
    if (a < 0 || b < 0) throw PreconditionError("bidegree entries must be nonnegative");
    BiForm f(static_cast<unsigned>(a), static_cast<unsigned>(b));
    for (const auto& t : member(j, "terms")) {
        f.add_term(BiMonomial{exponents_from_json(member(t, "p")), exponents_from_json(member(t, "l"))},
                   gaussian_from_json(member(t, "c")));
    }
    return f;
}

BinaryFormTriple forms_from_json(const json& j) {
    const json& arr = j.is_object() ? member(j, "forms") : j;
    if (!arr.is_array() || arr.size() != 3) throw PreconditionError("expected exactly three binary forms");
    return {binary_form_from_json(arr[0]), binary_form_from_json(arr[1]), binary_form_from_json(arr[2])};
}

std::vector<Conic> conics_from_json(const json& j) {
    const json& arr = j.is_object() ? member(j, "conics") : j;
    if (!arr.is_array()) throw PreconditionError("expected an array of conics");
    std::vector<Conic> out;
    for (const auto& c : arr) out.push_back(conic_from_json(c));
    return out;
}

BiForm surface_from_json(const json& j) {
    if (j.is_object() && j.contains("terms")) return biform_from_json(j);
    if (j.is_object() && j.contains("surface")) return biform_from_json(j.at("surface"));
    if (j.is_object() && j.contains("member")) return biform_from_json(j.at("member"));
    throw PreconditionError("no surface found (expected a BiForm or a \"surface\"/\"member\" field)");
}

Conic single_conic_from_json(const json& j) {
    if (j.is_object() && j.contains("conic")) return conic_from_json(j.at("conic"));
    return conic_from_json(j);
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw PreconditionError("cannot open " + path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    try {
        return json::parse(buffer.str());
    } catch (const json::parse_error& e) {
        throw PreconditionError("invalid JSON in " + path + ": " + e.what());
    }
}

}  // namespace flagcalc::io
