#include "hankel/json_io.hpp"

#include "hankel/error.hpp"

#include <cstdint>
#include <cstdio>
#include <utility>
#include <vector>

namespace hankel {

namespace {

[[noreturn]] void malformed(const std::string& what) {
    throw Error(ErrorCode::MalformedInput, what);
}

const json& expect_object(const json& j, const char* what) {
    if (!j.is_object()) malformed(std::string(what) + " must be a JSON object");
    return j;
}

const json& expect_array(const json& j, const char* what) {
    if (!j.is_array()) malformed(std::string(what) + " must be a JSON array");
    return j;
}

const json& expect_field(const json& j, const char* key, const char* what) {
    expect_object(j, what);
    auto it = j.find(key);
    if (it == j.end()) malformed(std::string(what) + " is missing the field '" + key + "'");
    return *it;
}

void reject_unknown_keys(const json& j, std::initializer_list<const char*> keys,
                         const char* what) {
    for (auto it = j.begin(); it != j.end(); ++it) {
        bool known = false;
        for (const char* k : keys) {
            if (it.key() == k) {
                known = true;
                break;
            }
        }
        if (!known) malformed(std::string(what) + " has an unknown field '" + it.key() + "'");
    }
}

Poly poly_from_json(const json& j, const char* what) {
    expect_array(j, what);
    std::vector<Complex> c;
    for (const auto& e : j) c.push_back(complex_from_json(e));
    return Poly(std::move(c));
}

json poly_to_json(const Poly& p) {
    json a = json::array();
    for (const auto& c : p.coeffs()) a.push_back(complex_to_json(c));
    return a;
}

}  // namespace

Rational rational_from_json(const json& j) {
    if (j.is_number_integer()) return Rational(j.get<long long>());
    if (j.is_string()) return parse_rational(j.get<std::string>());
    malformed("expected an exact rational (integer or \"num/den\" string)");
}

json rational_to_json(const Rational& r) { return json(to_string(r)); }

Complex complex_from_json(const json& j) {
    if (j.is_number_integer() || j.is_string()) return Complex(rational_from_json(j));
    if (j.is_object()) {
        reject_unknown_keys(j, {"re", "im"}, "complex value");
        Rational re(0), im(0);
        if (auto it = j.find("re"); it != j.end()) re = rational_from_json(*it);
        if (auto it = j.find("im"); it != j.end()) im = rational_from_json(*it);
        return {std::move(re), std::move(im)};
    }
    malformed("expected a complex value (rational or {\"re\":..., \"im\":...})");
}

json complex_to_json(const Complex& z) {
    return json{{"re", to_string(z.re)}, {"im", to_string(z.im)}};
}

HankelKernel kernel_from_json(const json& j) {
    reject_unknown_keys(expect_object(j, "kernel"), {"terms"}, "kernel");
    const json& terms = expect_field(j, "terms", "kernel");
    expect_array(terms, "kernel 'terms'");
    std::vector<KernelTerm> out;
    for (const auto& t : terms) {
        reject_unknown_keys(expect_object(t, "kernel term"), {"alpha", "poly"}, "kernel term");
        out.push_back({complex_from_json(expect_field(t, "alpha", "kernel term")),
                       poly_from_json(expect_field(t, "poly", "kernel term"), "kernel 'poly'")});
    }
    return HankelKernel::canonicalize(out);
}

json kernel_to_json(const HankelKernel& k) {
    json terms = json::array();
    for (const auto& t : k.expanded_terms()) {
        terms.push_back(json{{"alpha", complex_to_json(t.alpha)}, {"poly", poly_to_json(t.poly)}});
    }
    return json{{"terms", std::move(terms)}};
}

LineSymbol line_from_json(const json& j) {
    reject_unknown_keys(expect_object(j, "line symbol"), {"terms"}, "line symbol");
    const json& terms = expect_field(j, "terms", "line symbol");
    expect_array(terms, "line symbol 'terms'");
    std::vector<LineTerm> out;
    for (const auto& t : terms) {
        reject_unknown_keys(expect_object(t, "line term"), {"alpha", "K", "Q"}, "line term");
        const json& kj = expect_field(t, "K", "line term");
        if (!kj.is_number_unsigned()) malformed("line term 'K' must be a non-negative integer");
        out.push_back({complex_from_json(expect_field(t, "alpha", "line term")),
                       kj.get<unsigned>(),
                       poly_from_json(expect_field(t, "Q", "line term"), "line term 'Q'")});
    }
    return LineSymbol::canonicalize(out);
}

json line_to_json(const LineSymbol& phi) {
    json terms = json::array();
    for (const auto& t : phi.expanded_terms()) {
        terms.push_back(json{{"alpha", complex_to_json(t.alpha)},
                             {"K", t.K},
                             {"Q", poly_to_json(t.Q)}});
    }
    return json{{"terms", std::move(terms)}};
}

CircleSymbol circle_from_json(const json& j) {
    reject_unknown_keys(expect_object(j, "circle symbol"), {"polynomial", "poles"},
                        "circle symbol");
    Poly poly;
    if (auto it = j.find("polynomial"); it != j.end()) {
        poly = poly_from_json(*it, "circle 'polynomial'");
    }
    std::vector<CirclePole> poles;
    if (auto it = j.find("poles"); it != j.end()) {
        expect_array(*it, "circle 'poles'");
        for (const auto& p : *it) {
            reject_unknown_keys(expect_object(p, "circle pole"), {"gamma", "K", "R"},
                                "circle pole");
            const json& kj = expect_field(p, "K", "circle pole");
            if (!kj.is_number_unsigned())
                malformed("circle pole 'K' must be a non-negative integer");
            poles.push_back({complex_from_json(expect_field(p, "gamma", "circle pole")),
                             kj.get<unsigned>(),
                             poly_from_json(expect_field(p, "R", "circle pole"), "pole 'R'")});
        }
    }
    return CircleSymbol::canonicalize(poly, poles);
}

json circle_to_json(const CircleSymbol& omega) {
    json poles = json::array();
    for (const auto& p : omega.expanded_poles()) {
        poles.push_back(json{{"gamma", complex_to_json(p.gamma)},
                             {"K", p.K},
                             {"R", poly_to_json(p.R)}});
    }
    return json{{"polynomial", poly_to_json(omega.polynomial_part())},
                {"poles", std::move(poles)}};
}

SequenceRep sequence_from_json(const json& j) {
    reject_unknown_keys(expect_object(j, "sequence"), {"tau", "geometric"}, "sequence");
    std::vector<Rational> tau;
    if (auto it = j.find("tau"); it != j.end()) {
        expect_array(*it, "sequence 'tau'");
        for (const auto& e : *it) tau.push_back(rational_from_json(e));
    }
    std::vector<GeometricTerm> geos;
    if (auto it = j.find("geometric"); it != j.end()) {
        expect_array(*it, "sequence 'geometric'");
        for (const auto& g : *it) {
            reject_unknown_keys(expect_object(g, "geometric term"), {"q", "T"}, "geometric term");
            geos.push_back({complex_from_json(expect_field(g, "q", "geometric term")),
                            poly_from_json(expect_field(g, "T", "geometric term"), "term 'T'")});
        }
    }
    return SequenceRep::canonicalize(tau, geos);
}

json sequence_to_json(const SequenceRep& kappa) {
    json tau = json::array();
    for (const auto& r : kappa.tau()) tau.push_back(rational_to_json(r));
    json geos = json::array();
    for (const auto& g : kappa.expanded_terms()) {
        geos.push_back(json{{"q", complex_to_json(g.q)}, {"T", poly_to_json(g.T)}});
    }
    return json{{"tau", std::move(tau)}, {"geometric", std::move(geos)}};
}

json inertia_report_to_json(const InertiaReport& report) {
    json breakdown = json::array();
    for (const auto& t : report.breakdown) {
        breakdown.push_back(json{
            {"kind", t.kind == TermInertia::Kind::Real ? "real" : "pair"},
            {"K", t.K},
            {"n_plus", t.n_plus},
            {"n_minus", t.n_minus},
        });
    }
    return json{{"n_plus", report.n_plus},
                {"n_minus", report.n_minus},
                {"rank", report.rank()},
                {"method", report.method},
                {"breakdown", std::move(breakdown)}};
}

json sign_matrix_to_json(const SignMatrix& S) {
    json blocks = json::array();
    for (const auto& b : S.blocks) {
        json rows = json::array();
        for (std::size_t i = 0; i < b.entries.rows(); ++i) {
            json row = json::array();
            for (std::size_t j = 0; j < b.entries.cols(); ++j) {
                row.push_back(complex_to_json(b.entries.at(i, j)));
            }
            rows.push_back(std::move(row));
        }
        blocks.push_back(json{
            {"kind", b.kind == SignMatrixBlock::Kind::Real ? "real" : "pair"},
            {"K", b.degree()},
            {"entries", std::move(rows)},
        });
    }
    return json{{"order", S.total_order()}, {"blocks", std::move(blocks)}};
}

json parse_json_text(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        malformed(std::string("invalid JSON: ") + e.what());
    }
}

std::string content_digest(const std::string& text) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : text) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return std::string(buf);
}

}  // namespace hankel
