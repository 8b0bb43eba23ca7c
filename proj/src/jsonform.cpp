#include "wpvol/jsonform.hpp"

#include <fstream>
#include <sstream>

namespace wpvol {

namespace {
constexpr int kCacheFormat = 1;
}

Json ring_to_json(const RingElem& e) {
    Json out = Json::array();
    const auto& c = e.coeffs();
    for (size_t k = 0; k < c.size(); ++k) {
        if (c[k].is_zero()) continue;
        out.push_back(Json::array({k, c[k].str()}));
    }
    return out;
}

RingElem ring_from_json(const Json& j) {
    std::vector<Rational> c;
    for (const auto& pair : j) {
        int k = pair.at(0).get<int>();
        Rational v = Rational::parse(pair.at(1).get<std::string>());
        if (k >= static_cast<int>(c.size())) c.resize(k + 1, Rational(0));
        c[k] = v;
    }
    return RingElem::from_coeffs(std::move(c));
}

Json poly_to_json(const MultiPoly& p) {
    Json out = Json::array();
    for (const auto& [e, c] : p.terms) {
        Json term;
        term["exp"] = e;
        term["coef"] = ring_to_json(c);
        out.push_back(std::move(term));
    }
    return out;
}

MultiPoly poly_from_json(const Json& j) {
    MultiPoly p;
    bool first = true;
    for (const auto& term : j) {
        std::vector<int> e = term.at("exp").get<std::vector<int>>();
        if (first) {
            p.nvars = static_cast<int>(e.size());
            first = false;
        }
        p.add_term(e, ring_from_json(term.at("coef")));
    }
    return p;
}

Json laurent_to_json(const LaurentPoly& p) {
    Json out = Json::array();
    for (const auto& [e, c] : p.terms) {
        Json term;
        term["exp"] = e;
        term["coef"] = ring_to_json(c);
        out.push_back(std::move(term));
    }
    return out;
}

namespace {

// rendering order: higher total grade first (pi^2 counts as grade 2), then
// lexicographic on the L-exponents, pi-powers last
struct RenderTerm {
    std::vector<int> exp;
    int pi2;
    Rational coef;
};

std::vector<RenderTerm> render_order(const MultiPoly& p) {
    std::vector<RenderTerm> ts;
    for (const auto& [e, c] : p.terms) {
        for (int k = 0; k <= c.deg(); ++k) {
            if (c.coeff(k).is_zero()) continue;
            ts.push_back({e, k, c.coeff(k)});
        }
    }
    auto grade = [](const RenderTerm& t) {
        int d = 2 * t.pi2;
        for (int v : t.exp) d += v;
        return d;
    };
    std::sort(ts.begin(), ts.end(), [&](const RenderTerm& a, const RenderTerm& b) {
        int ga = grade(a), gb = grade(b);
        if (ga != gb) return ga > gb;
        if (a.exp != b.exp) return a.exp > b.exp;
        return a.pi2 < b.pi2;
    });
    return ts;
}

BigInt lcm(const BigInt& a, const BigInt& b) {
    return a / boost::multiprecision::gcd(a, b) * b;
}

std::string render(const MultiPoly& p, bool latex) {
    if (p.is_zero()) return "0";
    auto ts = render_order(p);
    BigInt denom = 1;
    for (const auto& t : ts) denom = lcm(denom, t.coef.den());

    std::ostringstream os;
    bool first = true;
    for (const auto& t : ts) {
        BigInt c = t.coef.num() * (denom / t.coef.den());
        if (c == 0) continue;
        bool neg = c < 0;
        BigInt mag = neg ? BigInt(-c) : c;
        if (first) {
            if (neg) os << "-";
        } else {
            os << (neg ? " - " : " + ");
        }
        first = false;

        std::vector<std::string> factors;
        for (size_t i = 0; i < t.exp.size(); ++i) {
            if (t.exp[i] == 0) continue;
            std::ostringstream v;
            if (latex) {
                v << "L_" << (i + 1);
                if (t.exp[i] > 1) v << "^{" << t.exp[i] << "}";
            } else {
                v << "L" << (i + 1);
                if (t.exp[i] > 1) v << "^" << t.exp[i];
            }
            factors.push_back(v.str());
        }
        if (t.pi2 > 0) {
            std::ostringstream v;
            if (latex)
                v << "\\pi^{" << 2 * t.pi2 << "}";
            else
                v << "pi^" << 2 * t.pi2;
            factors.push_back(v.str());
        }

        if (factors.empty()) {
            os << mag;
        } else {
            if (mag != 1) os << mag << (latex ? "" : "*");
            for (size_t i = 0; i < factors.size(); ++i) {
                if (i) os << (latex ? " " : "*");
                os << factors[i];
            }
        }
    }
    std::string body = os.str();
    if (denom == 1) return body;
    bool multi_term = body.find(" + ") != std::string::npos ||
                      body.find(" - ") != std::string::npos;
    std::ostringstream out;
    if (latex)
        out << "\\frac{" << body << "}{" << denom << "}";
    else if (multi_term)
        out << "(" << body << ")/" << denom;
    else
        out << body << "/" << denom;
    return out.str();
}

}  // namespace

std::string poly_to_text(const MultiPoly& p) { return render(p, false); }
std::string poly_to_latex(const MultiPoly& p) { return render(p, true); }

std::string canonical_table_json(const VolumeTable& table) {
    Json root;
    root["tool"] = "wpvol";
    root["version"] = kEngineVersion;
    root["cache_format"] = kCacheFormat;
    Json entries = Json::object();
    for (const auto& [key, poly] : table.entries()) entries[key.str()] = poly_to_json(poly);
    root["entries"] = std::move(entries);
    return root.dump(1);
}

void save_table(const VolumeTable& table, const std::string& path) {
    std::ofstream os(path);
    if (!os) throw std::runtime_error("save_table: cannot open " + path);
    os << canonical_table_json(table) << "\n";
}

VolumeTable load_table(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw std::runtime_error("load_table: cannot open " + path);
    Json root = Json::parse(is);
    VolumeTable table;
    if (root.value("version", std::string()) != kEngineVersion ||
        root.value("cache_format", -1) != kCacheFormat)
        return table;  // stale cache: start fresh
    for (const auto& [keystr, polyjson] : root.at("entries").items()) {
        int g = 0, n = 0, s = 0;
        if (std::sscanf(keystr.c_str(), "%d,%d,%d", &g, &n, &s) != 3)
            throw std::runtime_error("load_table: bad key " + keystr);
        VolumeKey key{g, n, s != 0};
        MultiPoly poly = poly_from_json(polyjson);
        if (poly.nvars == 0 && poly.is_zero()) poly.nvars = n;
        check_volume_invariants(key, poly);
        table.insert(key, std::move(poly));
    }
    return table;
}

}  // namespace wpvol
