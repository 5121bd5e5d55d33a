#include "lexcoh/io.hpp"

#include <cctype>
#include <limits>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace lexcoh {

namespace {

std::string trim(const std::string& s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

// Comment-stripped, trimmed lines; blank lines dropped.
std::vector<std::string> content_lines(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (auto pos = line.find('#'); pos != std::string::npos)
            line.erase(pos);
        line = trim(line);
        if (!line.empty()) out.push_back(line);
    }
    return out;
}

// Character scanner for the generator grammar.
struct Cursor {
    const std::string& s;
    std::size_t i = 0;

    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i])))
            ++i;
    }
    char peek() {
        skip_ws();
        return i < s.size() ? s[i] : '\0';
    }
    bool eat(char c) {
        if (peek() != c) return false;
        ++i;
        return true;
    }
    bool at_digit() { return std::isdigit(static_cast<unsigned char>(peek())); }

    long long integer(const char* what) {
        skip_ws();
        std::size_t start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
            ++i;
        if (i == start)
            throw InputError(std::string("expected ") + what + " in '" + s +
                             "'");
        if (i - start > 12) throw InputError("integer too large in '" + s + "'");
        return std::stoll(s.substr(start, i - start));
    }
};

Monomial parse_monomial_factors(Cursor& cur, int n) {
    std::vector<int> e(static_cast<std::size_t>(n), 0);
    bool any = false;
    for (;;) {
        if (cur.peek() != 'X') {
            if (!any)
                throw InputError("expected a variable in '" + cur.s + "'");
            break;
        }
        ++cur.i;  // past 'X'; the index must follow immediately
        if (cur.i >= cur.s.size() ||
            !std::isdigit(static_cast<unsigned char>(cur.s[cur.i])))
            throw InputError("variable index must follow X in '" + cur.s + "'");
        long long idx = cur.integer("variable index");
        if (idx < 1 || idx > n)
            throw InputError("variable X" + std::to_string(idx) +
                             " outside ring with " + std::to_string(n) +
                             " variables");
        long long exp = 1;
        if (cur.eat('^')) {
            exp = cur.integer("exponent");
            if (exp > 1000000) throw InputError("exponent too large");
        }
        e[static_cast<std::size_t>(idx - 1)] += static_cast<int>(exp);
        any = true;
        if (!cur.eat('*')) break;
    }
    return Monomial::from_exponents(e);
}

ParsedPoly parse_generator(const std::string& text, int n) {
    Cursor cur{text};
    ParsedPoly poly;
    bool first = true;
    while (cur.peek() != '\0') {
        int sign = 1;
        if (cur.eat('-'))
            sign = -1;
        else if (!cur.eat('+') && !first)
            throw InputError("expected + or - between terms in '" + text + "'");
        first = false;

        Rat c(1);
        Monomial m = Monomial::unit(n);
        bool have_coeff = false;
        if (cur.at_digit()) {
            Int num(cur.integer("coefficient"));
            Int den(1);
            if (cur.eat('/')) den = Int(cur.integer("denominator"));
            if (den == 0) throw InputError("zero denominator in '" + text + "'");
            c = Rat(num, den);
            have_coeff = true;
        }
        if (have_coeff && cur.eat('*')) {
            m = parse_monomial_factors(cur, n);
        } else if (cur.peek() == 'X') {
            if (have_coeff)
                throw InputError("expected * between coefficient and monomial "
                                 "in '" + text + "'");
            m = parse_monomial_factors(cur, n);
        } else if (!have_coeff) {
            throw InputError("expected a term in '" + text + "'");
        }
        if (sign < 0) c = -c;
        if (c != 0) poly.push_back(ParsedTerm{c, m});
    }
    if (first) throw InputError("empty generator in ideal body");
    return poly;
}

std::string coeff_str(const Rat& c) {
    Int num = boost::multiprecision::numerator(c);
    Int den = boost::multiprecision::denominator(c);
    std::string s = num.str();
    if (den != 1) s += "/" + den.str();
    return s;
}

std::string generator_str(const ParsedPoly& g) {
    std::string s;
    for (std::size_t i = 0; i < g.size(); ++i) {
        Rat c = g[i].c;
        bool neg = c < 0;
        if (i == 0) {
            if (neg) s += "-";
        } else {
            s += neg ? " - " : " + ";
        }
        Rat a = neg ? Rat(-c) : c;
        if (a == 1 && !g[i].m.is_unit())
            s += g[i].m.str();
        else if (g[i].m.is_unit())
            s += coeff_str(a);
        else
            s += coeff_str(a) + "*" + g[i].m.str();
    }
    return s;
}

Json named_flags(const std::vector<std::pair<std::string, bool>>& flags) {
    Json arr = Json::array();
    for (const auto& [name, ok] : flags)
        arr.push_back(Json{{"name", name}, {"ok", ok}});
    return arr;
}

}  // namespace

Json json_int(const Int& v) {
    static const Int lo(std::numeric_limits<std::int64_t>::min());
    static const Int hi(std::numeric_limits<std::int64_t>::max());
    if (v >= lo && v <= hi) return Json(v.convert_to<std::int64_t>());
    return Json(v.str());
}

bool IdealFile::is_monomial() const {
    for (const auto& g : gens)
        if (g.size() != 1 || g[0].c != 1) return false;
    return true;
}

MonomialIdeal IdealFile::monomial_ideal() const {
    if (!is_monomial())
        throw InputError("ideal has non-monomial generators");
    std::vector<Monomial> ms;
    for (const auto& g : gens) ms.push_back(g[0].m);
    return MonomialIdeal(ctx, std::move(ms));
}

IdealFile parse_ideal_file(const std::string& text) {
    auto lines = content_lines(text);
    if (lines.empty()) throw InputError("empty ideal file");

    std::size_t at = 0;
    std::istringstream head(lines[at++]);
    std::string kw, fieldword;
    long long n = 0;
    if (!(head >> kw) || kw != "ring")
        throw InputError("ideal file must start with a ring header");
    if (!(head >> n) || n < 1)
        throw InputError("ring header needs a positive variable count");
    if (!(head >> fieldword))
        throw InputError("ring header needs a field (rationals or fp <p>)");

    IdealFile f;
    if (fieldword == "rationals") {
        f.ctx = RingContext::rationals(static_cast<int>(n));
    } else if (fieldword == "fp") {
        long long p = 0;
        if (!(head >> p)) throw InputError("fp header needs a prime modulus");
        f.ctx = RingContext::fp(static_cast<int>(n), p);
    } else {
        throw InputError("unknown field '" + fieldword + "'");
    }
    std::string extra;
    if (head >> extra)
        throw InputError("trailing text after ring header: '" + extra + "'");

    if (at < lines.size() && lines[at].rfind("label", 0) == 0 &&
        (lines[at].size() == 5 ||
         std::isspace(static_cast<unsigned char>(lines[at][5])))) {
        f.label = trim(lines[at].substr(5));
        ++at;
    }

    std::string body;
    for (; at < lines.size(); ++at) {
        if (!body.empty()) body += " ";
        body += lines[at];
    }
    body = trim(body);
    if (body.rfind("ideal", 0) != 0)
        throw InputError("expected an ideal(...) body");
    std::size_t open = body.find('(');
    std::size_t close = body.rfind(')');
    if (open == std::string::npos || close == std::string::npos ||
        close < open || !trim(body.substr(close + 1)).empty())
        throw InputError("malformed ideal(...) body");
    std::string inner = trim(body.substr(open + 1, close - open - 1));

    if (!inner.empty() && inner != "0") {
        std::size_t start = 0;
        while (start <= inner.size()) {
            std::size_t comma = inner.find(',', start);
            std::string piece =
                trim(comma == std::string::npos
                         ? inner.substr(start)
                         : inner.substr(start, comma - start));
            ParsedPoly g = parse_generator(piece, f.ctx.n);
            if (!g.empty()) f.gens.push_back(std::move(g));
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
    }
    return f;
}

IdealFile load_ideal_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot read ideal file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_ideal_file(buf.str());
}

std::string print_ideal_file(const IdealFile& f) {
    std::string s = "ring " + std::to_string(f.ctx.n);
    s += f.ctx.field == FieldKind::rationals
             ? std::string(" rationals")
             : " fp " + std::to_string(f.ctx.p);
    s += "\n";
    if (!f.label.empty()) s += "label " + f.label + "\n";
    if (f.gens.empty()) {
        s += "ideal(0)\n";
        return s;
    }
    s += "ideal(";
    for (std::size_t i = 0; i < f.gens.size(); ++i) {
        if (i) s += ", ";
        s += generator_str(f.gens[i]);
    }
    s += ")\n";
    return s;
}

IdealFile ideal_file(const MonomialIdeal& I, std::string label) {
    IdealFile f;
    f.ctx = I.ctx();
    f.label = std::move(label);
    for (const auto& m : I.gens())
        f.gens.push_back(ParsedPoly{ParsedTerm{Rat(1), m}});
    return f;
}

std::pair<long long, long long> parse_window(const std::string& text) {
    std::size_t colon = text.find(':');
    if (colon == std::string::npos)
        throw InputError("window must look like a:b, got '" + text + "'");
    auto num = [&](const std::string& part) {
        try {
            std::size_t used = 0;
            long long v = std::stoll(part, &used);
            if (used != part.size()) throw std::invalid_argument(part);
            return v;
        } catch (const std::exception&) {
            throw InputError("bad window bound '" + part + "'");
        }
    };
    long long a = num(trim(text.substr(0, colon)));
    long long b = num(trim(text.substr(colon + 1)));
    if (a > b) throw InputError("window bounds out of order");
    return {a, b};
}

std::string numerator_str(const std::vector<Int>& num) {
    std::string s;
    for (std::size_t d = 0; d < num.size(); ++d) {
        if (num[d] == 0) continue;
        Int a = num[d];
        bool neg = a < 0;
        if (neg) a = -a;
        if (s.empty()) {
            if (neg) s += "-";
        } else {
            s += neg ? "-" : "+";
        }
        if (d == 0)
            s += a.str();
        else {
            if (a != 1) s += a.str() + "*";
            s += d == 1 ? "t" : "t^" + std::to_string(d);
        }
    }
    return s.empty() ? "0" : s;
}

std::string series_str(const HilbertSeries& s) {
    return numerator_str(s.num) + " / (1-t)^" + std::to_string(s.n);
}

std::string polynomial_str(const HilbertPolynomial& p) {
    std::string s;
    for (int i = p.dim - 1; i >= 0; --i) {
        Int a = p.b[static_cast<std::size_t>(i)];
        if (a == 0) continue;
        bool neg = a < 0;
        if (neg) a = -a;
        if (s.empty()) {
            if (neg) s += "-";
        } else {
            s += neg ? "-" : "+";
        }
        if (i == 0)
            s += a.str();
        else {
            if (a != 1) s += a.str() + "*";
            s += "C(j+" + std::to_string(i) + "," + std::to_string(i) + ")";
        }
    }
    return s.empty() ? "0" : s;
}

Json polynomial_json(const HilbertPolynomial& p) {
    Json b = Json::array();
    for (const auto& c : p.b) b.push_back(json_int(c));
    return Json{{"dim", p.dim}, {"binomial_coeffs", std::move(b)},
                {"text", polynomial_str(p)}};
}

Json ideal_json(const MonomialIdeal& I) {
    Json gens = Json::array();
    for (const auto& m : I.gens()) gens.push_back(m.str());
    Json out{{"n", I.ctx().n},
             {"field", I.ctx().field == FieldKind::rationals ? "rationals"
                                                             : "fp"},
             {"generators", std::move(gens)}};
    if (I.ctx().field != FieldKind::rationals) out["p"] = I.ctx().p;
    return out;
}

std::string hf_csv(const HilbertSeries& s, long long jlo, long long jhi) {
    std::string out = "j,value\n";
    for (long long j = jlo; j <= jhi; ++j)
        out += std::to_string(j) + "," + s.hf(j).str() + "\n";
    return out;
}

Json table_json(const CohomologyTable& T,
                std::pair<long long, long long> window) {
    Json rows = Json::object();
    for (int k = 0; k <= T.n; ++k) {
        Json row = Json::object();
        for (long long j = window.first; j <= window.second; ++j) {
            Int h = T.entry(k, j);
            if (h != 0) row[std::to_string(j)] = json_int(h);
        }
        rows[std::to_string(k)] = std::move(row);
    }
    return Json{{"window", {window.first, window.second}},
                {"rows", std::move(rows)}};
}

std::string table_csv(const CohomologyTable& T,
                      std::pair<long long, long long> window) {
    std::string out = "k,j,h\n";
    for (int k = 0; k <= T.n; ++k)
        for (long long j = window.first; j <= window.second; ++j)
            out += std::to_string(k) + "," + std::to_string(j) + "," +
                   T.entry(k, j).str() + "\n";
    return out;
}

Json series_json(const HilbertSeries& s) {
    Json num = Json::array();
    for (const auto& c : s.num) num.push_back(json_int(c));
    return Json{{"n", s.n}, {"numerator", std::move(num)},
                {"text", series_str(s)}};
}

Json bw_json(const BWPolynomial& B) {
    Json layers = Json::array();
    for (std::size_t k = 0; k < B.wk.size(); ++k) {
        if (B.wk[k].is_zero()) continue;
        Json coeffs = Json::array();
        for (long long d = B.wk[k].lo(); d <= B.wk[k].hi(); ++d)
            coeffs.push_back(json_int(B.wk[k].coeff(d)));
        layers.push_back(Json{{"k", k},
                              {"lo", B.wk[k].lo()},
                              {"coeffs", std::move(coeffs)}});
    }
    return Json{{"text", B.str()}, {"layers", std::move(layers)}};
}

Json report_json(const EquivalenceReport& r) {
    return Json{{"check", r.check},
                {"instance", r.instance},
                {"conditions", named_flags(r.conditions)},
                {"side_checks", named_flags(r.side_checks)},
                {"all_equal", r.all_equal},
                {"all_true", r.all_true},
                {"note", r.note},
                {"ok", r.ok()}};
}

Json report_json(const TransferReport& r) {
    return Json{{"check", r.check},
                {"instance", r.instance},
                {"hypothesis_at", r.hypothesis_at},
                {"violations", r.violations},
                {"side_checks", named_flags(r.side_checks)},
                {"ok", r.ok}};
}

Json report_json(const GinStructureReport& r) {
    return Json{{"check", "gin-structure"},
                {"instance", r.instance},
                {"idempotent", r.idempotent},
                {"saturation_commutes", r.saturation_commutes},
                {"weakly_stable_output", r.weakly_stable_output},
                {"hyperplane_restriction", r.hyperplane_restriction},
                {"critical_instance", r.critical_instance},
                {"critical_gin_is_lex", r.critical_gin_is_lex},
                {"note", r.note},
                {"ok", r.ok()}};
}

Json witness_json(const CancellationWitness& w) {
    Json cols = Json::array();
    for (std::size_t idx = 0; idx < w.cols.size(); ++idx) {
        Json e = Json::array();
        for (const auto& v : w.cols[idx]) e.push_back(json_int(v));
        cols.push_back(Json{{"j", w.jlo + static_cast<long long>(idx)},
                            {"e", std::move(e)}});
    }
    Json out{{"check", "cancellation"},
             {"window", {w.jlo, w.jhi}},
             {"ok", w.ok},
             {"columns", std::move(cols)}};
    if (!w.ok) out["bad_j"] = w.bad_j;
    return out;
}

}  // namespace lexcoh
