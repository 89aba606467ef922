#include "hml/io.hpp"

#include <fstream>
#include <sstream>

namespace hml {

namespace {

std::vector<const NumberField*> levels_of(const FieldPtr& F) {
    std::vector<const NumberField*> lv;
    for (const NumberField* L = F.get(); L && !L->is_rationals(); L = L->base().get()) lv.push_back(L);
    return {lv.rbegin(), lv.rend()};
}

mpq_class parse_q(const json& j) {
    if (j.is_number_integer()) return mpq_class(static_cast<long>(j.get<i64>()));
    if (!j.is_string()) throw SchemaViolation("rational must be a string or integer");
    mpq_class q;
    if (q.set_str(j.get<std::string>(), 10) != 0) throw SchemaViolation("bad rational '" + j.get<std::string>() + "'");
    q.canonicalize();
    return q;
}

const json& need(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw SchemaViolation(std::string("missing key '") + key + "'");
    return j.at(key);
}

} // namespace

json elem_to_json(const NFElem& x) {
    json c = json::array();
    for (auto& q : x.coords()) c.push_back(q.get_str());
    return c;
}

NFElem elem_from_json(const json& j, const FieldPtr& F) {
    if (!j.is_array()) throw SchemaViolation("element must be a coordinate array");
    if (static_cast<int>(j.size()) != F->degree())
        throw SchemaViolation("element has " + std::to_string(j.size()) + " coordinates, field degree " + std::to_string(F->degree()));
    std::vector<mpq_class> c;
    for (auto& x : j) c.push_back(parse_q(x));
    return NFElem(F, std::move(c));
}

json field_to_json(const FieldPtr& F) {
    json out = json::array();
    for (auto* L : levels_of(F)) {
        json mp = json::array();
        for (auto& c : L->minpoly()) mp.push_back(elem_to_json(c));
        out.push_back({{"var", L->var()}, {"minpoly", mp}});
    }
    return out;
}

FieldPtr field_from_json(const json& j) {
    if (!j.is_array()) throw SchemaViolation("field must be an array of levels");
    FieldPtr F = NumberField::rationals();
    for (auto& lv : j) {
        auto& mp = need(lv, "minpoly");
        if (!mp.is_array() || mp.empty()) throw SchemaViolation("minpoly must be a nonempty array");
        std::vector<NFElem> low;
        for (auto& c : mp) low.push_back(elem_from_json(c, F));
        F = NumberField::extend(F, std::move(low), need(lv, "var").get<std::string>());
    }
    return F;
}

json qexp_to_json(const QExp& f) {
    json c = json::array();
    for (auto& [l, v] : f.coeffs()) c.push_back({l, elem_to_json(v)});
    return {{"field", field_to_json(f.field())}, {"den", f.den()}, {"prec", f.prec().get_str()}, {"coeffs", c}};
}

QExp qexp_from_json(const json& j) {
    try {
        FieldPtr F = field_from_json(need(j, "field"));
        const i64 den = need(j, "den").get<i64>();
        if (den < 1) throw SchemaViolation("den must be positive");
        QExp f(F, den, parse_q(need(j, "prec")));
        for (auto& e : need(j, "coeffs")) {
            if (!e.is_array() || e.size() != 2) throw SchemaViolation("coefficient entries are [key, coords]");
            const i64 l = e[0].get<i64>();
            if (l < 0 || !f.known(l)) throw SchemaViolation("coefficient key " + std::to_string(l) + " outside precision");
            f.set(l, elem_from_json(e[1], F));
        }
        return f;
    } catch (const json::exception& e) {
        throw SchemaViolation(e.what());
    }
}

json alpha_table_json(const SpecialJacobiForm<NFElem>& phi) {
    json a = json::array();
    for (auto& x : phi.alpha) a.push_back(elem_to_json(x));
    json field = phi.alpha.empty() ? json::array() : field_to_json(phi.alpha[0].field());
    return {{"D", phi.D}, {"k", phi.k}, {"N", phi.N}, {"cap", phi.cap()}, {"field", field}, {"alpha", a}};
}

json scalar_json(const NFElem& x) { return elem_to_json(x); }
json scalar_json(const PadicScalar& x) {
    json c = json::array();
    for (auto v : x.coords()) c.push_back(v);
    return c;
}

std::string herm_csv(const QuadField& F, const HermForm<NFElem>& H) {
    std::ostringstream os;
    os << "# derived from the JSON table; C printed as doubles per field coordinate (lossy)\n";
    os << "n,m,x,y,detD,eps,C\n";
    os.precision(12);
    for (auto& [T, v] : H.table) {
        os << T.n << ',' << T.m << ',' << T.alpha.x << ',' << T.alpha.y << ',' << det_D(F, T) << ',' << eps(F, T) << ',';
        for (size_t i = 0; i < v.coords().size(); ++i) os << (i ? ";" : "") << v.coords()[i].get_d();
        os << '\n';
    }
    return os.str();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot read " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& body) {
    std::ofstream out(path);
    if (!out) throw ConfigError("cannot write " + path);
    out << body;
}

} // namespace hml
