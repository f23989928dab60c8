#include "unilink/laurent.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"

namespace unilink {

std::string VarId::str() const {
    switch (kind) {
        case VarKind::D: return "d";
        case VarKind::Y: return "y";
        case VarKind::X: return "x" + std::to_string(index);
        case VarKind::U: return "u" + std::to_string(index);
        case VarKind::S: return "S";
        case VarKind::T: return "T";
        case VarKind::Aux: return name;
    }
    return "?";
}

Monomial mono_mul(const Monomial& a, const Monomial& b) {
    Monomial r;
    r.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i].first < b[j].first) {
            r.push_back(a[i++]);
        } else if (b[j].first < a[i].first) {
            r.push_back(b[j++]);
        } else {
            int e = a[i].second + b[j].second;
            if (e != 0) r.emplace_back(a[i].first, e);
            ++i, ++j;
        }
    }
    while (i < a.size()) r.push_back(a[i++]);
    while (j < b.size()) r.push_back(b[j++]);
    return r;
}

Monomial mono_pow(const Monomial& a, int e) {
    if (e == 0) return {};
    Monomial r;
    r.reserve(a.size());
    for (auto& [v, k] : a) r.emplace_back(v, k * e);
    return r;
}

template <>
bool Poly<Zc>::is_unit_monomial() const {
    return terms_.size() == 1 &&
           (terms_.begin()->second.v == 1 || terms_.begin()->second.v == -1);
}

ZPoly zp_const(Int c) { return ZPoly(Zc(c)); }

ZPoly zp_mono(Int c, std::initializer_list<std::pair<VarId, int>> vars) {
    Monomial m;
    for (auto& [v, e] : vars)
        if (e != 0) m.emplace_back(v, e);
    std::sort(m.begin(), m.end());
    return ZPoly::monomial(Zc(c), std::move(m));
}

ZPoly zp_var(VarId v, int exp) { return ZPoly::variable(v, exp); }

ZPoly quantum_int(int n, const ZPoly& base) {
    ZPoly r;
    ZPoly pw = zp_const(1);
    for (int t = 0; t < n; ++t) {
        r += pw;
        pw *= base;
    }
    return r;
}

ZPoly quantum_factorial(int n, const ZPoly& base) {
    ZPoly r = zp_const(1);
    for (int t = 1; t <= n; ++t) r *= quantum_int(t, base);
    return r;
}

ZPoly balanced_quantum(int m) {
    ZPoly r;
    for (int t = 0; t < m; ++t) r += zp_var(VarId::s(), 2 * (m - 1 - 2 * t));
    return r;
}

ZPoly balanced_quantum_d(int m) {
    ZPoly r;
    for (int t = 0; t < m; ++t) r += zp_var(VarId::d(), -2 * (m - 1 - 2 * t));
    return r;
}

ZPoly balanced_qfactorial_d(int m) {
    ZPoly r = zp_const(1);
    for (int t = 1; t <= m; ++t) r *= balanced_quantum_d(t);
    return r;
}

namespace {

// dense coefficient list of a univariate Laurent polynomial, plus offset
struct Dense {
    std::vector<Int> c;  // c[i] is the coefficient of v^{i+lo}
    int lo = 0;
};

Dense to_dense(const ZPoly& p, VarId v) {
    int lo = 0, hi = 0;
    bool first = true;
    for (auto& [m, c] : p.terms()) {
        int e = 0;
        for (auto& [vv, ee] : m) {
            if (vv == v) {
                e = ee;
            } else {
                throw std::invalid_argument("polynomial is not univariate in " + v.str());
            }
        }
        if (first) {
            lo = hi = e;
            first = false;
        } else {
            lo = std::min(lo, e);
            hi = std::max(hi, e);
        }
    }
    Dense d;
    d.lo = lo;
    d.c.assign(p.is_zero() ? 1 : hi - lo + 1, 0);
    for (auto& [m, c] : p.terms()) {
        int e = 0;
        for (auto& [vv, ee] : m) e = ee;
        d.c[e - lo] = c.v;
    }
    return d;
}

ZPoly from_dense(const Dense& d, VarId v) {
    ZPoly p;
    for (std::size_t i = 0; i < d.c.size(); ++i)
        if (d.c[i] != 0) p += zp_var(v, int(i) + d.lo) * zp_const(d.c[i]);
    return p;
}

}  // namespace

ZPoly cyclotomic_poly(int m) {
    if (m < 1) throw std::invalid_argument("cyclotomic_poly: m must be >= 1");
    VarId T = VarId::t();
    // T^m - 1, then divide off Phi_k for every proper divisor k of m.
    ZPoly num = zp_var(T, m) - zp_const(1);
    for (int k = 1; k < m; ++k) {
        if (m % k != 0) continue;
        auto q = divide_exact_univariate(num, cyclotomic_poly(k), T);
        if (!q) throw std::logic_error("cyclotomic division failed");
        num = *q;
    }
    return num;
}

std::optional<ZPoly> divide_exact_univariate(const ZPoly& f, const ZPoly& g, VarId v) {
    if (g.is_zero()) throw std::invalid_argument("division by zero polynomial");
    if (f.is_zero()) return ZPoly{};
    Dense df = to_dense(f, v), dg = to_dense(g, v);
    while (!dg.c.empty() && dg.c.back() == 0) dg.c.pop_back();
    if (df.c.size() < dg.c.size()) return std::nullopt;
    std::vector<Int> q(df.c.size() - dg.c.size() + 1, 0);
    std::vector<Int> rem = df.c;
    Int lead = dg.c.back();
    for (int i = int(q.size()) - 1; i >= 0; --i) {
        Int top = rem[i + dg.c.size() - 1];
        if (top % lead != 0) return std::nullopt;
        Int qi = top / lead;
        q[i] = qi;
        for (std::size_t j = 0; j < dg.c.size(); ++j)
            rem[i + j] = checked_add(rem[i + j], checked_mul(-qi, dg.c[j]));
    }
    for (Int r : rem)
        if (r != 0) return std::nullopt;
    Dense dq{std::move(q), df.lo - dg.lo};
    return from_dense(dq, v);
}

namespace {

// Split f by the monomials in variables absent from g; returns the list of
// (outer monomial, inner univariate polynomial in v).
std::vector<std::pair<Monomial, ZPoly>> group_by_other_vars(const ZPoly& f, VarId v) {
    std::map<Monomial, ZPoly> groups;
    for (auto& [m, c] : f.terms()) {
        Monomial outer, inner;
        for (auto& [vv, e] : m) (vv == v ? inner : outer).emplace_back(vv, e);
        groups[outer].add_term(inner, c);
    }
    return {groups.begin(), groups.end()};
}

VarId single_variable_of(const ZPoly& g) {
    auto vs = g.variables();
    if (vs.size() > 1)
        throw std::invalid_argument("divides: generator must involve a single variable");
    return vs.empty() ? VarId::d() : vs[0];
}

}  // namespace

bool divides(const ZPoly& g, const ZPoly& f) {
    if (g.is_zero()) throw std::invalid_argument("divides: zero generator");
    VarId v = single_variable_of(g);
    for (auto& [outer, inner] : group_by_other_vars(f, v))
        if (!divide_exact_univariate(inner, g, v)) return false;
    return true;
}

ZPoly divide(const ZPoly& g, const ZPoly& f) {
    if (g.is_zero()) throw std::invalid_argument("divide: zero generator");
    VarId v = single_variable_of(g);
    ZPoly out;
    for (auto& [outer, inner] : group_by_other_vars(f, v)) {
        auto q = divide_exact_univariate(inner, g, v);
        if (!q) throw std::invalid_argument("divide: not divisible");
        out += q->shifted(outer);
    }
    return out;
}

std::string to_string(const ZPoly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [m, c] : p.terms()) {
        Int cv = c.v;
        if (first) {
            if (cv < 0) os << "-";
            first = false;
        } else {
            os << (cv < 0 ? " - " : " + ");
        }
        Int a = cv < 0 ? -cv : cv;
        bool printed = false;
        if (a != 1 || m.empty()) {
            os << a;
            printed = true;
        }
        for (auto& [v, e] : m) {
            if (printed) os << "*";
            os << v.str();
            if (e != 1) os << "^" << e;
            printed = true;
        }
    }
    return os.str();
}

std::string to_json(const ZPoly& p) {
    nlohmann::json terms = nlohmann::json::array();
    for (auto& [m, c] : p.terms()) {
        nlohmann::json vars = nlohmann::json::object();
        for (auto& [v, e] : m) vars[v.str()] = e;
        terms.push_back(nlohmann::json::array({c.v, vars}));
    }
    return terms.dump();
}

namespace {

VarId varid_from_string(const std::string& s) {
    if (s == "d") return VarId::d();
    if (s == "y") return VarId::y();
    if (s == "S") return VarId::s();
    if (s == "T") return VarId::t();
    if (s.size() >= 2 && (s[0] == 'x' || s[0] == 'u')) {
        bool digits = std::all_of(s.begin() + 1, s.end(), [](char ch) { return std::isdigit(ch); });
        if (digits) {
            int idx = std::stoi(s.substr(1));
            return s[0] == 'x' ? VarId::x(idx) : VarId::u(idx);
        }
    }
    return VarId::aux(s);
}

}  // namespace

ZPoly zpoly_from_json(const std::string& json_text) {
    auto j = nlohmann::json::parse(json_text);
    ZPoly p;
    for (auto& term : j) {
        Int c = term.at(0).get<Int>();
        Monomial m;
        for (auto& [k, v] : term.at(1).items()) m.emplace_back(varid_from_string(k), v.get<int>());
        std::sort(m.begin(), m.end());
        p.add_term(m, Zc(c));
    }
    return p;
}

}  // namespace unilink
