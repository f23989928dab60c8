#include "unilink/cyclo.hpp"

#include <cmath>

namespace unilink {

bool CycloElem::is_zero() const {
    for (auto& v : c)
        if (v != 0) return false;
    return true;
}

CycloField::CycloField(int m) : m_(m) {
    ZPoly phi = cyclotomic_poly(m);
    deg_ = phi.degree_in(VarId::t());
    phi_.assign(deg_ + 1, Rat(0));
    for (auto& [mon, coef] : phi.terms()) {
        int e = mon.empty() ? 0 : mon[0].second;
        phi_[e] = Rat(coef.v);
    }
    // power table T^k mod Phi for k in [0, m)
    tpow_mod_.resize(m_);
    std::vector<Rat> cur(deg_, Rat(0));
    cur[0] = 1;
    for (int k = 0; k < m_; ++k) {
        tpow_mod_[k] = cur;
        // multiply by T
        std::vector<Rat> nxt(deg_ + 1, Rat(0));
        for (int i = 0; i < deg_; ++i) nxt[i + 1] = cur[i];
        reduce(nxt);
        nxt.resize(deg_);
        cur = nxt;
    }
}

void CycloField::reduce(std::vector<Rat>& v) const {
    for (int i = int(v.size()) - 1; i >= deg_; --i) {
        Rat c = v[i];
        if (c == 0) continue;
        v[i] = 0;
        for (int j = 0; j < deg_; ++j) v[i - deg_ + j] -= c * phi_[j];
    }
    v.resize(deg_);
}

CycloElem CycloField::zero() const { return {this, std::vector<Rat>(deg_, Rat(0))}; }

CycloElem CycloField::from_int(Int v) const {
    auto e = zero();
    e.c[0] = Rat(v);
    return e;
}

CycloElem CycloField::from_rat(const Rat& v) const {
    auto e = zero();
    e.c[0] = v;
    return e;
}

CycloElem CycloField::t_pow(long long k) const {
    long long r = k % m_;
    if (r < 0) r += m_;
    return {this, tpow_mod_[std::size_t(r)]};
}

CycloElem CycloField::add(const CycloElem& a, const CycloElem& b) const {
    auto e = a;
    for (int i = 0; i < deg_; ++i) e.c[i] += b.c[i];
    return e;
}

CycloElem CycloField::sub(const CycloElem& a, const CycloElem& b) const {
    auto e = a;
    for (int i = 0; i < deg_; ++i) e.c[i] -= b.c[i];
    return e;
}

CycloElem CycloField::neg(const CycloElem& a) const {
    auto e = a;
    for (auto& v : e.c) v = -v;
    return e;
}

CycloElem CycloField::mul(const CycloElem& a, const CycloElem& b) const {
    std::vector<Rat> prod(2 * deg_ - 1, Rat(0));
    for (int i = 0; i < deg_; ++i) {
        if (a.c[i] == 0) continue;
        for (int j = 0; j < deg_; ++j) {
            if (b.c[j] == 0) continue;
            prod[i + j] += a.c[i] * b.c[j];
        }
    }
    reduce(prod);
    return {this, std::move(prod)};
}

CycloElem CycloField::mul_rat(const CycloElem& a, const Rat& r) const {
    auto e = a;
    for (auto& v : e.c) v *= r;
    return e;
}

CycloElem CycloField::inverse(const CycloElem& a) const {
    if (a.is_zero()) throw std::invalid_argument("cyclotomic inverse of zero");
    // extended Euclid in Q[T] for (a, Phi_m)
    std::vector<Rat> r0 = phi_;                  // degree deg_
    std::vector<Rat> r1 = a.c;                   // degree < deg_
    while (!r1.empty() && r1.back() == 0) r1.pop_back();
    std::vector<Rat> s0{}, s1{Rat(1)};           // coefficients of `a`
    auto degree = [](const std::vector<Rat>& p) { return int(p.size()) - 1; };
    while (degree(r1) > 0) {
        // divide r0 by r1
        std::vector<Rat> q(std::max<std::size_t>(1, r0.size() - r1.size() + 1), Rat(0));
        std::vector<Rat> rem = r0;
        for (int i = int(rem.size()) - int(r1.size()); i >= 0; --i) {
            Rat qc = rem[i + r1.size() - 1] / r1.back();
            q[i] = qc;
            for (std::size_t j = 0; j < r1.size(); ++j) rem[i + j] -= qc * r1[j];
        }
        while (!rem.empty() && rem.back() == 0) rem.pop_back();
        // s_{k+1} = s_{k-1} - q * s_k
        std::vector<Rat> s2(std::max(s0.size(), q.size() + s1.size()), Rat(0));
        for (std::size_t i = 0; i < s0.size(); ++i) s2[i] = s0[i];
        for (std::size_t i = 0; i < q.size(); ++i)
            for (std::size_t j = 0; j < s1.size(); ++j) s2[i + j] -= q[i] * s1[j];
        while (!s2.empty() && s2.back() == 0) s2.pop_back();
        r0 = r1;
        r1 = rem;
        s0 = s1;
        s1 = s2;
        if (r1.empty()) throw std::logic_error("cyclotomic inverse: gcd not constant");
    }
    // r1 is a nonzero constant: a * s1 = r1 (mod Phi)
    Rat inv_c = Rat(1) / r1[0];
    std::vector<Rat> out(deg_, Rat(0));
    for (std::size_t i = 0; i < s1.size() && i < out.size(); ++i) out[i] = s1[i] * inv_c;
    if (s1.size() > std::size_t(deg_)) {
        std::vector<Rat> big(s1.begin(), s1.end());
        for (auto& v : big) v *= inv_c;
        reduce(big);
        out = big;
    }
    return {this, std::move(out)};
}

std::complex<double> CycloField::to_complex(const CycloElem& a) const {
    std::complex<double> z(0.0, 0.0);
    double ang = 2.0 * M_PI / double(m_);
    for (int k = 0; k < deg_; ++k) {
        double co = double(a.c[k].convert_to<double>());
        z += co * std::complex<double>(std::cos(ang * k), std::sin(ang * k));
    }
    return z;
}

}  // namespace unilink
