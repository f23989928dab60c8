#pragma once

// Exact sparse multivariate Laurent polynomials over the integers: the
// coefficient substrate for every invariant computed by this library.
//
// Variables are identified by VarId (d, y, x_i, u_i, S, T, or a named
// auxiliary).  Terms are kept in a canonical order (lexicographic on
// variable kind, index, exponent) so printing and equality are
// deterministic.  Integer coefficients are 64-bit and checked: arithmetic
// that would overflow throws instead of wrapping.

#include <cstdint>
#include <compare>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace unilink {

// ---------------------------------------------------------------------------
// checked 64-bit integers

struct overflow_error : std::runtime_error {
    overflow_error() : std::runtime_error("integer overflow in exact arithmetic") {}
};

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw overflow_error{};
    return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw overflow_error{};
    return r;
}

// ---------------------------------------------------------------------------
// variables

enum class VarKind : std::uint8_t { D = 0, Y = 1, X = 2, U = 3, S = 4, T = 5, Aux = 6 };

/// A variable of one of the rings in play.  X and U carry a 1-based link
/// component index; Aux carries a small name (used by the oracles, e.g. "t").
struct VarId {
    VarKind kind = VarKind::D;
    int index = 0;       // component index for X/U, 0 otherwise
    std::string name;    // Aux only

    static VarId d() { return {VarKind::D, 0, {}}; }
    static VarId y() { return {VarKind::Y, 0, {}}; }
    static VarId x(int i) { return {VarKind::X, i, {}}; }
    static VarId u(int i) { return {VarKind::U, i, {}}; }
    static VarId s() { return {VarKind::S, 0, {}}; }
    static VarId t() { return {VarKind::T, 0, {}}; }
    static VarId aux(std::string n) { return {VarKind::Aux, 0, std::move(n)}; }

    friend auto operator<=>(const VarId&, const VarId&) = default;

    std::string str() const;
};

/// Sorted exponent vector: the key of one term.  Exponents may be negative
/// and are never zero.
using Monomial = std::vector<std::pair<VarId, int>>;

Monomial mono_mul(const Monomial& a, const Monomial& b);
Monomial mono_pow(const Monomial& a, int e);

// ---------------------------------------------------------------------------
// the polynomial ring

/// Sparse Laurent polynomial with exact coefficients.  Coeff must provide
/// +, -, *, ==, and an is_zero test via `coeff_is_zero`.  Values are
/// immutable in spirit: all operations return new polynomials.
template <class Coeff>
class Poly {
  public:
    using Terms = std::map<Monomial, Coeff>;

    Poly() = default;
    explicit Poly(Coeff c) {
        if (!(c == Coeff{})) terms_[Monomial{}] = std::move(c);
    }
    static Poly monomial(Coeff c, Monomial m) {
        Poly p;
        if (!(c == Coeff{})) p.terms_[std::move(m)] = std::move(c);
        return p;
    }
    static Poly variable(VarId v, int exp = 1, Coeff c = Coeff(1)) {
        if (exp == 0) return Poly(std::move(c));
        return monomial(std::move(c), Monomial{{v, exp}});
    }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    bool operator==(const Poly& o) const { return terms_ == o.terms_; }

    Poly operator-() const {
        Poly r;
        for (auto& [m, c] : terms_) r.terms_[m] = -c;
        return r;
    }

    Poly& operator+=(const Poly& o) {
        for (auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        for (auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }

    friend Poly operator*(const Poly& a, const Poly& b) {
        Poly r;
        for (auto& [ma, ca] : a.terms_)
            for (auto& [mb, cb] : b.terms_) r.add_term(mono_mul(ma, mb), ca * cb);
        return r;
    }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    void add_term(const Monomial& m, const Coeff& c) {
        if (c == Coeff{}) return;
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, c);
        } else {
            it->second = it->second + c;
            if (it->second == Coeff{}) terms_.erase(it);
        }
    }

    /// Multiply by a single monomial (exponent shift) — exact and cheap.
    Poly shifted(const Monomial& m, const Coeff& c = Coeff(1)) const {
        Poly r;
        for (auto& [mm, cc] : terms_) r.terms_[mono_mul(mm, m)] = cc * c;
        return r;
    }

    /// True when the polynomial is c * single monomial with c = +-1.
    bool is_unit_monomial() const;

    /// Exponent of `v` in every term collected; used for degree queries.
    int degree_in(VarId v) const {
        int deg = 0;
        for (auto& [m, c] : terms_)
            for (auto& [vv, e] : m)
                if (vv == v && e > deg) deg = e;
        return deg;
    }

    std::vector<VarId> variables() const {
        std::vector<VarId> vs;
        for (auto& [m, c] : terms_)
            for (auto& [v, e] : m)
                if (std::find(vs.begin(), vs.end(), v) == vs.end()) vs.push_back(v);
        std::sort(vs.begin(), vs.end());
        return vs;
    }

  private:
    Terms terms_;
};

using Int = std::int64_t;

/// Checked-integer coefficient wrapper so Poly's +,* go through the
/// overflow-detecting paths.
struct Zc {
    Int v = 0;
    Zc() = default;
    Zc(Int x) : v(x) {}
    friend Zc operator+(Zc a, Zc b) { return Zc(checked_add(a.v, b.v)); }
    friend Zc operator-(Zc a, Zc b) { return Zc(checked_add(a.v, checked_mul(-1, b.v))); }
    friend Zc operator*(Zc a, Zc b) { return Zc(checked_mul(a.v, b.v)); }
    Zc operator-() const { return Zc(checked_mul(-1, v)); }
    friend bool operator==(Zc a, Zc b) { return a.v == b.v; }
};

using ZPoly = Poly<Zc>;

// ---------------------------------------------------------------------------
// constructors for the ring elements used everywhere

ZPoly zp_const(Int c);
ZPoly zp_mono(Int c, std::initializer_list<std::pair<VarId, int>> vars);
ZPoly zp_var(VarId v, int exp = 1);

/// (n)_base = 1 + base + ... + base^{n-1} for a monomial base.
ZPoly quantum_int(int n, const ZPoly& base);
/// (n)_base! = (1)_base * ... * (n)_base;  (0)! = 1.
ZPoly quantum_factorial(int n, const ZPoly& base);
/// [m]_q as a Laurent polynomial in S, with q = S^2:
/// [m] = S^{2(m-1)} + S^{2(m-3)} + ... + S^{-2(m-1)}.
ZPoly balanced_quantum(int m);
/// Balanced [m] in the engine variable d with q = d^{-2}.
ZPoly balanced_quantum_d(int m);
/// [m]_q! in d (q = d^{-2}); equals (m)_{d^4}! * d^{-m(m-1)}.
ZPoly balanced_qfactorial_d(int m);

/// m-th cyclotomic polynomial in T, by iterated exact division of T^m - 1.
ZPoly cyclotomic_poly(int m);

// ---------------------------------------------------------------------------
// divisibility

/// Exact division f / g when f is a polynomial in a single variable `v`
/// (other variables may appear only through the caller's grouping).
/// Returns nullopt when the division is not exact over Z.
std::optional<ZPoly> divide_exact_univariate(const ZPoly& f, const ZPoly& g, VarId v);

/// True iff f = g * h for some Laurent polynomial h.  g must be nonzero and
/// involve a single variable; f is grouped by the monomials in the other
/// variables and each coefficient polynomial is exact-divided.
bool divides(const ZPoly& g, const ZPoly& f);

/// The quotient f / g under the same hypotheses; throws if not divisible.
ZPoly divide(const ZPoly& g, const ZPoly& f);

// ---------------------------------------------------------------------------
// serialization (canonical text and JSON; bit-exact round trip)

std::string to_string(const ZPoly& p);
std::string to_json(const ZPoly& p);
ZPoly zpoly_from_json(const std::string& json_text);

}  // namespace unilink
