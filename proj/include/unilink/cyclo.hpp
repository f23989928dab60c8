#pragma once

// Arithmetic in the cyclotomic fields Q[T]/Phi_m(T), with exact rational
// coefficients.  These are the coefficient rings of the root-of-unity
// specializations: T plays xi_{2N}^{...} via T = primitive (4N)-th root for
// the level-N maps.  Elements are stored as the canonical remainder modulo
// Phi_m, so equality is coefficient-wise.

#include <complex>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "unilink/laurent.hpp"

namespace unilink {

using Rat = boost::multiprecision::cpp_rational;

class CycloField;

/// One element of Q[T]/Phi_m(T): a coefficient vector of length deg Phi_m.
struct CycloElem {
    const CycloField* field = nullptr;
    std::vector<Rat> c;  // c[k] multiplies T^k, size = deg Phi_m

    bool is_zero() const;
    bool operator==(const CycloElem& o) const { return c == o.c; }
};

/// The field Q[T]/Phi_m(T); owns the reduction data and the power table of
/// T (T is a unit: Phi_m has unit constant term for m > 1).
class CycloField {
  public:
    explicit CycloField(int m);

    int modulus() const { return m_; }
    int degree() const { return deg_; }

    CycloElem zero() const;
    CycloElem one() const { return from_int(1); }
    CycloElem from_int(Int v) const;
    CycloElem from_rat(const Rat& v) const;
    /// T^k for any integer k (negative powers via T^m = 1).
    CycloElem t_pow(long long k) const;

    CycloElem add(const CycloElem& a, const CycloElem& b) const;
    CycloElem sub(const CycloElem& a, const CycloElem& b) const;
    CycloElem neg(const CycloElem& a) const;
    CycloElem mul(const CycloElem& a, const CycloElem& b) const;
    CycloElem mul_rat(const CycloElem& a, const Rat& r) const;
    /// Multiplicative inverse (Q[T]/Phi_m is a field for the moduli used
    /// here); throws on zero.
    CycloElem inverse(const CycloElem& a) const;

    /// Numeric value at T = e^{2 pi i / m}; used only for the floating
    /// sanity cross-check of the ring axioms.
    std::complex<double> to_complex(const CycloElem& a) const;

  private:
    int m_;
    int deg_;
    std::vector<Rat> phi_;                     // ascending, monic, length deg_+1
    std::vector<std::vector<Rat>> tpow_mod_;   // T^k mod Phi for k = 0..m-1
    void reduce(std::vector<Rat>& v) const;
};

}  // namespace unilink
